#ifndef MSLAB_LINALG_HPP
#define MSLAB_LINALG_HPP

// Dense Hermitian linear algebra on small matrices (N <= 512):
// deterministic cyclic Jacobi eigendecomposition, inversion and solves
// through the eigensystem.  Matrices are row-major std::vector<cplx>.

#include <cstddef>
#include <vector>

#include "mslab/common.hpp"

namespace mslab {

struct EigenResult {
  std::size_t n = 0;
  std::vector<double> values;   // ascending
  std::vector<cplx> vectors;    // row-major, column j is the j-th eigenvector
  int sweeps = 0;
  double off_norm = 0.0;        // final off-diagonal Frobenius norm
};

// Cyclic-by-rows Jacobi with fixed sweep order; deterministic for a given
// input.  Throws NumericError if it fails to meet the residual contract.
EigenResult hermitian_eigen(const std::vector<cplx>& a, std::size_t n);

// max-norm of A*V - V*diag(values); the residual contract is <= 1e-10
// relative to the largest |eigenvalue|.
double eigen_residual(const std::vector<cplx>& a, const EigenResult& e);

// inverse through the eigensystem; throws NumericError when the smallest
// |eigenvalue| is below sing_tol.
std::vector<cplx> hermitian_inverse(const std::vector<cplx>& a, std::size_t n,
                                    double sing_tol = 1e-10);

// solve A x = b through the eigensystem (same singularity guard).
std::vector<cplx> hermitian_solve(const std::vector<cplx>& a, std::size_t n,
                                  const std::vector<cplx>& b,
                                  double sing_tol = 1e-10);

std::vector<cplx> mat_vec(const std::vector<cplx>& a, std::size_t n,
                          const std::vector<cplx>& x);

inline cplx dot(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  // <x, y> = sum x_i conj(y_i)
  cplx s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

}  // namespace mslab

#endif
