#include "mslab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mslab {

namespace {

double off_diag_norm(const std::vector<cplx>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * std::norm(a[p * n + q]);
  return std::sqrt(s);
}

double frobenius(const std::vector<cplx>& a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

EigenResult hermitian_eigen(const std::vector<cplx>& a_in, std::size_t n) {
  if (n == 0) throw ConfigError("hermitian_eigen: empty matrix");
  if (n > 512) throw ConfigError("hermitian_eigen: size beyond the supported 512");
  if (a_in.size() != n * n) throw ConfigError("hermitian_eigen: size mismatch");

  std::vector<cplx> a = a_in;
  // symmetrize defensively: work on (A + A*)/2 so tiny assembly asymmetry
  // cannot break the rotations
  for (std::size_t p = 0; p < n; ++p) {
    a[p * n + p] = cplx(a[p * n + p].real(), 0.0);
    for (std::size_t q = p + 1; q < n; ++q) {
      cplx m = 0.5 * (a[p * n + q] + std::conj(a[q * n + p]));
      a[p * n + q] = m;
      a[q * n + p] = std::conj(m);
    }
  }

  std::vector<cplx> v(n * n, cplx(0));
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double fro = std::max(frobenius(a), 1e-300);
  const double tol = 1e-15 * fro;
  const int max_sweeps = 128;
  int sweep = 0;

  for (; sweep < max_sweeps && off_diag_norm(a, n) > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx apq = a[p * n + q];
        double m = std::abs(apq);
        if (m <= 1e-300) continue;
        cplx u = apq / m;  // phase so that apq = m * u
        double app = a[p * n + p].real();
        double aqq = a[q * n + q].real();
        double tau = (aqq - app) / (2.0 * m);
        double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        // plane rotation G restricted to (p,q):
        //   G_pp = c          G_pq = s
        //   G_qp = -s*conj(u) G_qq = c*conj(u)
        const cplx gqp = -s * std::conj(u);
        const cplx gqq = c * std::conj(u);

        // A <- G^* A G : first columns (A G), then rows (G^* A)
        for (std::size_t i = 0; i < n; ++i) {
          cplx aip = a[i * n + p], aiq = a[i * n + q];
          a[i * n + p] = aip * c + aiq * gqp;
          a[i * n + q] = aip * s + aiq * gqq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          cplx apj = a[p * n + j], aqj = a[q * n + j];
          a[p * n + j] = c * apj + std::conj(gqp) * aqj;
          a[q * n + j] = s * apj + std::conj(gqq) * aqj;
        }
        a[p * n + p] = cplx(a[p * n + p].real(), 0.0);
        a[q * n + q] = cplx(a[q * n + q].real(), 0.0);
        a[p * n + q] = cplx(0.0, 0.0);
        a[q * n + p] = cplx(0.0, 0.0);

        // V <- V G
        for (std::size_t i = 0; i < n; ++i) {
          cplx vip = v[i * n + p], viq = v[i * n + q];
          v[i * n + p] = vip * c + viq * gqp;
          v[i * n + q] = vip * s + viq * gqq;
        }
      }
    }
  }

  EigenResult r;
  r.n = n;
  r.sweeps = sweep;
  r.off_norm = off_diag_norm(a, n);
  if (r.off_norm > 1e-10 * fro)
    throw NumericError("hermitian_eigen: Jacobi sweeps failed to converge");

  // sort ascending; stable index tie-break keeps the result deterministic
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    double di = a[i * n + i].real(), dj = a[j * n + j].real();
    if (di != dj) return di < dj;
    return i < j;
  });
  r.values.resize(n);
  r.vectors.assign(n * n, cplx(0));
  for (std::size_t j = 0; j < n; ++j) {
    r.values[j] = a[idx[j] * n + idx[j]].real();
    for (std::size_t i = 0; i < n; ++i) r.vectors[i * n + j] = v[i * n + idx[j]];
  }
  return r;
}

double eigen_residual(const std::vector<cplx>& a, const EigenResult& e) {
  std::size_t n = e.n;
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx av{};
      for (std::size_t k = 0; k < n; ++k) av += a[i * n + k] * e.vectors[k * n + j];
      worst = std::max(worst, std::abs(av - e.values[j] * e.vectors[i * n + j]));
    }
  }
  return worst;
}

std::vector<cplx> hermitian_inverse(const std::vector<cplx>& a, std::size_t n,
                                    double sing_tol) {
  EigenResult e = hermitian_eigen(a, n);
  double lo = INF;
  for (double v : e.values) lo = std::min(lo, std::abs(v));
  if (lo < sing_tol)
    throw NumericError("hermitian_inverse: matrix numerically singular (|eig|min = " +
                       std::to_string(lo) + ")");
  std::vector<cplx> inv(n * n, cplx(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{};
      for (std::size_t k = 0; k < n; ++k)
        s += e.vectors[i * n + k] * std::conj(e.vectors[j * n + k]) / e.values[k];
      inv[i * n + j] = s;
    }
  return inv;
}

std::vector<cplx> hermitian_solve(const std::vector<cplx>& a, std::size_t n,
                                  const std::vector<cplx>& b, double sing_tol) {
  if (b.size() != n) throw ConfigError("hermitian_solve: rhs size mismatch");
  EigenResult e = hermitian_eigen(a, n);
  double lo = INF;
  for (double v : e.values) lo = std::min(lo, std::abs(v));
  if (lo < sing_tol)
    throw NumericError("hermitian_solve: matrix numerically singular");
  // x = V diag(1/lambda) V^* b
  std::vector<cplx> y(n, cplx(0));
  for (std::size_t k = 0; k < n; ++k) {
    cplx s{};
    for (std::size_t i = 0; i < n; ++i) s += std::conj(e.vectors[i * n + k]) * b[i];
    y[k] = s / e.values[k];
  }
  std::vector<cplx> x(n, cplx(0));
  for (std::size_t i = 0; i < n; ++i) {
    cplx s{};
    for (std::size_t k = 0; k < n; ++k) s += e.vectors[i * n + k] * y[k];
    x[i] = s;
  }
  return x;
}

std::vector<cplx> mat_vec(const std::vector<cplx>& a, std::size_t n,
                          const std::vector<cplx>& x) {
  std::vector<cplx> y(n, cplx(0));
  for (std::size_t i = 0; i < n; ++i) {
    cplx s{};
    for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * x[k];
    y[i] = s;
  }
  return y;
}

}  // namespace mslab
