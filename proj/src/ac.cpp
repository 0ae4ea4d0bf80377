#include "mslab/ac.hpp"

#include <algorithm>
#include <cmath>

namespace mslab {

namespace {

// the trend witness: huge partial sum whose recent terms are not decaying
bool runaway(const std::vector<double>& terms, double partial) {
  if (partial <= 1e8) return false;
  std::size_t n = terms.size();
  std::size_t window = std::max<std::size_t>(10, n / 10);
  if (n < window + 1) return false;
  for (std::size_t i = n - window; i < n; ++i)
    if (terms[i] < terms[i - 1]) return false;
  return true;
}

void finish_report(ConvergenceReport& rep, const TailBounds& tail) {
  rep.partial_sum = pairwise_sum(rep.terms);
  rep.terms_used = rep.terms.size();
  if (tail.lower == INF) {
    rep.verdict = Verdict::Diverged;
    rep.witness = "generator tail diverges";
    return;
  }
  if (tail.upper < INF) {
    // a rigorous tail bound settles the question even when the truncated
    // terms are still growing (the generic picture when the summand peaks
    // beyond the truncation)
    rep.verdict = Verdict::Converged;
    rep.tail_bound = tail.upper;
    rep.sum_certified =
        tail.upper == 0.0 || tail.upper <= 1e-6 * std::abs(rep.partial_sum);
    rep.witness = tail.upper == 0.0 ? "finite data, zero tail"
                                    : "generator tail bound is finite";
    return;
  }
  if (runaway(rep.terms, rep.partial_sum)) {
    rep.verdict = Verdict::Diverged;
    rep.witness = "partial sums exceed 1e8 and the recent terms are not decaying";
    return;
  }
  rep.verdict = Verdict::Inconclusive;
  rep.witness = "no finite tail bound available";
}

void diverge_at_point(ConvergenceReport& rep, const char* what) {
  rep.partial_sum = pairwise_sum(rep.terms);
  rep.terms_used = rep.terms.size();
  rep.verdict = Verdict::Diverged;
  rep.witness = what;
}

}  // namespace

ConvergenceReport assemble_report(std::vector<double> terms, const TailBounds& tail,
                                  std::string form) {
  ConvergenceReport rep;
  rep.form = std::move(form);
  rep.terms = std::move(terms);
  finish_report(rep, tail);
  return rep;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Converged: return "converged";
    case Verdict::Diverged: return "diverged";
    default: return "inconclusive";
  }
}

ConvergenceReport ac_test(const InnerFunctionSpec& spec, const BoundaryPoint& zeta,
                          int order) {
  if (order < 0) throw ConfigError("the order must be >= 0");
  check_boundary_point(spec.domain, zeta);
  const double expo = 2.0 * order + 2.0;
  ConvergenceReport rep;
  rep.form = "zero-sum";

  const std::vector<cplx> zs = spec.all_zeros();
  rep.terms.reserve(zs.size() + spec.singular_atoms.size());

  if (spec.domain == DomainTag::UnitDisc) {
    const cplx p = zeta.value;
    for (std::size_t k = 0; k < spec.singular_atoms.size(); ++k) {
      double d = std::abs(p - spec.atom_point(k));
      if (d < 1e-12) {
        diverge_at_point(rep, "singular atom at the test point");
        return rep;
      }
      rep.terms.push_back(2.0 * spec.singular_atoms[k].mass / std::pow(d, expo));
    }
    for (cplx z : zs)
      rep.terms.push_back((1.0 - std::norm(z)) / std::pow(std::abs(p - z), expo));
  } else if (!zeta.at_infinity) {
    const double t = zeta.value.real();
    for (std::size_t k = 0; k < spec.singular_atoms.size(); ++k) {
      double d = std::abs(t - spec.singular_atoms[k].position);
      if (d < 1e-12) {
        diverge_at_point(rep, "singular atom at the test point");
        return rep;
      }
      rep.terms.push_back(spec.singular_atoms[k].mass / std::pow(d, expo));
    }
    for (cplx z : zs)
      rep.terms.push_back(z.imag() / std::pow(std::abs(cplx(t, 0.0) - z), expo));
  } else {
    // point at infinity
    if (spec.mass_at_infinity > 0.0) {
      diverge_at_point(rep, "singular mass at infinity");
      return rep;
    }
    const double n = static_cast<double>(order);
    for (const auto& at : spec.singular_atoms)
      rep.terms.push_back(at.mass * std::pow(1.0 + at.position * at.position, n));
    for (cplx z : zs) rep.terms.push_back(z.imag() * std::pow(1.0 + std::norm(z), n));
  }

  TailBounds tail;
  tail.upper = 0.0;
  if (spec.tail) tail = tail_ac_bounds(*spec.tail, spec.domain, zeta, order);
  finish_report(rep, tail);
  return rep;
}

std::vector<MeasureAtom> expanded_atoms(const ClarkMeasure& mu) {
  std::vector<MeasureAtom> all = mu.atoms;
  if (mu.tail) {
    std::size_t n = measure_tail_count(*mu.tail);
    all.reserve(all.size() + n);
    for (std::size_t k = 1; k <= n; ++k)
      all.push_back(measure_tail_atom(*mu.tail, mu.domain, k));
  }
  return all;
}

ConvergenceReport ac_test_clark(const ClarkMeasure& mu, int order,
                                const std::optional<BoundaryPoint>& zeta) {
  if (order < 0) throw ConfigError("the order must be >= 0");
  validate_measure(mu);
  ConvergenceReport rep;
  rep.form = "clark-moment";
  const double expo = 2.0 * order + 2.0;
  const std::vector<MeasureAtom> atoms = expanded_atoms(mu);
  rep.terms.reserve(atoms.size());

  if (mu.domain == DomainTag::UnitDisc) {
    if (!zeta || zeta->at_infinity)
      throw ConfigError("the disc moment sum needs a finite boundary point");
    check_boundary_point(mu.domain, *zeta);
    for (const auto& a : atoms) {
      double d = std::abs(zeta->value - a.position);
      if (d < 1e-12) {
        diverge_at_point(rep, "measure atom at the test point");
        return rep;
      }
      rep.terms.push_back(a.weight / std::pow(d, expo));
    }
  } else if (zeta && !zeta->at_infinity) {
    check_boundary_point(mu.domain, *zeta);
    const double t = zeta->value.real();
    for (const auto& a : atoms) {
      double d = std::abs(t - a.position.real());
      if (d < 1e-12) {
        diverge_at_point(rep, "measure atom at the test point");
        return rep;
      }
      rep.terms.push_back(a.weight / std::pow(d, expo));
    }
  } else {
    if (mu.mass_at_infinity > 0.0) {
      diverge_at_point(rep, "measure atom at infinity");
      return rep;
    }
    const double n = static_cast<double>(order);
    for (const auto& a : atoms) {
      double x = a.position.real();
      rep.terms.push_back(a.weight * std::pow(1.0 + x * x, n));
    }
  }

  TailBounds tail;
  tail.upper = 0.0;
  if (mu.tail) tail = measure_moment_tail(*mu.tail, mu.domain, order, zeta);
  finish_report(rep, tail);
  return rep;
}

}  // namespace mslab
