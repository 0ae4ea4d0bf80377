#include "mslab/common.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace mslab {

void check_boundary_point(DomainTag d, const BoundaryPoint& p) {
  if (p.at_infinity) {
    if (d == DomainTag::UnitDisc)
      throw ConfigError("point at infinity is not a disc boundary point");
    return;
  }
  if (d == DomainTag::UnitDisc) {
    if (std::abs(std::abs(p.value) - 1.0) > 1e-9)
      throw ConfigError("disc boundary point must be unimodular, got " + format_cplx(p.value));
  } else {
    if (std::abs(p.value.imag()) > 1e-9)
      throw ConfigError("half-plane boundary point must be real, got " + format_cplx(p.value));
  }
}

unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("MSLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return std::max(1u, hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  unsigned nt = std::min<std::size_t>(thread_budget(), n);
  if (nt <= 1 || n < 32) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(nt);
  pool.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      std::size_t lo = n * t / nt, hi = n * (t + 1) / nt;
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

double parallel_map_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
  std::vector<double> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i] = term(i); });
  return pairwise_sum(slots);
}

cplx parallel_map_sum_cplx(std::size_t n, const std::function<cplx(std::size_t)>& term) {
  std::vector<cplx> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i] = term(i); });
  return pairwise_sum(slots);
}

std::string format_cplx(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.9g,%.9g)", z.real(), z.imag());
  return buf;
}

}  // namespace mslab
