#pragma once

// Reductions over independent sample indices. Every check in the library is
// a max-violation search over samples, so these are the only loops that run
// in parallel. The serial versions are the reference: the parallel versions
// must return the same value and the same (smallest) arg-max index.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

namespace mgd {

enum class Exec { serial, parallel };

struct Extremum {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = npos;

  bool found() const { return index != npos; }
};

namespace detail {

inline double sanitize(double v) {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

inline void merge(Extremum& into, const Extremum& other) {
  if (!other.found()) return;
  if (!into.found() || other.value > into.value ||
      (other.value == into.value && other.index < into.index)) {
    into = other;
  }
}

}  // namespace detail

/// Largest f(i) over [0, n); NaN counts as +inf. Ties resolve to the first index.
template <class F>
Extremum max_over_serial(std::size_t n, F&& f) {
  Extremum best;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = detail::sanitize(f(i));
    if (!best.found() || v > best.value) best = {v, i};
  }
  return best;
}

template <class F>
Extremum max_over_parallel(std::size_t n, F&& f) {
  Extremum best;
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    Extremum local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        const double v = detail::sanitize(f(static_cast<std::size_t>(i)));
        detail::merge(local, {v, static_cast<std::size_t>(i)});
      } catch (...) {
#pragma omp critical(mgd_kernel_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(mgd_kernel_merge)
    detail::merge(best, local);
  }
  if (error) std::rethrow_exception(error);
  return best;
}

template <class F>
Extremum max_over(Exec exec, std::size_t n, F&& f) {
  return exec == Exec::parallel ? max_over_parallel(n, std::forward<F>(f))
                                : max_over_serial(n, std::forward<F>(f));
}

/// Evaluates f at every index; output order is index order for both policies.
template <class F>
std::vector<double> map_indices(Exec exec, std::size_t n, F&& f) {
  std::vector<double> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(mgd_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace mgd
