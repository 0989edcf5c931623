#ifndef SOLITON_MINIMIZE_HPP
#define SOLITON_MINIMIZE_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

namespace soliton {

struct ScalarMinimum {
  double x = 0.0;
  double fx = std::numeric_limits<double>::infinity();
};

/// Golden-section search on [a, b]; stops when the bracket is narrower than
/// `tol` or after `max_iter` reductions. Returns the best point evaluated,
/// endpoints included.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double a, double b, double tol, int max_iter = 200) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (b < a) std::swap(a, b);
  ScalarMinimum best{a, f(a)};
  auto consider = [&best](double x, double fx) {
    if (fx < best.fx || (fx == best.fx && x < best.x)) best = {x, fx};
  };
  consider(b, f(b));

  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  consider(c, fc);
  consider(d, fd);
  return best;
}

/// Uniform `n_scan`-point scan of [a, b] to bracket the smallest sample, then
/// golden-section refinement inside the neighbouring scan cells.
template <typename F>
ScalarMinimum scan_then_golden(F&& f, double a, double b, std::size_t n_scan, double tol) {
  const double step = (b - a) / static_cast<double>(n_scan - 1);
  std::size_t k_best = 0;
  double f_best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n_scan; ++k) {
    const double x = k + 1 == n_scan ? b : a + step * static_cast<double>(k);
    const double fx = f(x);
    if (fx < f_best) {
      f_best = fx;
      k_best = k;
    }
  }
  const double lo = k_best == 0 ? a : a + step * static_cast<double>(k_best - 1);
  const double hi = k_best + 1 >= n_scan ? b : a + step * static_cast<double>(k_best + 1);
  return golden_section_minimize(f, lo, hi, tol);
}

}  // namespace soliton

#endif  // SOLITON_MINIMIZE_HPP
