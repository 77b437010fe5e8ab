#pragma once

// One-dimensional optimizers shared by the bound, spindle and verification code.

#include <cmath>
#include <utility>

namespace pinch::numerics {

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi]. Stops
/// when the bracket is narrower than tol or stops shrinking in floating point.
template <class F>
Extremum golden_section_max(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 400 && (b - a) > tol; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      if (!(x2 > x1 && x2 < b)) break;
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      if (!(x1 > a && x1 < x2)) break;
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

template <class F>
Extremum golden_section_min(F&& f, double lo, double hi, double tol) {
  auto r = golden_section_max([&](double x) { return -f(x); }, lo, hi, tol);
  return Extremum{r.x, -r.value};
}

/// Root of g on [lo, hi] with g(lo) and g(hi) of opposite signs, by Newton
/// steps safeguarded with bisection. fdf(x) returns {g(x), g'(x)}.
template <class FdF>
double safeguarded_newton(FdF&& fdf, double lo, double hi, double glo, double tol,
                          int max_iter = 100) {
  // Orient so that g(a) < 0 < g(b).
  double a = lo;
  double b = hi;
  if (glo > 0.0) std::swap(a, b);
  double x = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  auto [g, dg] = fdf(x);
  for (int iter = 0; iter < max_iter; ++iter) {
    const bool newton_out = ((x - b) * dg - g) * ((x - a) * dg - g) > 0.0;
    const bool too_slow = std::abs(2.0 * g) > std::abs(dx_old * dg);
    dx_old = dx;
    if (newton_out || too_slow) {
      dx = 0.5 * (b - a);
      x = a + dx;
    } else {
      dx = g / dg;
      x -= dx;
    }
    if (std::abs(dx) < tol) break;
    std::tie(g, dg) = fdf(x);
    if (g == 0.0) break;
    if (g < 0.0) {
      a = x;
    } else {
      b = x;
    }
  }
  return x;
}

}  // namespace pinch::numerics
