#include "pinch/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pinch/errors.hpp"

namespace pinch {

namespace {

void require_flat(const PinchSpec& pinch, const char* what) {
  if (!pinch.space().is_flat()) {
    throw UnsupportedGeometry(std::string(what) + " is defined for the Euclidean case only");
  }
}

// Clamps r into [R2, R1], tolerating round-off of 1e-12 relative to R1.
double checked_inner_radius(const PinchSpec& pinch, double r) {
  const double slack = 1e-12 * std::max(1.0, pinch.R1());
  if (!(r >= pinch.R2() - slack && r <= pinch.R1() + slack)) {
    std::ostringstream os;
    os.precision(12);
    os << "inner radius " << r << " outside [R2, R1] = [" << pinch.R2() << ", " << pinch.R1()
       << "]";
    throw DomainError(os.str());
  }
  return std::clamp(r, pinch.R2(), pinch.R1());
}

// Offset u* = R1 - r* of the width-maximizing spindle. dw/dr~ = 0 forces
// cs(u)^2 = cs(R1 - R2), after which d~ = u. In half-angle form:
// sin(ku) = sqrt2 sin(k(R1 - R2)/2), sinh for c < 0, u = (R1 - R2)/sqrt2 when flat.
double optimal_offset(const PinchSpec& pinch) {
  const double gap = pinch.radius_gap();
  const SpaceCurvature& s = pinch.space();
  switch (s.kind()) {
    case GeometryKind::flat:
      return gap / std::numbers::sqrt2;
    case GeometryKind::spherical: {
      const double k = s.k();
      return std::asin(std::min(1.0, std::numbers::sqrt2 * std::sin(0.5 * k * gap))) / k;
    }
    case GeometryKind::hyperbolic: {
      const double k = s.k();
      return std::asinh(std::numbers::sqrt2 * std::sinh(0.5 * k * gap)) / k;
    }
  }
  return 0.0;
}

}  // namespace

WidthBoundResult width_bound(const PinchSpec& pinch) {
  if (pinch.degenerate()) return WidthBoundResult{0.0, pinch.R1(), pinch.R1()};
  const double u = optimal_offset(pinch);
  const double r_star = pinch.R1() - u;
  WidthBoundResult out;
  // Flat: (sqrt2 - 1)(R1 - R2). Curved: (2/k) arccos sqrt(cos k(R1-R2)) - (R1 - R2)
  // and its arccosh analogue; arccos sqrt(cos x) == asin(sqrt2 sin(x/2)).
  out.bound = pinch.space().is_flat() ? (std::numbers::sqrt2 - 1.0) * pinch.radius_gap()
                                      : 2.0 * u - pinch.radius_gap();
  out.maximizer_r = r_star;
  out.attained_R = outer_radius_bound(pinch, r_star);
  return out;
}

double outer_radius_bound(const PinchSpec& pinch, double r) {
  r = checked_inner_radius(pinch, r);
  if (pinch.degenerate()) return pinch.R1();
  const double gap = pinch.radius_gap();  // R1 - R2
  const double u = pinch.R1() - r;        // R1 - r
  const double e = r - pinch.R2();        // gap - u >= 0
  const SpaceCurvature& s = pinch.space();
  switch (s.kind()) {
    case GeometryKind::flat:
      // sqrt((R1-R2)^2 - (R1-r)^2) + R2
      return std::sqrt(e * (gap + u)) + pinch.R2();
    case GeometryKind::spherical: {
      // (1/k) arccos(cos k(R1-R2) / cos k(R1-r)) + R2, with arccos x = 2 asin sqrt((1-x)/2).
      const double k = s.k();
      const double h = std::sin(0.5 * k * (gap + u)) * std::sin(0.5 * k * e) / std::cos(k * u);
      return 2.0 * std::asin(std::min(1.0, std::sqrt(std::max(0.0, h)))) / k + pinch.R2();
    }
    case GeometryKind::hyperbolic: {
      // (1/k) arccosh(cosh k(R1-R2) / cosh k(R1-r)) + R2, with arccosh x = 2 asinh sqrt((x-1)/2).
      const double k = s.k();
      const double h =
          std::sinh(0.5 * k * (gap + u)) * std::sinh(0.5 * k * e) / std::cosh(k * u);
      return 2.0 * std::asinh(std::sqrt(std::max(0.0, h))) / k + pinch.R2();
    }
  }
  return r;
}

double width_profile(const PinchSpec& pinch, double r_tilde) {
  const double r = checked_inner_radius(pinch, r_tilde);
  return outer_radius_bound(pinch, r) - r;
}

double quotient_profile(const PinchSpec& pinch, double r_tilde) {
  require_flat(pinch, "the quotient profile");
  const double r = checked_inner_radius(pinch, r_tilde);
  return outer_radius_bound(pinch, r) / r;
}

double quotient_maximizer(const PinchSpec& pinch) {
  require_flat(pinch, "the quotient maximizer");
  if (pinch.degenerate()) {
    throw DegenerateError("quotient profile is constant when kappa1 == kappa2");
  }
  const double r1 = pinch.R1();
  const double r2 = pinch.R2();
  // Root of dq/dr~ = 0 inside (R2, R1); the other root of the quadratic lies outside.
  return (2.0 * r1 * r1 * r2 - r2 * (r1 - r2) * std::sqrt(2.0 * r1 * r2)) / (r1 * r1 + r2 * r2);
}

QuotientBoundResult quotient_bound(const PinchSpec& pinch) {
  require_flat(pinch, "the quotient bound");
  if (pinch.degenerate()) return QuotientBoundResult{1.0, pinch.R1(), pinch.R1()};
  const double ratio = pinch.kappa2() / pinch.kappa1();
  QuotientBoundResult out;
  out.bound = (std::sqrt(ratio) + std::numbers::sqrt2) / (std::sqrt(1.0 / ratio) + std::numbers::sqrt2);
  out.maximizer_r = quotient_maximizer(pinch);
  out.attained_R = outer_radius_bound(pinch, out.maximizer_r);
  return out;
}

double quotient_bound_coarse(const PinchSpec& pinch) {
  require_flat(pinch, "the coarse quotient bound");
  return pinch.kappa2() / pinch.kappa1();
}

double stability_width_constant(double kappa, const SpaceCurvature& space) {
  if (auto why = admissibility_violation(space, kappa, kappa)) {
    throw DomainError("inadmissible curvature for the stability constant: " + *why);
  }
  const double denom = kappa * kappa + space.c();
  if (!(denom > 0.0)) throw DomainError("kappa^2 + c must be positive");
  return kappa * (std::numbers::sqrt2 - 1.0) / denom;
}

double stability_quotient_constant() { return std::numbers::sqrt2 - 1.0; }

StabilityResult stability(const SpaceCurvature& space, double kappa, double epsilon) {
  if (!(std::isfinite(epsilon) && epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
  StabilityResult out;
  out.width_constant = stability_width_constant(kappa, space);
  if (space.is_flat()) out.quotient_constant = stability_quotient_constant();
  out.epsilon = epsilon;
  return out;
}

}  // namespace pinch
