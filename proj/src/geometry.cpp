#include "pinch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pinch/errors.hpp"

namespace pinch {

namespace {

constexpr double kAngleClamp = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

// sn(x/2)^2: the haversine-like quantity the stable law of cosines is written in.
double half_sn_sq(const SpaceCurvature& s, double x) {
  const double v = s.sn(0.5 * x);
  return v * v;
}

// Inverse of sn on [0, pi/(2k)] for the sphere.
double asn(const SpaceCurvature& s, double y) {
  switch (s.kind()) {
    case GeometryKind::flat:
      return y;
    case GeometryKind::spherical:
      return std::asin(std::min(1.0, s.k() * y)) / s.k();
    case GeometryKind::hyperbolic:
      return std::asinh(s.k() * y) / s.k();
  }
  return y;
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

void check_single_curvature(const SpaceCurvature& s, double kappa) {
  if (auto why = admissibility_violation(s, kappa, kappa)) {
    throw DomainError("inadmissible curvature " + fmt(kappa) + ": " + *why);
  }
}

}  // namespace

SpaceCurvature::SpaceCurvature(GeometryKind kind, double k)
    : kind_(kind),
      k_(k),
      c_(kind == GeometryKind::flat        ? 0.0
         : kind == GeometryKind::spherical ? k * k
                                           : -k * k) {}

SpaceCurvature SpaceCurvature::spherical(double k) {
  if (!(std::isfinite(k) && k > 0.0)) throw DomainError("spherical geometry needs k > 0");
  return SpaceCurvature(GeometryKind::spherical, k);
}

SpaceCurvature SpaceCurvature::hyperbolic(double k) {
  if (!(std::isfinite(k) && k > 0.0)) throw DomainError("hyperbolic geometry needs k > 0");
  return SpaceCurvature(GeometryKind::hyperbolic, k);
}

SpaceCurvature SpaceCurvature::from_c(double c) {
  if (!std::isfinite(c)) throw DomainError("curvature must be finite");
  if (c > 0.0) return spherical(std::sqrt(c));
  if (c < 0.0) return hyperbolic(std::sqrt(-c));
  return flat();
}

double SpaceCurvature::sn(double t) const {
  switch (kind_) {
    case GeometryKind::flat:
      return t;
    case GeometryKind::spherical:
      return std::sin(k_ * t) / k_;
    case GeometryKind::hyperbolic:
      return std::sinh(k_ * t) / k_;
  }
  return t;
}

double SpaceCurvature::cs(double t) const {
  switch (kind_) {
    case GeometryKind::flat:
      return 1.0;
    case GeometryKind::spherical:
      return std::cos(k_ * t);
    case GeometryKind::hyperbolic:
      return std::cosh(k_ * t);
  }
  return 1.0;
}

std::string SpaceCurvature::describe() const {
  switch (kind_) {
    case GeometryKind::flat:
      return "flat (c = 0)";
    case GeometryKind::spherical:
      return "spherical (k = " + fmt(k_) + ", c = " + fmt(c_) + ")";
    case GeometryKind::hyperbolic:
      return "hyperbolic (k = " + fmt(k_) + ", c = " + fmt(c_) + ")";
  }
  return "?";
}

std::optional<std::string> admissibility_violation(const SpaceCurvature& s, double kappa1,
                                                   double kappa2) {
  if (!std::isfinite(kappa1) || !std::isfinite(kappa2)) {
    return std::string("kappa1 and kappa2 must be finite");
  }
  if (kappa2 < kappa1) {
    return "kappa2 >= kappa1 is required (got kappa1 = " + fmt(kappa1) +
           ", kappa2 = " + fmt(kappa2) + ")";
  }
  switch (s.kind()) {
    case GeometryKind::flat:
      if (!(kappa1 > 0.0)) return "for c = 0 kappa1 > 0 is required (got " + fmt(kappa1) + ")";
      break;
    case GeometryKind::spherical:
      if (!(kappa1 >= 0.0)) return "for c > 0 kappa1 >= 0 is required (got " + fmt(kappa1) + ")";
      break;
    case GeometryKind::hyperbolic:
      if (!(kappa1 > s.k())) {
        return "for c < 0 kappa1 > sqrt(-c) = " + fmt(s.k()) + " is required (got " +
               fmt(kappa1) + ")";
      }
      break;
  }
  return std::nullopt;
}

bool admissible(const SpaceCurvature& s, double kappa1, double kappa2) {
  return !admissibility_violation(s, kappa1, kappa2).has_value();
}

double sphere_radius_from_curvature(const SpaceCurvature& s, double kappa) {
  check_single_curvature(s, kappa);
  switch (s.kind()) {
    case GeometryKind::flat:
      return 1.0 / kappa;
    case GeometryKind::spherical:
      // arccot(kappa/k) on the (0, pi/2] branch.
      return std::atan2(s.k(), kappa) / s.k();
    case GeometryKind::hyperbolic:
      return std::atanh(s.k() / kappa) / s.k();
  }
  return 0.0;
}

double curvature_from_sphere_radius(const SpaceCurvature& s, double radius) {
  if (!(std::isfinite(radius) && radius > 0.0)) {
    throw DomainError("sphere radius must be positive (got " + fmt(radius) + ")");
  }
  switch (s.kind()) {
    case GeometryKind::flat:
      return 1.0 / radius;
    case GeometryKind::spherical: {
      const double hemisphere = std::numbers::pi / (2.0 * s.k());
      if (radius > hemisphere) {
        throw DomainError("sphere radius " + fmt(radius) + " exceeds the hemisphere radius " +
                          fmt(hemisphere));
      }
      const double kr = s.k() * radius;
      return std::max(0.0, s.k() * std::cos(kr) / std::sin(kr));
    }
    case GeometryKind::hyperbolic:
      return s.k() / std::tanh(s.k() * radius);
  }
  return 0.0;
}

double law_of_cosines_side(const SpaceCurvature& s, double a, double b, double gamma) {
  if (!finite_nonneg(a) || !finite_nonneg(b)) {
    throw DomainError("triangle sides must be non-negative");
  }
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi)) {
    throw DomainError("angle must lie in [0, pi] (got " + fmt(gamma) + ")");
  }
  if (s.kind() == GeometryKind::spherical) {
    const double limit = std::numbers::pi / s.k();
    if (a >= limit || b >= limit) throw DomainError("spherical sides must be < pi/k");
  }
  const double half = std::sin(0.5 * gamma);
  const double h = half_sn_sq(s, a - b) + s.sn(a) * s.sn(b) * half * half;
  return 2.0 * asn(s, std::sqrt(std::max(0.0, h)));
}

double law_of_cosines_angle(const SpaceCurvature& s, double a, double b, double d) {
  if (!(std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0)) {
    throw DomainError("sides adjacent to the angle must be positive");
  }
  if (!finite_nonneg(d)) throw DomainError("opposite side must be non-negative");
  if (s.kind() == GeometryKind::spherical) {
    const double limit = std::numbers::pi / s.k();
    if (a >= limit || b >= limit) throw DomainError("spherical sides must be < pi/k");
  }
  // sin^2(gamma/2), i.e. (1 - cos gamma)/2.
  double hav = (half_sn_sq(s, d) - half_sn_sq(s, a - b)) / (s.sn(a) * s.sn(b));
  if (hav < -kAngleClamp || hav > 1.0 + kAngleClamp) {
    throw DomainError("sides (" + fmt(a) + ", " + fmt(b) + ", " + fmt(d) +
                      ") violate the triangle inequality");
  }
  hav = std::clamp(hav, 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(hav));
}

double right_triangle_leg(const SpaceCurvature& s, double hypotenuse, double leg) {
  if (!finite_nonneg(leg) || !std::isfinite(hypotenuse)) {
    throw DomainError("right triangle sides must be finite and non-negative");
  }
  const double slack = 1e-12 * std::max(1.0, hypotenuse);
  if (leg > hypotenuse + slack) throw DomainError("leg exceeds the hypotenuse");
  leg = std::min(leg, hypotenuse);
  if (s.kind() == GeometryKind::spherical && s.k() * hypotenuse >= 0.5 * std::numbers::pi) {
    throw DomainError("spherical right triangle hypotenuse must be < pi/(2k)");
  }
  // Curved Pythagoras cs(h) = cs(l) cs(d) rewritten in half-angle form.
  const double h =
      s.sn(0.5 * (hypotenuse + leg)) * s.sn(0.5 * (hypotenuse - leg)) / s.cs(leg);
  return 2.0 * asn(s, std::sqrt(std::max(0.0, h)));
}

PinchSpec PinchSpec::make(const SpaceCurvature& space, double kappa1, double kappa2) {
  if (auto why = admissibility_violation(space, kappa1, kappa2)) {
    throw DomainError("inadmissible pinch: " + *why);
  }
  const double r1 = sphere_radius_from_curvature(space, kappa1);
  const double r2 = kappa2 == kappa1 ? r1 : sphere_radius_from_curvature(space, kappa2);
  return PinchSpec(space, kappa1, kappa2, r1, r2);
}

}  // namespace pinch
