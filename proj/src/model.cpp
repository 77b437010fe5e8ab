#include "pinch/model.hpp"

#include <algorithm>
#include <cmath>

namespace pinch {

namespace {

// Rotation about the origin by angle (cos a, sin a).
template <class V>
V rotate(const V& v, double ca, double sa) {
  return V{v.w, ca * v.x - sa * v.y, sa * v.x + ca * v.y};
}

// Translation by signed distance t along the x axis, given cs(t), sn(t).
template <class V>
V translate(const SpaceCurvature& s, const V& v, double cs_t, double sn_t) {
  return V{cs_t * v.w - s.c() * sn_t * v.x, sn_t * v.w + cs_t * v.x, v.y};
}

// Squared chordal length |dp|^2 + dw^2 / c, which equals (2 sn(d/2))^2.
double chord_sq(const SpaceCurvature& s, double dw, double dx, double dy) {
  double sq = dx * dx + dy * dy;
  if (!s.is_flat()) sq += dw * dw / s.c();
  return std::max(0.0, sq);
}

}  // namespace

Point origin() { return Point{}; }

Point polar_point(const SpaceCurvature& s, double rho, double phi) {
  const double r = s.sn(rho);
  return Point{s.cs(rho), r * std::cos(phi), r * std::sin(phi)};
}

Polar to_polar(const SpaceCurvature& s, const Point& p) {
  const double planar = std::hypot(p.x, p.y);
  const double phi = std::atan2(p.y, p.x);
  switch (s.kind()) {
    case GeometryKind::flat:
      return Polar{planar, phi};
    case GeometryKind::spherical:
      return Polar{std::atan2(s.k() * planar, p.w) / s.k(), phi};
    case GeometryKind::hyperbolic:
      return Polar{std::asinh(s.k() * planar) / s.k(), phi};
  }
  return Polar{planar, phi};
}

double distance(const SpaceCurvature& s, const Point& p, const Point& q) {
  const double chord = std::sqrt(chord_sq(s, p.w - q.w, p.x - q.x, p.y - q.y));
  switch (s.kind()) {
    case GeometryKind::flat:
      return chord;
    case GeometryKind::spherical:
      return 2.0 * std::asin(std::min(1.0, 0.5 * s.k() * chord)) / s.k();
    case GeometryKind::hyperbolic:
      return 2.0 * std::asinh(0.5 * s.k() * chord) / s.k();
  }
  return chord;
}

double norm(const SpaceCurvature& s, const Tangent& v) {
  return std::sqrt(chord_sq(s, v.w, v.x, v.y));
}

double angle_between(const SpaceCurvature& s, const Tangent& a, const Tangent& b) {
  const double na = norm(s, a);
  const double nb = norm(s, b);
  const Tangent diff{a.w / na - b.w / nb, a.x / na - b.x / nb, a.y / na - b.y / nb};
  return 2.0 * std::asin(std::min(1.0, 0.5 * norm(s, diff)));
}

Frame::Frame(const SpaceCurvature& space, double rho, double psi)
    : space_(space),
      rho_(rho),
      psi_(psi),
      cos_psi_(std::cos(psi)),
      sin_psi_(std::sin(psi)),
      cs_rho_(space.cs(rho)),
      sn_rho_(space.sn(rho)) {}

Point Frame::center() const { return to_world(origin()); }

Point Frame::to_world(const Point& local) const {
  return rotate(translate(space_, local, cs_rho_, sn_rho_), cos_psi_, sin_psi_);
}

Tangent Frame::to_world(const Tangent& local) const {
  return rotate(translate(space_, local, cs_rho_, sn_rho_), cos_psi_, sin_psi_);
}

Point Frame::to_local(const Point& world) const {
  return translate(space_, rotate(world, cos_psi_, -sin_psi_), cs_rho_, -sn_rho_);
}

ChartPoint gnomonic(const Point& p) { return ChartPoint{p.x / p.w, p.y / p.w}; }

}  // namespace pinch
