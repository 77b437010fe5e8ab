#include "pinch/support_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pinch/errors.hpp"
#include "pinch/numerics.hpp"

namespace pinch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec2 rotate(Vec2 v, double ca, double sa) { return Vec2{ca * v.x - sa * v.y, sa * v.x + ca * v.y}; }

}  // namespace

SupportCurve SupportCurve::fourier(double h0, std::vector<double> cos_coeffs,
                                   std::vector<double> sin_coeffs) {
  if (cos_coeffs.size() != sin_coeffs.size()) {
    throw DomainError("cosine and sine coefficient counts differ");
  }
  SupportCurve c;
  c.h0_ = h0;
  c.cos_ = std::move(cos_coeffs);
  c.sin_ = std::move(sin_coeffs);
  return c;
}

SupportCurve SupportCurve::circle(double radius, Vec2 center) {
  SupportCurve c = fourier(radius, {}, {});
  c.shift_ = center;
  return c;
}

SupportCurve SupportCurve::from_profile(const ProfileCurve& profile) {
  if (!profile.space.is_flat()) throw UnsupportedGeometry("support curves are Euclidean");
  if (profile.segments.empty()) throw DomainError("empty profile");
  SupportCurve c;
  for (const Arc& a : profile.segments) {
    const Point z = a.center();
    const double psi = a.frame.psi();
    double begin = a.t_begin + psi;
    if (!c.arcs_.empty()) begin = c.arcs_.back().theta_end;
    const double end = begin + (a.t_end - a.t_begin);
    c.arcs_.push_back(ArcPiece{begin, end, Vec2{z.x, z.y}, a.radius});
  }
  c.arcs_.back().theta_end = c.arcs_.front().theta_begin + kTwoPi;
  return c;
}

SupportJet SupportCurve::jet(double theta) const {
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  if (!arcs_.empty()) {
    const double base = arcs_.front().theta_begin;
    double reduced = std::fmod(theta - base, kTwoPi);
    if (reduced < 0.0) reduced += kTwoPi;
    reduced += base;
    auto it = std::upper_bound(arcs_.begin(), arcs_.end(), reduced,
                               [](double v, const ArcPiece& p) { return v < p.theta_begin; });
    const ArcPiece& p = it == arcs_.begin() ? arcs_.front() : *std::prev(it);
    return SupportJet{p.center.x * c1 + p.center.y * s1 + p.radius,
                      -p.center.x * s1 + p.center.y * c1, p.radius};
  }
  SupportJet j{h0_ + shift_.x * c1 + shift_.y * s1, -shift_.x * s1 + shift_.y * c1, h0_};
  double cj = c1;
  double sj = s1;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double cn = cj * c1 - sj * s1;
    sj = sj * c1 + cj * s1;
    cj = cn;
    const double mode = static_cast<double>(i + 2);
    const double inv = 1.0 / (1.0 - mode * mode);
    const double a = cos_[i];
    const double b = sin_[i];
    j.rho += a * cj + b * sj;
    j.h += (a * cj + b * sj) * inv;
    j.dh += mode * (b * cj - a * sj) * inv;
  }
  return j;
}

std::pair<double, double> SupportCurve::rho_derivatives(double theta) const {
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double cj = c1;
  double sj = s1;
  double d1 = 0.0;
  double d2 = 0.0;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double cn = cj * c1 - sj * s1;
    sj = sj * c1 + cj * s1;
    cj = cn;
    const double mode = static_cast<double>(i + 2);
    d1 += mode * (sin_[i] * cj - cos_[i] * sj);
    d2 -= mode * mode * (cos_[i] * cj + sin_[i] * sj);
  }
  return {d1, d2};
}

Vec2 SupportCurve::boundary(double theta) const {
  const SupportJet j = jet(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Vec2{j.h * c - j.dh * s, j.h * s + j.dh * c};
}

double SupportCurve::grid_angle(std::size_t i) {
  return kTwoPi * static_cast<double>(i) / static_cast<double>(kGrid);
}

SupportCurve::RhoExtremes SupportCurve::rho_extremes() const {
  RhoExtremes out;
  if (!arcs_.empty()) {
    out.min = out.max = arcs_.front().radius;
    out.theta_min = out.theta_max = arcs_.front().theta_begin;
    for (const ArcPiece& p : arcs_) {
      if (!(p.theta_end > p.theta_begin)) continue;
      const double mid = 0.5 * (p.theta_begin + p.theta_end);
      if (p.radius < out.min) out = RhoExtremes{p.radius, mid, out.max, out.theta_max};
      if (p.radius > out.max) out = RhoExtremes{out.min, out.theta_min, p.radius, mid};
    }
    return out;
  }

  std::vector<double> grid(kGrid);
  for (std::size_t i = 0; i < kGrid; ++i) grid[i] = jet(grid_angle(i)).rho;
  // Grid values are within max|rho''| dtheta^2 / 8 of the true extreme nearby.
  double curvature_bound = 0.0;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double mode = static_cast<double>(i + 2);
    curvature_bound += mode * mode * (std::abs(cos_[i]) + std::abs(sin_[i]));
  }
  const double dtheta = kTwoPi / static_cast<double>(kGrid);
  const double threshold = curvature_bound * dtheta * dtheta / 8.0 + 1e-15;

  const auto [lo_it, hi_it] = std::minmax_element(grid.begin(), grid.end());
  out.min = *lo_it;
  out.theta_min = grid_angle(static_cast<std::size_t>(lo_it - grid.begin()));
  out.max = *hi_it;
  out.theta_max = grid_angle(static_cast<std::size_t>(hi_it - grid.begin()));
  if (cos_.empty()) return out;

  auto refine = [&](std::size_t i, bool maximize) {
    const double lo = grid_angle(i) - dtheta;
    const double hi = grid_angle(i) + dtheta;
    const double glo = rho_derivatives(lo).first;
    const double ghi = rho_derivatives(hi).first;
    double theta = grid_angle(i);
    if ((glo < 0.0) != (ghi < 0.0)) {
      theta = numerics::safeguarded_newton([&](double t) { return rho_derivatives(t); }, lo, hi,
                                           glo, 1e-15);
    }
    const double value = jet(theta).rho;
    if (maximize && value > out.max) {
      out.max = value;
      out.theta_max = theta;
    }
    if (!maximize && value < out.min) {
      out.min = value;
      out.theta_min = theta;
    }
  };
  const double gmin = out.min;
  const double gmax = out.max;
  for (std::size_t i = 0; i < kGrid; ++i) {
    const double prev = grid[(i + kGrid - 1) % kGrid];
    const double next = grid[(i + 1) % kGrid];
    if (grid[i] <= prev && grid[i] <= next && grid[i] <= gmin + threshold) refine(i, false);
    if (grid[i] >= prev && grid[i] >= next && grid[i] >= gmax - threshold) refine(i, true);
  }
  return out;
}

SupportCurve SupportCurve::translated(Vec2 t) const {
  SupportCurve c = *this;
  if (c.arcs_.empty()) {
    c.shift_ = Vec2{shift_.x + t.x, shift_.y + t.y};
  } else {
    for (ArcPiece& p : c.arcs_) p.center = Vec2{p.center.x + t.x, p.center.y + t.y};
  }
  return c;
}

SupportCurve SupportCurve::rotated(double angle) const {
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  SupportCurve c = *this;
  if (!c.arcs_.empty()) {
    for (ArcPiece& p : c.arcs_) {
      p.theta_begin += angle;
      p.theta_end += angle;
      p.center = rotate(p.center, ca, sa);
    }
    return c;
  }
  c.shift_ = rotate(shift_, ca, sa);
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double mode = static_cast<double>(i + 2);
    const double cm = std::cos(mode * angle);
    const double sm = std::sin(mode * angle);
    // rho_new(theta) = rho(theta - angle).
    c.cos_[i] = cos_[i] * cm - sin_[i] * sm;
    c.sin_[i] = cos_[i] * sm + sin_[i] * cm;
  }
  return c;
}

SupportCurve SupportCurve::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("scale factor must be positive");
  SupportCurve c = *this;
  c.h0_ *= lambda;
  for (double& v : c.cos_) v *= lambda;
  for (double& v : c.sin_) v *= lambda;
  c.shift_ = Vec2{shift_.x * lambda, shift_.y * lambda};
  for (ArcPiece& p : c.arcs_) {
    p.center = Vec2{p.center.x * lambda, p.center.y * lambda};
    p.radius *= lambda;
  }
  return c;
}

}  // namespace pinch
