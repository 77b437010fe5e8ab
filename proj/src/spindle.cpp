#include "pinch/spindle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pinch/bounds.hpp"
#include "pinch/errors.hpp"
#include "pinch/numerics.hpp"

namespace pinch {

namespace {

constexpr double kPi = std::numbers::pi;

double checked_r_tilde(const SpindleSpec& spec) {
  const PinchSpec& p = spec.pinch;
  const double slack = 1e-12 * std::max(1.0, p.R1());
  if (!(spec.r_tilde >= p.R2() - slack && spec.r_tilde <= p.R1() + slack)) {
    std::ostringstream os;
    os.precision(12);
    os << "spindle inscribed radius " << spec.r_tilde << " outside [R2, R1] = [" << p.R2()
       << ", " << p.R1() << "]";
    throw DomainError(os.str());
  }
  return std::clamp(spec.r_tilde, p.R2(), p.R1());
}

ProfileCurve circle_profile(const PinchSpec& pinch, double radius, CurvatureTag tag) {
  const SpaceCurvature& s = pinch.space();
  const double curvature = tag == CurvatureTag::kappa1 ? pinch.kappa1() : pinch.kappa2();
  ProfileCurve out;
  out.space = s;
  out.segments.push_back(Arc{Frame(s, 0.0, 0.0), radius, 0.0, 2.0 * kPi, tag, curvature});
  return out;
}

// Cap centre offset s along the axis and the two join angles, from the right
// triangle (centre, main-arc centre, cap centre) with the right angle at the
// centre: legs `offset` and s, hypotenuse R1 - cap_radius.
struct CapJoin {
  double axis_offset;   // s
  double main_angle;    // angle at the main-arc centre
  double cap_angle;     // angle at the cap centre
};

CapJoin solve_cap(const SpaceCurvature& space, double hypotenuse, double offset) {
  CapJoin j{};
  j.axis_offset = right_triangle_leg(space, hypotenuse, offset);
  if (offset <= 0.0) {
    j.main_angle = 0.5 * kPi;
    j.cap_angle = 0.0;
  } else if (j.axis_offset <= 0.0) {
    j.main_angle = 0.0;
    j.cap_angle = 0.5 * kPi;
  } else {
    j.main_angle = law_of_cosines_angle(space, offset, hypotenuse, j.axis_offset);
    j.cap_angle = law_of_cosines_angle(space, j.axis_offset, hypotenuse, offset);
  }
  return j;
}

}  // namespace

const char* to_string(CurvatureTag tag) {
  return tag == CurvatureTag::kappa1 ? "kappa1" : "kappa2";
}

Point Arc::at(double t) const {
  return frame.to_world(polar_point(frame.space(), radius, t));
}

Tangent Arc::tangent(double t) const {
  const double r = frame.space().sn(radius);
  return frame.to_world(Tangent{0.0, -r * std::sin(t), r * std::cos(t)});
}

double Arc::length() const { return frame.space().sn(radius) * (t_end - t_begin); }

double ProfileCurve::length() const {
  double total = 0.0;
  for (const Arc& a : segments) total += a.length();
  return total;
}

SpindleGeometry spindle_geometry(const SpindleSpec& spec) {
  const double r = checked_r_tilde(spec);
  const PinchSpec& p = spec.pinch;
  const SpaceCurvature& s = p.space();
  SpindleGeometry g;
  g.main_arc_center_offset = p.R1() - r;
  const CapJoin join = solve_cap(s, p.radius_gap(), g.main_arc_center_offset);
  g.d_tilde = join.axis_offset;
  g.R_tilde = g.d_tilde + p.R2();
  const Arc cap{Frame(s, g.d_tilde, 0.0), p.R2(), 0.0, 0.0, CurvatureTag::kappa2, p.kappa2()};
  g.tangency_angle = to_polar(s, cap.at(join.cap_angle)).phi;
  return g;
}

ProfileCurve build_capped_lens(const PinchSpec& pinch, double offset, double right_cap_radius,
                               double left_cap_radius) {
  const SpaceCurvature& s = pinch.space();
  const double r1 = pinch.R1();
  const double slack = 1e-12 * std::max(1.0, r1);
  for (double cap : {right_cap_radius, left_cap_radius}) {
    if (!(cap >= pinch.R2() - slack && cap <= r1 + slack)) {
      throw DomainError("cap radius outside [R2, R1]");
    }
  }
  right_cap_radius = std::clamp(right_cap_radius, pinch.R2(), r1);
  left_cap_radius = std::clamp(left_cap_radius, pinch.R2(), r1);
  const double max_offset = r1 - std::max(right_cap_radius, left_cap_radius);
  if (!(offset >= -slack && offset <= max_offset + slack)) {
    throw DomainError("main-arc centre offset outside [0, R1 - cap radius]");
  }
  offset = std::clamp(offset, 0.0, max_offset);

  const CapJoin right = solve_cap(s, r1 - right_cap_radius, offset);
  const CapJoin left = solve_cap(s, r1 - left_cap_radius, offset);
  auto cap_curvature = [&](double radius) {
    if (radius == pinch.R2()) return pinch.kappa2();
    if (radius == r1) return pinch.kappa1();
    return curvature_from_sphere_radius(s, radius);
  };

  ProfileCurve out;
  out.space = s;
  const std::vector<Arc> arcs{
      Arc{Frame(s, right.axis_offset, 0.0), right_cap_radius, -right.cap_angle, right.cap_angle,
          CurvatureTag::kappa2, cap_curvature(right_cap_radius)},
      Arc{Frame(s, offset, -0.5 * kPi), r1, kPi - right.main_angle, kPi + left.main_angle,
          CurvatureTag::kappa1, pinch.kappa1()},
      Arc{Frame(s, left.axis_offset, kPi), left_cap_radius, -left.cap_angle, left.cap_angle,
          CurvatureTag::kappa2, cap_curvature(left_cap_radius)},
      Arc{Frame(s, offset, 0.5 * kPi), r1, kPi - left.main_angle, kPi + right.main_angle,
          CurvatureTag::kappa1, pinch.kappa1()},
  };
  for (const Arc& a : arcs) {
    if (a.t_end > a.t_begin) out.segments.push_back(a);
  }
  return out;
}

ProfileCurve build_spindle(const SpindleSpec& spec) {
  const double r = checked_r_tilde(spec);
  const PinchSpec& p = spec.pinch;
  if (p.degenerate() || r == p.R1()) return circle_profile(p, r, CurvatureTag::kappa1);
  if (r == p.R2()) return circle_profile(p, r, CurvatureTag::kappa2);
  return build_capped_lens(p, p.R1() - r, p.R2(), p.R2());
}

Radii spindle_radii(const SpindleSpec& spec) {
  const double r = checked_r_tilde(spec);
  return Radii{r, outer_radius_bound(spec.pinch, r)};
}

std::vector<ProfileSample> sample_profile(const ProfileCurve& profile, std::size_t n) {
  if (n < 3) throw DomainError("sample_profile needs at least 3 points");
  if (profile.segments.empty()) throw DomainError("empty profile");
  const SpaceCurvature& s = profile.space;
  const double total = profile.length();
  const double step = total / static_cast<double>(n);
  std::vector<ProfileSample> out;
  out.reserve(n);
  std::size_t seg = 0;
  double seg_start = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double arc_pos = step * static_cast<double>(i);
    while (seg + 1 < profile.segments.size() &&
           arc_pos >= seg_start + profile.segments[seg].length()) {
      seg_start += profile.segments[seg].length();
      ++seg;
    }
    const Arc& a = profile.segments[seg];
    const double t = std::min(a.t_end, a.t_begin + (arc_pos - seg_start) / s.sn(a.radius));
    out.push_back(ProfileSample{a.at(t), a.tag, a.curvature, seg, t});
  }
  return out;
}

Radii numeric_radii(const ProfileCurve& profile, const Point& center, std::size_t n) {
  if (n < 1000) throw DomainError("numeric_radii needs at least 1000 samples");
  const SpaceCurvature& s = profile.space;
  const auto samples = sample_profile(profile, n);
  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) dist[i] = distance(s, center, samples[i].point);
  const auto [min_it, max_it] = std::minmax_element(dist.begin(), dist.end());
  Radii out{*min_it, *max_it};

  const double step = profile.length() / static_cast<double>(n);
  auto refine = [&](std::size_t idx, bool maximize) {
    for (int shift : {-1, 0, 1}) {
      const std::size_t j = (idx + n + static_cast<std::size_t>(shift + 1) - 1) % n;
      const ProfileSample& smp = samples[j];
      const Arc& a = profile.segments[smp.segment];
      const double dt = 1.5 * step / s.sn(a.radius);
      const double lo = std::max(a.t_begin, smp.t - dt);
      const double hi = std::min(a.t_end, smp.t + dt);
      if (!(hi > lo)) continue;
      auto f = [&](double t) { return distance(s, center, a.at(t)); };
      const double tol = 1e-14 * std::max(1.0, std::abs(hi));
      if (maximize) {
        const auto e = numerics::golden_section_max(f, lo, hi, tol);
        out.outer = std::max({out.outer, e.value, f(lo), f(hi)});
      } else {
        const auto e = numerics::golden_section_min(f, lo, hi, tol);
        out.inner = std::min({out.inner, e.value, f(lo), f(hi)});
      }
    }
  };
  refine(static_cast<std::size_t>(min_it - dist.begin()), false);
  refine(static_cast<std::size_t>(max_it - dist.begin()), true);
  return out;
}

Radii numeric_radii(const ProfileCurve& profile, std::size_t n) {
  return numeric_radii(profile, profile.symmetry_center, n);
}

JoinReport check_joins(const ProfileCurve& profile) {
  JoinReport r;
  const SpaceCurvature& s = profile.space;
  const std::size_t m = profile.segments.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Arc& a = profile.segments[i];
    const Arc& b = profile.segments[(i + 1) % m];
    r.max_gap = std::max(r.max_gap, distance(s, a.at(a.t_end), b.at(b.t_begin)));
    r.max_angle = std::max(r.max_angle, angle_between(s, a.tangent(a.t_end), b.tangent(b.t_begin)));
  }
  return r;
}

}  // namespace pinch
