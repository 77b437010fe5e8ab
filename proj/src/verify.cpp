#include "pinch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/numerics.hpp"
#include "pinch/rng.hpp"

namespace pinch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Flat support curves.

// d(theta) = h(theta) - <o, u(theta)> is the distance from o to the support
// line with normal theta; d' = h' + ox sin - oy cos and d'' = rho - d. The
// inscribed radius is max_o min_theta d, the circumscribed radius is the
// largest |x(theta) - o|, whose critical points are the roots of d' as well.
class FlatObjective {
 public:
  static constexpr std::size_t kSamples = 512;

  explicit FlatObjective(const SupportCurve& curve) : curve_(curve) {
    h_.resize(kSamples);
    cos_.resize(kSamples);
    sin_.resize(kSamples);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const double t = angle(i);
      h_[i] = curve.h(t);
      cos_[i] = std::cos(t);
      sin_[i] = std::sin(t);
    }
    rho_max_ = curve.rho_extremes().max;
  }

  static double angle(std::size_t i) {
    return kTwoPi * static_cast<double>(i) / static_cast<double>(kSamples);
  }

  // Exact min_theta d up to root-finding precision.
  double min_distance(double ox, double oy) const {
    std::vector<double>& d = scratch_;
    d.resize(kSamples);
    double gmin = std::numeric_limits<double>::infinity();
    double amax = 0.0;
    for (std::size_t i = 0; i < kSamples; ++i) {
      d[i] = h_[i] - ox * cos_[i] - oy * sin_[i];
      gmin = std::min(gmin, d[i]);
      amax = std::max(amax, std::abs(d[i]));
    }
    // Grid minima are at most max|d''| step^2 / 8 above the minimum nearby.
    const double step = kTwoPi / static_cast<double>(kSamples);
    const double threshold = 1.01 * (rho_max_ + amax) * step * step / 8.0 + 1e-15;
    double best = gmin;
    for (std::size_t i = 0; i < kSamples; ++i) {
      const double prev = d[(i + kSamples - 1) % kSamples];
      const double next = d[(i + 1) % kSamples];
      if (d[i] <= prev && d[i] <= next && d[i] <= gmin + threshold) {
        best = std::min(best, refine(ox, oy, angle(i), step, false));
      }
    }
    return best;
  }

  double max_radius(double ox, double oy) const {
    std::vector<double>& r = scratch_;
    r.resize(kSamples);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const Vec2 p = curve_.boundary(angle(i));
      r[i] = std::hypot(p.x - ox, p.y - oy);
    }
    const double gmax = *std::max_element(r.begin(), r.end());
    const double step = kTwoPi / static_cast<double>(kSamples);
    double best = gmax;
    for (std::size_t i = 0; i < kSamples; ++i) {
      const double prev = r[(i + kSamples - 1) % kSamples];
      const double next = r[(i + 1) % kSamples];
      if (r[i] >= prev && r[i] >= next && r[i] >= 0.95 * gmax) {
        best = std::max(best, refine(ox, oy, angle(i), step, true));
      }
    }
    return best;
  }

 private:
  // Local extremum of d (minimize) or of |x - o| (maximize) in
  // [t - step, t + step]; both are located at roots of d'.
  double refine(double ox, double oy, double t, double step, bool maximize) const {
    auto dd = [&](double th) {
      const SupportJet j = curve_.jet(th);
      const double c = std::cos(th);
      const double s = std::sin(th);
      const double d = j.h - ox * c - oy * s;
      return std::pair<double, double>{j.dh + ox * s - oy * c, j.rho - d};
    };
    auto value = [&](double th) {
      if (!maximize) {
        const SupportJet j = curve_.jet(th);
        return j.h - ox * std::cos(th) - oy * std::sin(th);
      }
      const Vec2 p = curve_.boundary(th);
      return std::hypot(p.x - ox, p.y - oy);
    };
    const double lo = t - step;
    const double hi = t + step;
    const double glo = dd(lo).first;
    const double ghi = dd(hi).first;
    double best = maximize ? std::max(value(lo), value(hi)) : std::min(value(lo), value(hi));
    double root = t;
    if ((glo < 0.0) != (ghi < 0.0)) {
      root = numerics::safeguarded_newton(dd, lo, hi, glo, 1e-15);
    } else {
      const auto e = maximize ? numerics::golden_section_max(value, lo, hi, 1e-13)
                              : numerics::golden_section_min(value, lo, hi, 1e-13);
      root = e.x;
    }
    const double v = value(root);
    return maximize ? std::max(best, v) : std::min(best, v);
  }

  const SupportCurve& curve_;
  std::vector<double> h_;
  std::vector<double> cos_;
  std::vector<double> sin_;
  double rho_max_ = 0.0;
  mutable std::vector<double> scratch_;
};

Point flat_point(double x, double y) { return Point{1.0, x, y}; }

// ---------------------------------------------------------------------------
// Revolution bodies.

Point axis_point(const SpaceCurvature& s, double t) {
  return polar_point(s, std::abs(t), t < 0.0 ? kPi : 0.0);
}

// Signed axis coordinate of a point on the axis.
double axis_coordinate(const SpaceCurvature& s, const Point& p) {
  const Polar q = to_polar(s, p);
  return std::cos(q.phi) < 0.0 ? -q.rho : q.rho;
}

bool angle_in_arc(double phi, const Arc& a) {
  double rel = std::fmod(phi - a.t_begin, kTwoPi);
  if (rel < 0.0) rel += kTwoPi;
  return rel <= a.t_end - a.t_begin;
}

double distance_to_arc(const SpaceCurvature& s, const Arc& a, const Point& p) {
  const Polar local = to_polar(s, a.frame.to_local(p));
  if (angle_in_arc(local.phi, a)) return std::abs(local.rho - a.radius);
  return std::min(distance(s, p, a.at(a.t_begin)), distance(s, p, a.at(a.t_end)));
}

double distance_to_meridian(const ProfileCurve& m, const Point& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Arc& a : m.segments) best = std::min(best, distance_to_arc(m.space, a, p));
  return best;
}

struct AxisSpan {
  double left = 0.0;
  double right = 0.0;
};

// Where the meridian crosses the axis: only arcs centred on the axis can
// cross it, at local angles 0 or pi.
AxisSpan axis_span(const ProfileCurve& m) {
  const SpaceCurvature& s = m.space;
  AxisSpan span{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Arc& a : m.segments) {
    if (std::abs(a.center().y) > 1e-14) continue;
    for (double t : {0.0, kPi}) {
      if (!angle_in_arc(t, a)) continue;
      const double x = axis_coordinate(s, a.at(t));
      span.left = std::min(span.left, x);
      span.right = std::max(span.right, x);
    }
  }
  if (!(span.left < 0.0 && span.right > 0.0)) {
    throw DomainError("meridian does not cross the axis on both sides of the origin");
  }
  return span;
}

// Tangent discs of radius `radius` at a point of arc `a` with parameter t,
// on the inner side: centre at distance `radius` from the point towards the
// arc centre.
Point tangent_disc_center(const SpaceCurvature& s, const Arc& a, double t, double radius) {
  const double along = a.radius - radius;
  const Point local = along >= 0.0 ? polar_point(s, along, t) : polar_point(s, -along, t + kPi);
  return a.frame.to_world(local);
}

// Chart polygon of a meridian, star-shaped about the origin, for
// point-in-body tests.
class ChartPolygon {
 public:
  explicit ChartPolygon(const ProfileCurve& m) {
    const auto samples = sample_profile(m, 8192);
    pts_.reserve(samples.size());
    for (const auto& smp : samples) {
      const ChartPoint c = gnomonic(smp.point);
      pts_.push_back(Vec2{c.u, c.v});
    }
    std::sort(pts_.begin(), pts_.end(), [](const Vec2& a, const Vec2& b) {
      return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
    angles_.reserve(pts_.size());
    for (const Vec2& p : pts_) angles_.push_back(std::atan2(p.y, p.x));
  }

  // Signed distance of q to the edge it projects on; positive inside.
  double depth(const ChartPoint& q) const {
    const double a = std::atan2(q.v, q.u);
    const std::size_t n = pts_.size();
    const std::size_t hi = static_cast<std::size_t>(
        std::upper_bound(angles_.begin(), angles_.end(), a) - angles_.begin());
    const Vec2& p0 = pts_[(hi + n - 1) % n];
    const Vec2& p1 = pts_[hi % n];
    const double ex = p1.x - p0.x;
    const double ey = p1.y - p0.y;
    const double len = std::hypot(ex, ey);
    return (ex * (q.v - p0.y) - ey * (q.u - p0.x)) / len;
  }

 private:
  std::vector<Vec2> pts_;
  std::vector<double> angles_;
};

// Normal angles where 1/rho leaves [kappa1 - tol, kappa2 + tol].
std::string pinch_violations(const SupportCurve& curve, const PinchSpec& pinch, double tol) {
  std::ostringstream os;
  os.precision(9);
  int listed = 0;
  for (std::size_t i = 0; i < SupportCurve::kGrid; ++i) {
    const double t = SupportCurve::grid_angle(i);
    const double rho = curve.rho(t);
    const double k = rho > 0.0 ? 1.0 / rho : std::numeric_limits<double>::infinity();
    if (k < pinch.kappa1() - tol || k > pinch.kappa2() + tol) {
      if (listed < 8) os << (listed ? ", " : "") << "theta=" << t << " (k=" << k << ")";
      ++listed;
    }
  }
  if (listed == 0) {
    // Only the refined extremes fall outside.
    const auto e = curve.rho_extremes();
    os << "theta=" << e.theta_min << " (k=" << 1.0 / e.min << "), theta=" << e.theta_max
       << " (k=" << 1.0 / e.max << ")";
  } else if (listed > 8) {
    os << " and " << listed - 8 << " more";
  }
  return os.str();
}

std::string pinch_violations(const RevolutionBody& body, const PinchSpec& pinch, double tol) {
  std::ostringstream os;
  os.precision(9);
  bool first = true;
  for (std::size_t i = 0; i < body.meridian.segments.size(); ++i) {
    const Arc& a = body.meridian.segments[i];
    if (a.curvature < pinch.kappa1() - tol || a.curvature > pinch.kappa2() + tol) {
      os << (first ? "" : ", ") << "segment " << i << " polar angles [" << a.t_begin << ", "
         << a.t_end << "] (k=" << a.curvature << ")";
      first = false;
    }
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators.

SupportCurve random_pinched_curve(const PinchSpec& pinch, std::uint64_t seed, int modes) {
  if (!pinch.space().is_flat()) {
    throw UnsupportedGeometry("random support curves are Euclidean");
  }
  const double r1 = pinch.R1();
  const double r2 = pinch.R2();
  if (pinch.degenerate()) return SupportCurve::circle(r1);
  const double mid = 0.5 * (r1 + r2);
  if (modes < 2) return SupportCurve::circle(mid);

  CounterRng rng(seed);
  std::vector<double> a;
  std::vector<double> b;
  for (int j = 2; j <= modes; ++j) {
    a.push_back(rng.uniform(-1.0, 1.0) / (j * j));
    b.push_back(rng.uniform(-1.0, 1.0) / (j * j));
  }
  const auto shape = SupportCurve::fourier(0.0, a, b).rho_extremes();
  constexpr double kMargin = 1e-6;
  const double room = 0.5 * (r1 - r2) - kMargin;
  if (!(room > 0.0) || !(shape.max > 0.0) || !(shape.min < 0.0)) return SupportCurve::circle(mid);
  const double scale = std::min(room / shape.max, room / -shape.min);
  for (double& v : a) v *= scale;
  for (double& v : b) v *= scale;
  SupportCurve curve = SupportCurve::fourier(mid, std::move(a), std::move(b));

  const auto e = curve.rho_extremes();
  if (!(e.min >= r2 && e.max <= r1)) return SupportCurve::circle(mid);
  for (std::size_t i = 0; i < SupportCurve::kGrid; ++i) {
    if (!(curve.h(SupportCurve::grid_angle(i)) > 0.0)) return SupportCurve::circle(mid);
  }
  return curve;
}

RevolutionBody random_revolution_body(const PinchSpec& pinch, std::uint64_t seed) {
  CounterRng rng(seed);
  const double r1 = pinch.R1();
  const double r2 = pinch.R2();
  const double right = rng.uniform(r2, r1);
  const double left = rng.uniform(r2, r1);
  const double offset = rng.uniform(0.0, r1 - std::max(right, left));
  return RevolutionBody{build_capped_lens(pinch, offset, right, left)};
}

SpaceCurvature body_space(const Body& body) {
  return std::visit(Overloaded{[](const SupportCurve&) { return SpaceCurvature::flat(); },
                               [](const RevolutionBody& b) { return b.meridian.space; }},
                    body);
}

// ---------------------------------------------------------------------------
// Curvature.

CurvatureRange curvature_range(const SupportCurve& curve) {
  const auto e = curve.rho_extremes();
  return CurvatureRange{1.0 / e.max, 1.0 / e.min};
}

CurvatureRange curvature_range(const RevolutionBody& body) {
  if (body.meridian.segments.empty()) throw DomainError("empty meridian");
  CurvatureRange r{std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};
  for (const Arc& a : body.meridian.segments) {
    r.kmin = std::min(r.kmin, a.curvature);
    r.kmax = std::max(r.kmax, a.curvature);
  }
  return r;
}

CurvatureRange curvature_range(const Body& body) {
  return std::visit([](const auto& b) { return curvature_range(b); }, body);
}

// ---------------------------------------------------------------------------
// Inscribed and circumscribed balls.

namespace {

// No disc is wider than the minimal width w = h(t) + h(t + pi), so when the
// disc of radius w / 2 between the two support lines at the minimizing t fits,
// it is the inscribed ball. Its centre solves d(t) = w / 2 and d'(t) = 0
// exactly, whereas the maximin search is only quadratically sensitive to
// sliding along those lines.
std::optional<Ball> two_contact_ball(const SupportCurve& curve, const FlatObjective& objective,
                                     double tol) {
  auto width = [&](double t) { return curve.h(t) + curve.h(t + kPi); };
  auto dw = [&](double t) {
    const SupportJet a = curve.jet(t);
    const SupportJet b = curve.jet(t + kPi);
    return std::pair<double, double>{a.dh + b.dh, a.rho - a.h + b.rho - b.h};
  };
  constexpr std::size_t n = 1024;
  const double step = kPi / static_cast<double>(n);
  std::size_t best = 0;
  double best_w = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = width(step * static_cast<double>(i));
    if (w < best_w) {
      best_w = w;
      best = i;
    }
  }
  const double lo = step * (static_cast<double>(best) - 1.0);
  const double hi = step * (static_cast<double>(best) + 1.0);
  const double glo = dw(lo).first;
  const double t = (glo < 0.0) != (dw(hi).first < 0.0)
                       ? numerics::safeguarded_newton(dw, lo, hi, glo, 1e-15)
                       : numerics::golden_section_min(width, lo, hi, 1e-13).x;
  const SupportJet j = curve.jet(t);
  const double r = 0.5 * width(t);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double a = j.h - r;  // <o, u>
  const double b = j.dh;     // <o, u'>
  const double ox = a * c - b * s;
  const double oy = a * s + b * c;
  const double reach = objective.min_distance(ox, oy);
  if (reach < r - tol) return std::nullopt;
  return Ball{flat_point(ox, oy), std::min(r, reach)};
}

}  // namespace

Ball inscribed_ball(const SupportCurve& curve, const InscribedOptions& options) {
  FlatObjective objective(curve);
  double alpha = 0.0;
  double enlarge = 1.0;
  if (options.restart_seed) {
    CounterRng rng(*options.restart_seed);
    alpha = rng.uniform(0.0, kTwoPi);
    enlarge = 1.0 + rng.uniform();
  }
  // Search coordinates (a, b) along e1 = (cos alpha, sin alpha) and e2 = e1
  // rotated by 90 degrees; the support function gives the exact bracket.
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  auto bracket = [&](double dir) {
    const double hi = curve.h(dir);
    const double lo = -curve.h(dir + kPi);
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo) * enlarge;
    return std::pair<double, double>{mid - half, mid + half};
  };
  const auto [alo, ahi] = bracket(alpha);
  const auto [blo, bhi] = bracket(alpha + 0.5 * kPi);
  const double scale = std::max({1.0, ahi - alo, bhi - blo});
  const double tol = 1e-12 * scale;

  auto phi = [&](double a, double b) {
    return objective.min_distance(a * ca - b * sa, a * sa + b * ca);
  };
  auto best_b = [&](double a) {
    return numerics::golden_section_max([&](double b) { return phi(a, b); }, blo, bhi, tol);
  };
  const auto outer = numerics::golden_section_max([&](double a) { return best_b(a).value; }, alo,
                                                  ahi, tol);
  const auto inner = best_b(outer.x);
  const double ox = outer.x * ca - inner.x * sa;
  const double oy = outer.x * sa + inner.x * ca;
  if (const auto polished = two_contact_ball(curve, objective, tol)) return *polished;
  return Ball{flat_point(ox, oy), inner.value};
}

Ball inscribed_ball(const RevolutionBody& body) {
  const ProfileCurve& m = body.meridian;
  const AxisSpan span = axis_span(m);
  auto f = [&](double t) { return distance_to_meridian(m, axis_point(m.space, t)); };
  const double tol = 1e-12 * std::max(1.0, span.right - span.left);
  const auto best = numerics::golden_section_max(f, span.left, span.right, tol);
  return Ball{axis_point(m.space, best.x), best.value};
}

Ball inscribed_ball(const Body& body, const InscribedOptions& options) {
  return std::visit(Overloaded{[&](const SupportCurve& c) { return inscribed_ball(c, options); },
                               [](const RevolutionBody& b) { return inscribed_ball(b); }},
                    body);
}

double circumscribed_from_center(const SupportCurve& curve, const Point& center) {
  FlatObjective objective(curve);
  if (!(objective.min_distance(center.x, center.y) > 0.0)) {
    throw DomainError("centre is not interior to the body");
  }
  return objective.max_radius(center.x, center.y);
}

double circumscribed_from_center(const RevolutionBody& body, const Point& center) {
  const ProfileCurve& m = body.meridian;
  const AxisSpan span = axis_span(m);
  const double t = axis_coordinate(m.space, center);
  if (std::abs(center.y) > 1e-12 || !(t > span.left && t < span.right)) {
    throw DomainError("centre must lie on the axis inside the body");
  }
  return numeric_radii(m, center, 4096).outer;
}

double circumscribed_from_center(const Body& body, const Point& center) {
  return std::visit([&](const auto& b) { return circumscribed_from_center(b, center); }, body);
}

// ---------------------------------------------------------------------------
// Shell checks.

ShellResult check_bounds(const Body& body, const PinchSpec& pinch, const CheckOptions& options) {
  if (!(body_space(body) == pinch.space())) {
    throw PreconditionError("body geometry " + body_space(body).describe() +
                            " differs from the pinch geometry " + pinch.space().describe());
  }
  const CurvatureRange k = curvature_range(body);
  const double tol = options.pinch_tolerance;
  if (k.kmin < pinch.kappa1() - tol || k.kmax > pinch.kappa2() + tol) {
    const std::string where = std::visit(
        [&](const auto& b) { return pinch_violations(b, pinch, tol); }, body);
    throw PreconditionError("body is not pinched by [" + std::to_string(pinch.kappa1()) + ", " +
                            std::to_string(pinch.kappa2()) + "] at " + where);
  }

  ShellResult out;
  const Ball ball = inscribed_ball(body);
  out.center = ball.center;
  out.inner_r = ball.radius;
  out.outer_R = circumscribed_from_center(body, ball.center);
  out.width = out.outer_R - out.inner_r;
  out.quotient = out.outer_R / out.inner_r;
  out.width_bound = width_bound(pinch).bound;
  // Round-off can put r a hair outside [R2, R1]; the bound is monotone there.
  const double r = std::clamp(out.inner_r, pinch.R2(), pinch.R1());
  out.outer_bound = outer_radius_bound(pinch, r);
  const double slack = options.bound_tolerance;
  out.margins.width = out.width_bound - out.width;
  out.margins.outer = out.outer_bound - out.outer_R;
  out.satisfied.width = out.margins.width >= -slack;
  out.satisfied.outer = out.margins.outer >= -slack;
  if (pinch.space().is_flat()) {
    out.quotient_bound = quotient_bound(pinch).bound;
    out.margins.quotient = *out.quotient_bound - out.quotient;
    out.satisfied.quotient = *out.margins.quotient >= -slack;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rolling discs.

namespace {

constexpr std::size_t kProbes = 512;

bool rolling_check_flat(const SupportCurve& curve, const PinchSpec& pinch, std::size_t samples) {
  const double r1 = pinch.R1();
  const double r2 = pinch.R2();
  const double tol = 1e-9 * std::max(1.0, r1);
  std::vector<Vec2> boundary(kProbes);
  std::vector<double> h(kProbes);
  std::vector<double> cs(kProbes);
  std::vector<double> sn(kProbes);
  for (std::size_t j = 0; j < kProbes; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(kProbes);
    boundary[j] = curve.boundary(t);
    h[j] = curve.h(t);
    cs[j] = std::cos(t);
    sn[j] = std::sin(t);
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
    const Vec2 p = curve.boundary(t);
    const double ux = std::cos(t);
    const double uy = std::sin(t);
    const Vec2 c1{p.x - r1 * ux, p.y - r1 * uy};
    const Vec2 c2{p.x - r2 * ux, p.y - r2 * uy};
    for (std::size_t j = 0; j < kProbes; ++j) {
      // Body inside the outer disc: every boundary probe within R1 of c1.
      if (std::hypot(boundary[j].x - c1.x, boundary[j].y - c1.y) > r1 + tol) return false;
      // Inner disc inside the body: its support value below h in every direction.
      if (c2.x * cs[j] + c2.y * sn[j] + r2 > h[j] + tol) return false;
    }
  }
  return true;
}

bool rolling_check_revolution(const RevolutionBody& body, const PinchSpec& pinch,
                              std::size_t samples) {
  const ProfileCurve& m = body.meridian;
  const SpaceCurvature& s = m.space;
  const double r1 = pinch.R1();
  const double r2 = pinch.R2();
  const double tol = 1e-9 * std::max(1.0, r1);
  constexpr double kChartTol = 1e-6;
  const auto boundary = sample_profile(m, kProbes);
  const auto points = sample_profile(m, std::max<std::size_t>(samples, 3));
  const ChartPolygon polygon(m);
  for (std::size_t i = 0; i < samples && i < points.size(); ++i) {
    const ProfileSample& smp = points[i];
    const Arc& a = m.segments[smp.segment];
    const Point c1 = tangent_disc_center(s, a, smp.t, r1);
    for (const ProfileSample& b : boundary) {
      if (distance(s, c1, b.point) > r1 + tol) return false;
    }
    const Point c2 = tangent_disc_center(s, a, smp.t, r2);
    const Polar pc = to_polar(s, c2);
    const Frame frame(s, pc.rho, pc.phi);
    for (std::size_t j = 0; j < kProbes; ++j) {
      const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(kProbes);
      const Point q = frame.to_world(polar_point(s, r2, t));
      if (polygon.depth(gnomonic(q)) < -kChartTol) return false;
    }
  }
  return true;
}

}  // namespace

bool rolling_check(const Body& body, const PinchSpec& pinch, std::size_t samples) {
  return std::visit(
      Overloaded{
          [&](const SupportCurve& c) { return rolling_check_flat(c, pinch, samples); },
          [&](const RevolutionBody& b) { return rolling_check_revolution(b, pinch, samples); }},
      body);
}

}  // namespace pinch
