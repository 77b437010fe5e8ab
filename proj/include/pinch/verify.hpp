#pragma once

// Empirical checks of the shell bounds on generated pinched bodies: random
// planar curves given by support functions, and rotationally symmetric
// bodies (stored through their meridian) in all three geometries.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "pinch/bounds.hpp"
#include "pinch/spindle.hpp"
#include "pinch/support_curve.hpp"

namespace pinch {

/// Body of revolution about the x axis of the model plane. Only the meridian
/// is stored; it must be symmetric about the axis and contain the origin.
struct RevolutionBody {
  ProfileCurve meridian;
};

using Body = std::variant<SupportCurve, RevolutionBody>;

struct CurvatureRange {
  double kmin = 0.0;
  double kmax = 0.0;
};

struct Ball {
  Point center;
  double radius = 0.0;
};

struct BoundFlags {
  bool width = true;
  bool outer = true;
  bool quotient = true;  // true when no quotient bound applies

  bool all() const { return width && outer && quotient; }
};

/// bound - observed for each checked inequality; negative means violated.
struct BoundMargins {
  double width = 0.0;
  double outer = 0.0;
  std::optional<double> quotient;
};

struct ShellResult {
  Point center;
  double inner_r = 0.0;
  double outer_R = 0.0;
  double width = 0.0;
  double quotient = 1.0;
  double width_bound = 0.0;
  double outer_bound = 0.0;  // outer_radius_bound(inner_r)
  std::optional<double> quotient_bound;
  BoundFlags satisfied;
  BoundMargins margins;
};

struct CheckOptions {
  double bound_tolerance = 1e-7;
  double pinch_tolerance = 1e-8;
};

struct InscribedOptions {
  /// When set, the search starts from randomly rotated and enlarged
  /// brackets; the optimum must not depend on it.
  std::optional<std::uint64_t> restart_seed;
};

/// Random (kappa1, kappa2)-pinched flat curve. Modes 2..modes get
/// coefficients drawn uniformly in [-1/j^2, 1/j^2] from the seed, then are scaled
/// so rho stays 1e-6 inside [R2, R1] around the midrange. Returns a circle of
/// radius (R1 + R2) / 2 when modes < 2 and of radius R1 when kappa1 == kappa2.
SupportCurve random_pinched_curve(const PinchSpec& pinch, std::uint64_t seed, int modes);

/// Random capped lens: main arcs of curvature kappa1 with random caps of
/// radius in [R2, R1] and a random main-arc offset.
RevolutionBody random_revolution_body(const PinchSpec& pinch, std::uint64_t seed);

/// The space a body lives in; support curves are flat.
SpaceCurvature body_space(const Body& body);

CurvatureRange curvature_range(const SupportCurve& curve);
CurvatureRange curvature_range(const RevolutionBody& body);
CurvatureRange curvature_range(const Body& body);

Ball inscribed_ball(const SupportCurve& curve, const InscribedOptions& options = {});
/// The centre is searched on the axis.
Ball inscribed_ball(const RevolutionBody& body);
Ball inscribed_ball(const Body& body, const InscribedOptions& options = {});

/// Largest distance from `center` to the boundary. Throws DomainError if the
/// centre is not interior (for revolution bodies: not on the axis inside).
double circumscribed_from_center(const SupportCurve& curve, const Point& center);
double circumscribed_from_center(const RevolutionBody& body, const Point& center);
double circumscribed_from_center(const Body& body, const Point& center);

/// Shell about the inscribed-ball centre compared against the bounds. Throws
/// PreconditionError if the body is not pinched by `pinch`.
ShellResult check_bounds(const Body& body, const PinchSpec& pinch, const CheckOptions& options = {});

/// At `samples` boundary points, the inner tangent disc of radius R2 must lie
/// inside the body and the body inside the outer tangent disc of radius R1,
/// each tested at 512 probe points.
bool rolling_check(const Body& body, const PinchSpec& pinch, std::size_t samples);

}  // namespace pinch
