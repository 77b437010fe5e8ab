#pragma once

// Sharp spherical-shell bounds for domains whose boundary normal curvatures
// are pinched between kappa1 and kappa2, and the extremal profile functions
// of the rounded spindle family they are derived from.

#include <optional>

#include "pinch/geometry.hpp"

namespace pinch {

/// Largest possible shell width R - r, and the spindle attaining it.
struct WidthBoundResult {
  double bound = 0.0;
  double maximizer_r = 0.0;  // inscribed radius of the extremal spindle
  double attained_R = 0.0;   // its circumscribed radius
};

/// Largest possible quotient R / r (Euclidean only), and the spindle attaining it.
struct QuotientBoundResult {
  double bound = 1.0;
  double maximizer_r = 0.0;
  double attained_R = 0.0;
};

struct StabilityResult {
  double width_constant = 0.0;             // C(kappa, c)
  std::optional<double> quotient_constant;  // flat only
  double epsilon = 0.0;

  /// C(kappa, c) * epsilon, the strict upper bound on R - r.
  double width_limit() const { return width_constant * epsilon; }
};

/// Sharp upper bound on R - r. In all three geometries the bound is 2u - (R1 - R2)
/// where u = R1 - r* is the closed-form optimal main-arc centre offset.
WidthBoundResult width_bound(const PinchSpec& pinch);

/// Sharp upper bound on the outer radius given the inner radius r in [R2, R1].
double outer_radius_bound(const PinchSpec& pinch, double r);

/// w(r~) = outer_radius_bound(r~) - r~.
double width_profile(const PinchSpec& pinch, double r_tilde);

/// q(r~) = outer_radius_bound(r~) / r~. Flat only.
double quotient_profile(const PinchSpec& pinch, double r_tilde);

/// The inscribed radius r~0 in (R2, R1) maximizing q. Flat, kappa2 > kappa1.
double quotient_maximizer(const PinchSpec& pinch);

/// Sharp upper bound on R / r. Flat only.
QuotientBoundResult quotient_bound(const PinchSpec& pinch);

/// kappa2 / kappa1, the coarse quotient bound. Flat only.
double quotient_bound_coarse(const PinchSpec& pinch);

/// kappa (sqrt 2 - 1) / (kappa^2 + c).
double stability_width_constant(double kappa, const SpaceCurvature& space);

/// sqrt 2 - 1.
double stability_quotient_constant();

StabilityResult stability(const SpaceCurvature& space, double kappa, double epsilon);

}  // namespace pinch
