#pragma once

// Rounded spindle profiles: meridians made of two main arcs of geodesic
// curvature kappa1 joined C^1 to two caps of curvature kappa2 centred on the
// symmetry axis (the x axis of the model plane).

#include <cstddef>
#include <vector>

#include "pinch/geometry.hpp"
#include "pinch/model.hpp"

namespace pinch {

/// Which family of circles an arc belongs to: main arcs (kappa1) or caps.
enum class CurvatureTag { kappa1, kappa2 };

const char* to_string(CurvatureTag tag);

/// Arc of a geodesic circle traversed counter-clockwise about its centre,
/// parametrized by the polar angle t in the circle's frame.
struct Arc {
  Frame frame;
  double radius = 0.0;
  double t_begin = 0.0;
  double t_end = 0.0;
  CurvatureTag tag = CurvatureTag::kappa1;
  double curvature = 0.0;  // geodesic curvature of the circle

  Point center() const { return frame.center(); }
  Point at(double t) const;
  Tangent tangent(double t) const;
  double length() const;
};

/// Closed convex curve given as arcs traversed counter-clockwise.
struct ProfileCurve {
  SpaceCurvature space = SpaceCurvature::flat();
  std::vector<Arc> segments;
  Point symmetry_center;

  double length() const;
};

struct SpindleSpec {
  PinchSpec pinch;
  double r_tilde = 0.0;  // inscribed radius, in [R2, R1]
};

struct SpindleGeometry {
  double R_tilde = 0.0;                 // circumscribed radius
  double d_tilde = 0.0;                 // R~ - R2, cap centre offset along the axis
  double main_arc_center_offset = 0.0;  // R1 - r~
  double tangency_angle = 0.0;          // polar angle of the join seen from the centre
};

struct Radii {
  double inner = 0.0;
  double outer = 0.0;
};

/// Right-triangle construction of the spindle with inscribed radius r~.
SpindleGeometry spindle_geometry(const SpindleSpec& spec);

ProfileCurve build_spindle(const SpindleSpec& spec);

/// Closed-form (r~, outer_radius_bound(r~)); no curve is built.
Radii spindle_radii(const SpindleSpec& spec);

/// Main arcs of radius R1 centred at distance `offset` above and below the
/// centre, capped on the right and left by circles of the given radii centred
/// on the axis. With both caps of radius R2 this is the rounded spindle.
/// Requires 0 <= offset <= R1 - max(cap radii) and caps in [R2, R1].
ProfileCurve build_capped_lens(const PinchSpec& pinch, double offset, double right_cap_radius,
                               double left_cap_radius);

struct ProfileSample {
  Point point;
  CurvatureTag tag = CurvatureTag::kappa1;
  double curvature = 0.0;
  std::size_t segment = 0;
  double t = 0.0;
};

/// n points at equal arc-length spacing, one closed traversal starting at the
/// first segment's beginning; the start is not repeated at the end.
std::vector<ProfileSample> sample_profile(const ProfileCurve& profile, std::size_t n);

/// Minimum and maximum distance from `center` to the profile: sampled on n
/// points, then refined by golden-section search inside the owning segments.
Radii numeric_radii(const ProfileCurve& profile, const Point& center, std::size_t n);

/// numeric_radii about the profile's symmetry centre.
Radii numeric_radii(const ProfileCurve& profile, std::size_t n);

struct JoinReport {
  double max_gap = 0.0;    // distance between consecutive endpoints
  double max_angle = 0.0;  // angle between tangents at the joins
};

JoinReport check_joins(const ProfileCurve& profile);

}  // namespace pinch
