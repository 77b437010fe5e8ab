#pragma once

// Points and motions of the model plane M^2(c).
//
// A point is stored as (w, x, y) = (cs(rho), sn(rho) cos phi, sn(rho) sin phi)
// where (rho, phi) are geodesic polar coordinates about the origin. The
// quadratic form w^2 + c (x^2 + y^2) is 1 on every point, and rotations about
// the origin and translations along the x axis act linearly. In the flat case
// w == 1 and (x, y) are Cartesian coordinates.

#include "pinch/geometry.hpp"

namespace pinch {

struct Point {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
};

/// Tangent vector in the same ambient coordinates as Point.
struct Tangent {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct Polar {
  double rho = 0.0;
  double phi = 0.0;
};

Point origin();
Point polar_point(const SpaceCurvature& space, double rho, double phi);
Polar to_polar(const SpaceCurvature& space, const Point& p);

double distance(const SpaceCurvature& space, const Point& p, const Point& q);

/// Riemannian norm of a tangent vector.
double norm(const SpaceCurvature& space, const Tangent& v);

/// Angle between two tangent vectors at the same point, stable near 0.
double angle_between(const SpaceCurvature& space, const Tangent& u, const Tangent& v);

/// Orthonormal frame obtained from the origin frame by translating a distance
/// rho along the x axis, then rotating by psi about the origin. The frame's
/// origin is the point at polar coordinates (rho, psi); its local angle 0
/// points away from the model origin.
class Frame {
 public:
  Frame(const SpaceCurvature& space, double rho, double psi);

  const SpaceCurvature& space() const { return space_; }
  double rho() const { return rho_; }
  double psi() const { return psi_; }

  Point center() const;
  Point to_world(const Point& local) const;
  Tangent to_world(const Tangent& local) const;
  Point to_local(const Point& world) const;

 private:
  SpaceCurvature space_;
  double rho_;
  double psi_;
  double cos_psi_;
  double sin_psi_;
  double cs_rho_;
  double sn_rho_;
};

/// Gnomonic chart centred at the origin: geodesics map to straight lines.
/// For the sphere the point must lie in the open hemisphere w > 0.
struct ChartPoint {
  double u = 0.0;
  double v = 0.0;
};
ChartPoint gnomonic(const Point& p);

}  // namespace pinch
