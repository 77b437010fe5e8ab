#pragma once

// Primitives of the three constant-curvature model planes M^2(c):
// curvature classification, admissible curvature pinches, geodesic circle
// radius <-> geodesic curvature, and the law of cosines.

#include <optional>
#include <string>

namespace pinch {

enum class GeometryKind { flat, spherical, hyperbolic };

/// Sectional curvature c of the ambient space, with k = sqrt(|c|).
class SpaceCurvature {
 public:
  static SpaceCurvature flat() { return SpaceCurvature(GeometryKind::flat, 0.0); }
  /// c = k^2. Throws DomainError unless k > 0 and finite.
  static SpaceCurvature spherical(double k);
  /// c = -k^2. Throws DomainError unless k > 0 and finite.
  static SpaceCurvature hyperbolic(double k);
  /// Classifies by sign(c).
  static SpaceCurvature from_c(double c);

  double c() const { return c_; }
  double k() const { return k_; }
  GeometryKind kind() const { return kind_; }
  bool is_flat() const { return kind_ == GeometryKind::flat; }

  // Generalized trigonometric functions of the geometry: sn is t, sin(kt)/k
  // or sinh(kt)/k; cs is 1, cos(kt) or cosh(kt). cs^2 + c*sn^2 == 1.
  double sn(double t) const;
  double cs(double t) const;

  std::string describe() const;

  friend bool operator==(const SpaceCurvature&, const SpaceCurvature&) = default;

 private:
  SpaceCurvature(GeometryKind kind, double k);

  GeometryKind kind_;
  double k_;
  double c_;
};

/// nullopt iff (kappa1, kappa2) is an admissible pinch for c; otherwise the
/// violated condition in words.
std::optional<std::string> admissibility_violation(const SpaceCurvature& space, double kappa1,
                                                   double kappa2);

bool admissible(const SpaceCurvature& space, double kappa1, double kappa2);

/// Geodesic radius of the circle (sphere) of constant normal curvature kappa.
/// Flat: 1/kappa; spherical: arccot(kappa/k)/k in (0, pi/(2k)]; hyperbolic:
/// arccoth(kappa/k)/k.
double sphere_radius_from_curvature(const SpaceCurvature& space, double kappa);

/// Inverse of sphere_radius_from_curvature. Requires R > 0 and, for c > 0,
/// R <= pi/(2k).
double curvature_from_sphere_radius(const SpaceCurvature& space, double radius);

/// Side opposite the angle gamma in a geodesic triangle with sides a, b
/// enclosing gamma.
double law_of_cosines_side(const SpaceCurvature& space, double a, double b, double gamma);

/// Angle between sides a and b of the geodesic triangle whose third side is d.
/// Throws DomainError when (a, b, d) violates the triangle inequality beyond
/// 1e-12 in the normalized cosine.
double law_of_cosines_angle(const SpaceCurvature& space, double a, double b, double d);

/// Remaining leg of a geodesic right triangle with the given hypotenuse and leg.
double right_triangle_leg(const SpaceCurvature& space, double hypotenuse, double leg);

/// Admissible curvature pinch kappa1 <= k_n <= kappa2 together with the radii
/// R1 >= R2 of the geodesic spheres of curvature kappa1 and kappa2.
class PinchSpec {
 public:
  /// Throws DomainError naming the violated admissibility condition.
  static PinchSpec make(const SpaceCurvature& space, double kappa1, double kappa2);

  const SpaceCurvature& space() const { return space_; }
  double kappa1() const { return kappa1_; }
  double kappa2() const { return kappa2_; }
  double R1() const { return r1_; }
  double R2() const { return r2_; }
  /// R1 - R2.
  double radius_gap() const { return r1_ - r2_; }
  bool degenerate() const { return kappa1_ == kappa2_; }

 private:
  PinchSpec(SpaceCurvature space, double kappa1, double kappa2, double r1, double r2)
      : space_(space), kappa1_(kappa1), kappa2_(kappa2), r1_(r1), r2_(r2) {}

  SpaceCurvature space_;
  double kappa1_;
  double kappa2_;
  double r1_;
  double r2_;
};

}  // namespace pinch
