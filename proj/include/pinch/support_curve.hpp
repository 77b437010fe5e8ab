#pragma once

// Planar convex curves described by their support function h(theta). The
// curvature radius is rho = h + h'', so pinching kappa1 <= 1/rho <= kappa2 is
// R2 <= rho <= R1.

#include <cstddef>
#include <utility>
#include <vector>

#include "pinch/spindle.hpp"

namespace pinch {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// h, h' and rho = h + h'' at one normal angle.
struct SupportJet {
  double h = 0.0;
  double dh = 0.0;
  double rho = 0.0;
};

class SupportCurve {
 public:
  /// Number of normal directions used by grid scans.
  static constexpr std::size_t kGrid = 2048;

  /// rho(theta) = h0 + sum_j (a_j cos j theta + b_j sin j theta), where
  /// cos_coeffs[i] and sin_coeffs[i] are a_j, b_j for mode j = i + 2.
  static SupportCurve fourier(double h0, std::vector<double> cos_coeffs,
                              std::vector<double> sin_coeffs);
  static SupportCurve circle(double radius, Vec2 center = {});
  /// Exact support function of a flat arc profile (e.g. a rounded spindle).
  static SupportCurve from_profile(const ProfileCurve& profile);

  bool is_fourier() const { return arcs_.empty(); }
  double h0() const { return h0_; }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }

  SupportJet jet(double theta) const;
  double h(double theta) const { return jet(theta).h; }
  double rho(double theta) const { return jet(theta).rho; }
  /// Boundary point with outer normal (cos theta, sin theta).
  Vec2 boundary(double theta) const;

  /// Refined minimum and maximum of rho with the normal angles attaining them.
  struct RhoExtremes {
    double min = 0.0;
    double theta_min = 0.0;
    double max = 0.0;
    double theta_max = 0.0;
  };
  RhoExtremes rho_extremes() const;

  SupportCurve translated(Vec2 t) const;
  SupportCurve rotated(double angle) const;
  SupportCurve scaled(double lambda) const;

  static double grid_angle(std::size_t i);

 private:
  struct ArcPiece {
    double theta_begin;
    double theta_end;
    Vec2 center;
    double radius;
  };

  SupportCurve() = default;

  // rho', rho'' of the Fourier part.
  std::pair<double, double> rho_derivatives(double theta) const;

  double h0_ = 0.0;
  std::vector<double> cos_;
  std::vector<double> sin_;
  Vec2 shift_;
  std::vector<ArcPiece> arcs_;
};

}  // namespace pinch
