#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pinch/bounds.hpp"
#include "pinch/errors.hpp"
#include "test_support.hpp"

namespace pinch {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

PinchSpec flat(double k1, double k2) { return PinchSpec::make(SpaceCurvature::flat(), k1, k2); }

// Reference values computed with 40-digit arithmetic.
constexpr double kSphWidth = 0.13528051831495749;     // c = 1, (1, 2)
constexpr double kSphMaximizer = 0.5568826270416485;
constexpr double kHypWidth = 0.08348782589629389;     // c = -1, (2, 3)
constexpr double kHypMaximizer = 0.4061959543588668;

TEST(WidthBound, FlatExample) {
  const auto w = width_bound(flat(1.0, 2.0));
  EXPECT_NEAR(w.bound, (kSqrt2 - 1.0) / 2.0, 1e-15);
  EXPECT_NEAR(w.maximizer_r, 1.0 - 0.5 / kSqrt2, 1e-15);
  EXPECT_NEAR(w.maximizer_r, 0.6464466094067262, 1e-15);
  EXPECT_NEAR(w.attained_R - w.maximizer_r, w.bound, 1e-12);
}

TEST(WidthBound, DegenerateIsZero) {
  EXPECT_EQ(width_bound(flat(3.0, 3.0)).bound, 0.0);
  EXPECT_EQ(width_bound(PinchSpec::make(SpaceCurvature::hyperbolic(1.0), 2.0, 2.0)).bound, 0.0);
}

TEST(WidthBound, CurvedExamples) {
  const auto sph = width_bound(PinchSpec::make(SpaceCurvature::spherical(1.0), 1.0, 2.0));
  EXPECT_NEAR(sph.bound, kSphWidth, 1e-14);
  EXPECT_NEAR(sph.maximizer_r, kSphMaximizer, 1e-14);
  const auto hyp = width_bound(PinchSpec::make(SpaceCurvature::hyperbolic(1.0), 2.0, 3.0));
  EXPECT_NEAR(hyp.bound, kHypWidth, 1e-14);
  EXPECT_NEAR(hyp.maximizer_r, kHypMaximizer, 1e-14);
}

TEST(WidthBound, MatchesArccosForm) {
  // The textbook forms (2/k) arccos sqrt(cos kD) - D and the arccosh analogue.
  for (double k : {0.5, 1.0, 2.0}) {
    const auto s = SpaceCurvature::spherical(k);
    const PinchSpec p = PinchSpec::make(s, 0.7 * k, 1.9 * k);
    const double gap = p.radius_gap();
    EXPECT_NEAR(width_bound(p).bound, 2.0 / k * std::acos(std::sqrt(std::cos(k * gap))) - gap, 1e-12);
    const auto h = SpaceCurvature::hyperbolic(k);
    const PinchSpec q = PinchSpec::make(h, 1.3 * k, 2.9 * k);
    const double gq = q.radius_gap();
    EXPECT_NEAR(width_bound(q).bound, 2.0 / k * std::acosh(std::sqrt(std::cosh(k * gq))) - gq, 1e-12);
  }
}

TEST(WidthBound, MaximizerMatchesNumericMaximization) {
  for (int g = 0; g < 3; ++g) {
    CounterRng rng(10 + g);
    for (int i = 0; i < 50; ++i) {
      const PinchSpec p = testing::random_pinch(testing::geometry(g), rng);
      const auto w = width_bound(p);
      const auto num = testing::numeric_width_max(p);
      EXPECT_NEAR(w.bound, num.value, 1e-12);
      EXPECT_NEAR(w.maximizer_r, num.x, 1e-6);
      EXPECT_NEAR(width_profile(p, w.maximizer_r), w.bound, 1e-12);
      EXPECT_GE(w.maximizer_r, p.R2());
      EXPECT_LE(w.maximizer_r, p.R1());
    }
  }
}

TEST(WidthBound, GridMaximumAgrees) {
  for (int g = 0; g < 3; ++g) {
    CounterRng rng(20 + g);
    for (int i = 0; i < 20; ++i) {
      const PinchSpec p = testing::random_pinch(testing::geometry(g), rng);
      double best = 0.0;
      for (int j = 0; j <= 10000; ++j) {
        best = std::max(best, width_profile(p, p.R2() + p.radius_gap() * j / 10000.0));
      }
      const double bound = width_bound(p).bound;
      EXPECT_LE(best, bound + 1e-14);
      EXPECT_NEAR(best, bound, 1e-8);
    }
  }
}

TEST(OuterRadiusBound, FlatExamples) {
  const PinchSpec p = flat(1.0, 2.0);
  EXPECT_DOUBLE_EQ(outer_radius_bound(p, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(outer_radius_bound(p, 1.0), 1.0);
  EXPECT_NEAR(outer_radius_bound(p, 0.75), std::sqrt(0.1875) + 0.5, 1e-15);
  EXPECT_NEAR(outer_radius_bound(p, 0.75), 0.9330127018922193, 1e-15);
  EXPECT_THROW(outer_radius_bound(p, 0.49), DomainError);
  EXPECT_THROW(outer_radius_bound(p, 1.01), DomainError);
}

TEST(OuterRadiusBound, MatchesTextbookForms) {
  CounterRng rng(30);
  for (int i = 0; i < 200; ++i) {
    const PinchSpec s = testing::random_pinch(SpaceCurvature::spherical(1.0), rng);
    const double r = rng.uniform(s.R2(), s.R1());
    EXPECT_NEAR(outer_radius_bound(s, r),
                std::acos(std::cos(s.radius_gap()) / std::cos(s.R1() - r)) + s.R2(), 2e-8);
    const PinchSpec h = testing::random_pinch(SpaceCurvature::hyperbolic(1.0), rng);
    const double rh = rng.uniform(h.R2(), h.R1());
    EXPECT_NEAR(outer_radius_bound(h, rh),
                std::acosh(std::cosh(h.radius_gap()) / std::cosh(h.R1() - rh)) + h.R2(), 2e-8);
  }
}

TEST(OuterRadiusBound, AtLeastInnerRadius) {
  for (int g = 0; g < 3; ++g) {
    CounterRng rng(40 + g);
    for (int i = 0; i < 100; ++i) {
      const PinchSpec p = testing::random_pinch(testing::geometry(g), rng);
      for (int j = 0; j <= 20; ++j) {
        const double r = p.R2() + p.radius_gap() * j / 20.0;
        EXPECT_GE(outer_radius_bound(p, r), r - 1e-15);
      }
    }
  }
}

TEST(WidthProfile, VanishesAtEndpoints) {
  for (int g = 0; g < 3; ++g) {
    CounterRng rng(50 + g);
    for (int i = 0; i < 200; ++i) {
      const PinchSpec p = testing::random_pinch(testing::geometry(g), rng);
      EXPECT_NEAR(width_profile(p, p.R2()), 0.0, 1e-15);
      EXPECT_NEAR(width_profile(p, p.R1()), 0.0, 1e-15);
      if (g == 0) {
        EXPECT_NEAR(quotient_profile(p, p.R2()), 1.0, 1e-15);
        EXPECT_NEAR(quotient_profile(p, p.R1()), 1.0, 1e-15);
      }
    }
  }
}

TEST(WidthProfile, Examples) {
  const PinchSpec p = flat(1.0, 2.0);
  EXPECT_EQ(width_profile(p, 0.5), 0.0);
  EXPECT_EQ(width_profile(p, 1.0), 0.0);
  EXPECT_NEAR(width_profile(p, 0.6464466094067262), 0.20710678118654752, 1e-15);
}

TEST(QuotientProfile, Examples) {
  const PinchSpec p = flat(1.0, 2.0);
  EXPECT_DOUBLE_EQ(quotient_profile(p, 0.5), 1.0);
  EXPECT_NEAR(quotient_profile(p, 0.6), 4.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(quotient_profile(flat(2.0, 2.0), 0.5), 1.0);
  EXPECT_THROW(quotient_profile(PinchSpec::make(SpaceCurvature::spherical(1.0), 1.0, 2.0), 0.6),
               UnsupportedGeometry);
}

TEST(QuotientMaximizer, Examples) {
  EXPECT_NEAR(quotient_maximizer(flat(1.0, 2.0)), 0.6, 1e-15);
  EXPECT_NEAR(quotient_profile(flat(1.0, 2.0), quotient_maximizer(flat(1.0, 2.0))), 4.0 / 3.0,
              1e-15);
  // 40-digit reference for the nearly degenerate pinch.
  EXPECT_NEAR(quotient_maximizer(flat(2.0, 2.0 + 1e-9)), 0.4999999998232233, 1e-15);
  EXPECT_THROW(quotient_maximizer(flat(2.0, 2.0)), DegenerateError);
}

TEST(QuotientMaximizer, IsTheGlobalMaximum) {
  CounterRng rng(60);
  for (int i = 0; i < 100; ++i) {
    const PinchSpec p = testing::random_pinch(SpaceCurvature::flat(), rng);
    const double r0 = quotient_maximizer(p);
    ASSERT_GT(r0, p.R2());
    ASSERT_LT(r0, p.R1());
    const double q0 = quotient_profile(p, r0);
    for (int j = 0; j <= 1000; ++j) {
      EXPECT_LE(quotient_profile(p, p.R2() + p.radius_gap() * j / 1000.0), q0 + 1e-14);
    }
    // Derivative changes sign across r0.
    const double h = 1e-5 * p.radius_gap();
    EXPECT_GT(quotient_profile(p, r0) - quotient_profile(p, r0 - h), 0.0);
    EXPECT_GT(quotient_profile(p, r0) - quotient_profile(p, r0 + h), 0.0);
  }
}

TEST(QuotientBound, Examples) {
  const auto q = quotient_bound(flat(1.0, 2.0));
  EXPECT_NEAR(q.bound, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(q.maximizer_r, 0.6, 1e-15);
  EXPECT_NEAR(q.attained_R, 0.8, 1e-15);
  EXPECT_DOUBLE_EQ(quotient_bound(flat(3.0, 3.0)).bound, 1.0);
  EXPECT_NEAR(quotient_bound(flat(1.0, 8.0)).bound, 2.4, 1e-15);
  EXPECT_THROW(quotient_bound(PinchSpec::make(SpaceCurvature::hyperbolic(1.0), 2.0, 3.0)),
               UnsupportedGeometry);
}

TEST(QuotientBound, ClosedFormEqualsProfileMaximum) {
  CounterRng rng(70);
  for (int i = 0; i < 200; ++i) {
    const PinchSpec p = testing::random_pinch(SpaceCurvature::flat(), rng);
    const auto q = quotient_bound(p);
    const double r1 = p.R1();
    const double r2 = p.R2();
    const double root = std::sqrt(2.0 * r1 * r2);
    EXPECT_NEAR(q.bound, quotient_profile(p, quotient_maximizer(p)), 1e-10 * q.bound);
    EXPECT_NEAR(q.bound, (r1 + root) / (r2 + root), 1e-12 * q.bound);
    EXPECT_NEAR(q.attained_R / q.maximizer_r, q.bound, 1e-10);
  }
}

TEST(QuotientBound, BelowCoarseBound) {
  EXPECT_DOUBLE_EQ(quotient_bound_coarse(flat(1.0, 2.0)), 2.0);
  EXPECT_DOUBLE_EQ(quotient_bound_coarse(flat(3.0, 3.0)), 1.0);
  EXPECT_DOUBLE_EQ(quotient_bound_coarse(flat(1.0, 8.0)), 8.0);
  for (int i = 1; i <= 100; ++i) {
    for (int j = i; j <= 100; ++j) {
      const PinchSpec p = flat(0.05 * i, 0.05 * j);
      const double q = quotient_bound(p).bound;
      const double coarse = quotient_bound_coarse(p);
      if (i == j) {
        EXPECT_EQ(q, coarse);
      } else {
        EXPECT_LT(q, coarse);
      }
    }
  }
}

TEST(Bounds, IncreasingInKappa2) {
  for (int g = 0; g < 3; ++g) {
    const SpaceCurvature& s = testing::geometry(g);
    const double k1 = s.kind() == GeometryKind::hyperbolic ? 1.5 : 1.0;
    double prev_w = -1.0;
    double prev_q = 0.0;
    for (double k2 = k1; k2 < 6.0 * k1; k2 += 0.05) {
      const PinchSpec p = PinchSpec::make(s, k1, k2);
      const double w = width_bound(p).bound;
      EXPECT_GT(w, prev_w);
      prev_w = w;
      if (s.is_flat()) {
        const double q = quotient_bound(p).bound;
        EXPECT_GT(q, prev_q);
        prev_q = q;
      }
    }
  }
}

TEST(Bounds, FlatLimitOfCurvedWidth) {
  for (double k : {1e-2, 1e-3, 1e-4}) {
    for (const auto& s : {SpaceCurvature::spherical(k), SpaceCurvature::hyperbolic(k)}) {
      const PinchSpec p = PinchSpec::make(s, 1.0, 2.0);
      const double flat_form = (kSqrt2 - 1.0) * p.radius_gap();
      EXPECT_NEAR(width_bound(p).bound, flat_form, k * k) << s.describe();
    }
  }
}

TEST(Stability, Constants) {
  EXPECT_NEAR(stability_width_constant(1.0, SpaceCurvature::flat()), kSqrt2 - 1.0, 1e-16);
  EXPECT_NEAR(stability_width_constant(1.0, SpaceCurvature::spherical(1.0)), 0.20710678118654752,
              1e-16);
  EXPECT_NEAR(stability_width_constant(2.0, SpaceCurvature::hyperbolic(1.0)), 0.2761423749153967,
              1e-16);
  EXPECT_NEAR(stability_quotient_constant(), 0.41421356237309505, 2e-16);
  EXPECT_THROW(stability_width_constant(1.0, SpaceCurvature::hyperbolic(1.0)), DomainError);
  const StabilityResult r = stability(SpaceCurvature::flat(), 2.0, 0.1);
  EXPECT_NEAR(r.width_limit(), 0.1 * (kSqrt2 - 1.0) / 2.0, 1e-16);
  EXPECT_TRUE(r.quotient_constant.has_value());
  EXPECT_FALSE(stability(SpaceCurvature::spherical(1.0), 1.0, 0.1).quotient_constant.has_value());
}

TEST(Stability, QuotientFirstOrder) {
  const double eps = 0.01;
  const double q = quotient_bound(flat(1.0, 1.0 + eps)).bound;
  EXPECT_LT((q - 1.0) / eps, kSqrt2 - 1.0);
  // 40-digit reference for (q(1, 1.01) - 1) / 0.01.
  EXPECT_NEAR((q - 1.0) / eps, 0.41300690230900936, 1e-12);
  const double tiny = 1e-6;
  const double slope = (quotient_bound(flat(1.0, 1.0 + tiny)).bound - 1.0) / tiny;
  EXPECT_NEAR(slope / (kSqrt2 - 1.0), 1.0, 1e-4);
}

TEST(Stability, WidthBelowLinearBound) {
  for (double kappa : {0.5, 1.0, 2.0}) {
    for (double c : {-kappa * kappa / 2.0, 0.0, 1.0}) {
      const SpaceCurvature s = SpaceCurvature::from_c(c);
      const double C = stability_width_constant(kappa, s);
      for (double eps = 1e-1; eps > 5e-7; eps /= 10.0) {
        const double w = width_bound(PinchSpec::make(s, kappa, (1.0 + eps) * kappa)).bound;
        const double ratio = w / (C * eps);
        EXPECT_LT(w, C * eps);
        EXPECT_GE(ratio, 1.0 - 10.0 * eps) << "kappa=" << kappa << " c=" << c << " eps=" << eps;
      }
    }
  }
}

TEST(Bounds, LinearInGapNearDegenerate) {
  for (int g = 0; g < 3; ++g) {
    const SpaceCurvature& s = testing::geometry(g);
    const double k1 = 2.0;
    const double w1 = width_bound(PinchSpec::make(s, k1, k1 * (1 + 1e-4))).bound;
    const double w2 = width_bound(PinchSpec::make(s, k1, k1 * (1 + 2e-4))).bound;
    EXPECT_NEAR(w2 / w1, 2.0, 1e-3);
  }
}

}  // namespace
}  // namespace pinch
