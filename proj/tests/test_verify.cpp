#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pinch/errors.hpp"
#include "pinch/verify.hpp"
#include "test_support.hpp"

namespace pinch {
namespace {

constexpr double kPi = std::numbers::pi;

PinchSpec flat(double k1, double k2) { return PinchSpec::make(SpaceCurvature::flat(), k1, k2); }

TEST(RandomCurve, DeterministicInSeed) {
  const SupportCurve a = random_pinched_curve(flat(1, 2), 42, 6);
  const SupportCurve b = random_pinched_curve(flat(1, 2), 42, 6);
  const SupportCurve c = random_pinched_curve(flat(1, 2), 43, 6);
  EXPECT_EQ(a.cos_coeffs(), b.cos_coeffs());
  EXPECT_EQ(a.sin_coeffs(), b.sin_coeffs());
  EXPECT_NE(a.cos_coeffs(), c.cos_coeffs());
  EXPECT_EQ(a.cos_coeffs().size(), 5u);
}

TEST(RandomCurve, TrivialCases) {
  const SupportCurve zero = random_pinched_curve(flat(1, 2), 5, 0);
  EXPECT_TRUE(zero.cos_coeffs().empty());
  EXPECT_DOUBLE_EQ(zero.h0(), 0.75);
  const SupportCurve unit = random_pinched_curve(flat(1, 1), 5, 8);
  EXPECT_TRUE(unit.cos_coeffs().empty());
  EXPECT_DOUBLE_EQ(unit.h0(), 1.0);
  EXPECT_THROW(random_pinched_curve(PinchSpec::make(SpaceCurvature::spherical(1), 1, 2), 0, 4),
               UnsupportedGeometry);
}

TEST(RandomCurve, SatisfiesInvariants) {
  const PinchSpec pinches[] = {flat(1, 1.1), flat(1, 2), flat(1, 5), flat(2, 3), flat(0.5, 4)};
  for (const PinchSpec& p : pinches) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const SupportCurve c = random_pinched_curve(p, seed, 8);
      double cx = 0.0;
      double cy = 0.0;
      for (std::size_t i = 0; i < SupportCurve::kGrid; ++i) {
        const double t = SupportCurve::grid_angle(i);
        const SupportJet j = c.jet(t);
        EXPECT_GE(j.rho, p.R2());
        EXPECT_LE(j.rho, p.R1());
        EXPECT_GT(j.h, 0.0);
        cx += j.rho * std::cos(t);
        cy += j.rho * std::sin(t);
      }
      EXPECT_NEAR(cx * 2 * kPi / SupportCurve::kGrid, 0.0, 1e-10);
      EXPECT_NEAR(cy * 2 * kPi / SupportCurve::kGrid, 0.0, 1e-10);
    }
  }
}

TEST(CurvatureRange, Examples) {
  const CurvatureRange circle = curvature_range(SupportCurve::circle(0.75));
  EXPECT_DOUBLE_EQ(circle.kmin, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(circle.kmax, 4.0 / 3.0);
  const ProfileCurve spindle = build_spindle(SpindleSpec{flat(1, 2), 0.75});
  const CurvatureRange s = curvature_range(SupportCurve::from_profile(spindle));
  EXPECT_NEAR(s.kmin, 1.0, 1e-6);
  EXPECT_NEAR(s.kmax, 2.0, 1e-6);
  const CurvatureRange g = curvature_range(random_pinched_curve(flat(1, 2), 42, 6));
  EXPECT_GE(g.kmin, 1.0 - 1e-8);
  EXPECT_LE(g.kmax, 2.0 + 1e-8);
  const CurvatureRange rev = curvature_range(RevolutionBody{spindle});
  EXPECT_DOUBLE_EQ(rev.kmin, 1.0);
  EXPECT_DOUBLE_EQ(rev.kmax, 2.0);
}

TEST(InscribedBall, CircleAndTranslatedCircle) {
  const Ball a = inscribed_ball(SupportCurve::circle(0.75));
  EXPECT_NEAR(a.radius, 0.75, 1e-10);
  EXPECT_NEAR(a.center.x, 0.0, 1e-9);
  EXPECT_NEAR(a.center.y, 0.0, 1e-9);
  const Ball b = inscribed_ball(SupportCurve::circle(0.75, Vec2{0.3, -0.2}));
  EXPECT_NEAR(b.radius, 0.75, 1e-10);
  EXPECT_NEAR(b.center.x, 0.3, 1e-9);
  EXPECT_NEAR(b.center.y, -0.2, 1e-9);
}

TEST(InscribedBall, SpindleBody) {
  const ProfileCurve spindle = build_spindle(SpindleSpec{flat(1, 2), 0.75});
  const Ball a = inscribed_ball(SupportCurve::from_profile(spindle));
  EXPECT_NEAR(a.radius, 0.75, 1e-10);
  EXPECT_NEAR(a.center.x, 0.0, 1e-6);
  EXPECT_NEAR(a.center.y, 0.0, 1e-9);
  const Ball b = inscribed_ball(RevolutionBody{spindle});
  EXPECT_NEAR(b.radius, 0.75, 1e-12);
  EXPECT_NEAR(b.center.x, 0.0, 1e-6);
}

TEST(InscribedBall, InvariantUnderRestarts) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SupportCurve c = random_pinched_curve(flat(1, 2), seed, 6);
    const Ball base = inscribed_ball(c);
    for (std::uint64_t restart = 1; restart <= 10; ++restart) {
      const Ball b = inscribed_ball(c, InscribedOptions{restart});
      EXPECT_NEAR(b.radius, base.radius, 1e-9);
      EXPECT_NEAR(b.center.x, base.center.x, 1e-6);
      EXPECT_NEAR(b.center.y, base.center.y, 1e-6);
    }
  }
}

TEST(InscribedBall, BeatsGridSearch) {
  // No grid point of the plane has a larger distance to all support lines.
  const SupportCurve c = random_pinched_curve(flat(1, 2), 7, 6);
  const Ball b = inscribed_ball(c);
  double best = -INFINITY;
  for (int i = -40; i <= 40; ++i) {
    for (int j = -40; j <= 40; ++j) {
      const double ox = b.center.x + 0.002 * i;
      const double oy = b.center.y + 0.002 * j;
      double m = INFINITY;
      for (int k = 0; k < 4096; ++k) {
        const double t = 2 * kPi * k / 4096.0;
        m = std::min(m, c.h(t) - ox * std::cos(t) - oy * std::sin(t));
      }
      best = std::max(best, m);
    }
  }
  EXPECT_GE(b.radius, best - 1e-6);
  EXPECT_LE(b.radius, best + 1e-9);
}

TEST(Circumscribed, Examples) {
  EXPECT_NEAR(circumscribed_from_center(SupportCurve::circle(0.75), Point{}), 0.75, 1e-14);
  const ProfileCurve spindle = build_spindle(SpindleSpec{flat(1, 2), 0.75});
  EXPECT_NEAR(circumscribed_from_center(SupportCurve::from_profile(spindle), Point{}),
              0.9330127018922193, 1e-12);
  EXPECT_NEAR(circumscribed_from_center(RevolutionBody{spindle}, Point{}), 0.9330127018922193,
              1e-12);
  const SupportCurve c = random_pinched_curve(flat(1, 2), 42, 6);
  const Ball b = inscribed_ball(c);
  EXPECT_LE(circumscribed_from_center(c, b.center), outer_radius_bound(flat(1, 2), b.radius) + 1e-7);
}

TEST(Circumscribed, CentreOutsideIsRejected) {
  EXPECT_THROW(circumscribed_from_center(SupportCurve::circle(0.75), Point{1.0, 1.0, 0.0}),
               DomainError);
  const ProfileCurve spindle = build_spindle(SpindleSpec{flat(1, 2), 0.75});
  EXPECT_THROW(circumscribed_from_center(RevolutionBody{spindle}, Point{1.0, 2.0, 0.0}),
               DomainError);
}

TEST(CheckBounds, Circle) {
  const ShellResult r = check_bounds(SupportCurve::circle(0.75), flat(1, 2));
  EXPECT_NEAR(r.width, 0.0, 1e-12);
  EXPECT_NEAR(r.quotient, 1.0, 1e-12);
  EXPECT_TRUE(r.satisfied.all());
  ASSERT_TRUE(r.quotient_bound.has_value());
  EXPECT_NEAR(*r.quotient_bound, 4.0 / 3.0, 1e-15);
}

TEST(CheckBounds, SpindleAtWidthMaximizerIsSharp) {
  for (int g = 0; g < 3; ++g) {
    CounterRng rng(60 + g);
    const PinchSpec p = testing::random_pinch(testing::geometry(g), rng);
    const ProfileCurve spindle = build_spindle(SpindleSpec{p, width_bound(p).maximizer_r});
    const ShellResult r = check_bounds(RevolutionBody{spindle}, p);
    EXPECT_NEAR(r.width, r.width_bound, 1e-6) << p.space().describe();
    EXPECT_TRUE(r.satisfied.all());
    if (g == 0) {
      const ShellResult s = check_bounds(SupportCurve::from_profile(spindle), p);
      EXPECT_NEAR(s.width, s.width_bound, 1e-6);
      EXPECT_TRUE(s.satisfied.all());
    }
  }
}

TEST(CheckBounds, ShellInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ShellResult r = check_bounds(random_pinched_curve(flat(1, 2), seed, 6), flat(1, 2));
    EXPECT_GE(r.width, 0.0);
    EXPECT_GE(r.quotient, 1.0);
    EXPECT_NEAR(r.width, r.outer_R - r.inner_r, 1e-15);
    EXPECT_TRUE(r.satisfied.all());
    EXPECT_NEAR(r.margins.width, r.width_bound - r.width, 1e-15);
  }
}

TEST(CheckBounds, PinchViolationListsAngles) {
  const SupportCurve c = random_pinched_curve(flat(1, 2), 3, 6);
  try {
    check_bounds(c, flat(1.5, 2));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("theta="), std::string::npos);
  }
  EXPECT_THROW(check_bounds(c, PinchSpec::make(SpaceCurvature::spherical(1), 1, 2)),
               PreconditionError);
}

TEST(CheckBounds, RandomBatchHasNoViolation) {
  double max_width = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ShellResult r = check_bounds(random_pinched_curve(flat(1, 2), seed, 6), flat(1, 2));
    EXPECT_TRUE(r.satisfied.all()) << "seed " << seed;
    max_width = std::max(max_width, r.width);
  }
  EXPECT_LE(max_width, 0.20710678118654752);
}

TEST(CheckBounds, FlatRevolutionAgreesWithSupportForm) {
  // Two independent pipelines on the same capped lens.
  CounterRng rng(70);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PinchSpec p = testing::random_pinch(SpaceCurvature::flat(), rng);
    const RevolutionBody body = random_revolution_body(p, seed);
    const ShellResult a = check_bounds(body, p);
    const ShellResult b = check_bounds(SupportCurve::from_profile(body.meridian), p);
    EXPECT_NEAR(a.inner_r, b.inner_r, 1e-10);
    EXPECT_NEAR(a.outer_R, b.outer_R, 1e-7);
  }
}

TEST(CheckBounds, CurvedRevolutionBodies) {
  for (int g = 1; g < 3; ++g) {
    CounterRng rng(80 + g);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const PinchSpec p = testing::random_pinch(testing::geometry(g), rng);
      const ShellResult r = check_bounds(random_revolution_body(p, seed), p);
      EXPECT_TRUE(r.satisfied.all()) << p.space().describe() << " seed " << seed;
      EXPECT_LE(r.outer_R, r.outer_bound + 1e-7);
    }
  }
}

TEST(CheckBounds, TranslationAndRotationInvariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SupportCurve c = random_pinched_curve(flat(1, 2), seed, 6);
    const ShellResult base = check_bounds(c, flat(1, 2));
    const SupportCurve moved = c.rotated(0.3 + seed).translated(Vec2{0.7, -1.1});
    const ShellResult r = check_bounds(moved, flat(1, 2));
    EXPECT_NEAR(r.width, base.width, 1e-9);
    EXPECT_NEAR(r.quotient, base.quotient, 1e-9);
    EXPECT_NEAR(r.inner_r, base.inner_r, 1e-12);
    // The centre moves with the body.
    const double a = 0.3 + static_cast<double>(seed);
    const double ex = std::cos(a) * base.center.x - std::sin(a) * base.center.y + 0.7;
    const double ey = std::sin(a) * base.center.x + std::cos(a) * base.center.y - 1.1;
    EXPECT_NEAR(r.center.x, ex, 1e-6);
    EXPECT_NEAR(r.center.y, ey, 1e-6);
  }
}

TEST(CheckBounds, ScalingCovariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SupportCurve c = random_pinched_curve(flat(1, 2), seed, 6);
    const ShellResult base = check_bounds(c, flat(1, 2));
    const double lambda = 2.5;
    const ShellResult r = check_bounds(c.scaled(lambda), flat(1 / lambda, 2 / lambda));
    EXPECT_NEAR(r.width, lambda * base.width, 1e-9);
    EXPECT_NEAR(r.quotient, base.quotient, 1e-9);
    EXPECT_NEAR(r.width_bound, lambda * base.width_bound, 1e-12);
  }
}

TEST(CheckBounds, DegeneratePinchGivesZeroWidth) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ShellResult r = check_bounds(random_pinched_curve(flat(1, 1), seed, 6), flat(1, 1));
    EXPECT_LT(r.width, 1e-9);
  }
}

TEST(Rolling, Examples) {
  EXPECT_TRUE(rolling_check(SupportCurve::circle(0.75), flat(1, 2), 100));
  const ProfileCurve spindle = build_spindle(SpindleSpec{flat(1, 2), 0.7});
  EXPECT_TRUE(rolling_check(SupportCurve::from_profile(spindle), flat(1, 2), 100));
  EXPECT_TRUE(rolling_check(RevolutionBody{spindle}, flat(1, 2), 100));
  const SupportCurve c = random_pinched_curve(flat(1, 2), 11, 6);
  EXPECT_TRUE(rolling_check(c, flat(1, 2), 100));
  EXPECT_FALSE(rolling_check(c, flat(1.5, 2), 100));
  EXPECT_FALSE(rolling_check(SupportCurve::from_profile(spindle), flat(1.5, 2), 100));
  EXPECT_FALSE(rolling_check(RevolutionBody{spindle}, flat(1, 1.5), 100));
}

TEST(Rolling, CurvedSpindles) {
  for (int g = 1; g < 3; ++g) {
    CounterRng rng(90 + g);
    for (int i = 0; i < 5; ++i) {
      const PinchSpec p = testing::random_pinch(testing::geometry(g), rng);
      const ProfileCurve spindle = build_spindle(SpindleSpec{p, width_bound(p).maximizer_r});
      EXPECT_TRUE(rolling_check(RevolutionBody{spindle}, p, 100)) << p.space().describe();
    }
  }
}

}  // namespace
}  // namespace pinch
