#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stab2cy/errors.hpp"
#include "stab2cy/kcharge.hpp"

using namespace stab2cy;

namespace {

ExactComplex c(long re, long im) { return {Rational(re), Rational(im)}; }

}  // namespace

TEST(KCharge, EulerFormMatchesOracleAndIsSymmetric) {
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b)
      for (std::int64_t x = -6; x <= 6; ++x)
        for (std::int64_t y = -3; y <= 3; ++y) {
          const KClass u{a, b}, v{x, y};
          EXPECT_EQ(euler_form(u, v), oracle::chi({a, b}, {x, y}));
          EXPECT_EQ(euler_form(u, v), euler_form(v, u));
        }
  for (std::int64_t a = -10; a <= 10; ++a) EXPECT_EQ(euler_form({a, 3}, {a, 3}) % 2, 0);
}

TEST(KCharge, LineBundleClasses) {
  EXPECT_EQ(class_of_line_bundle(0, 0), (KClass{1, 0}));
  EXPECT_EQ(class_of_line_bundle(-1, 1), (KClass{-1, 1}));
  EXPECT_EQ(class_of_line_bundle(3, 2), (KClass{1, 3}));
  for (std::int64_t t = -8; t <= 8; ++t)
    for (std::int64_t n = -3; n <= 3; ++n) {
      const auto k = oracle::line_class(t, n);
      EXPECT_EQ(class_of_line_bundle(t, n), (KClass{k.a, k.b}));
      EXPECT_EQ(euler_form(class_of_line_bundle(t, n), class_of_line_bundle(t, n)), 2);
    }
}

TEST(KCharge, TwistIsInvolutionFixingPoint) {
  for (std::int64_t t = -10; t <= 10; ++t)
    for (int sgn : {1, -1}) {
      const KClass e{sgn, sgn * t};
      EXPECT_EQ(twist_on_K(e, {0, 1}), (KClass{0, 1}));
      EXPECT_EQ(twist_on_K(e, e), -e);
      for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b) {
          const KClass f{a, b};
          const KClass g = twist_on_K(e, f);
          const auto o = oracle::twist({e.a, e.b}, {a, b});
          EXPECT_EQ(g, (KClass{o.a, o.b}));
          EXPECT_EQ(twist_on_K(e, g), f);
        }
    }
  EXPECT_THROW(twist_on_K({2, 0}, {1, 0}), Error);
}

TEST(KCharge, PInvariance) {
  for (std::int64_t a : {1, -1})
    for (std::int64_t b = -10; b <= 10; ++b)
      for (std::int64_t c2 : {1, -1})
        for (std::int64_t d = -10; d <= 10; ++d) {
          const KClass e{a, b}, f{c2, d};
          EXPECT_EQ(sign_and_p(e, f).p, sign_and_p(e, twist_on_K(e, f)).p);
        }
}

TEST(KCharge, SignAndPSolvesBasisEquation) {
  for (std::int64_t fb = -5; fb <= 5; ++fb)
    for (std::int64_t fa : {1, -1})
      for (std::int64_t eb = -5; eb <= 5; ++eb)
        for (std::int64_t ea : {1, -1}) {
          const KClass f{fa, fb}, e{ea, eb};
          const SignAndP sp = sign_and_p(f, e);
          EXPECT_EQ(sp.s * f + sp.p * KClass({0, 1}), e);
        }
  EXPECT_THROW(sign_and_p({0, 1}, {1, 0}), Error);
}

TEST(KCharge, PhaseWindowAndComparison) {
  const CentralCharge Z = CentralCharge::from_heart_simples(c(-1, 1), c(1, 1));
  EXPECT_TRUE(Z.in_standard_region());
  // Z(O_Z) = -1 + i at 3/4, Z(O(-1)[1]) = 1 + i at 1/4
  EXPECT_EQ(phase_compare(Z, {1, 0}, {-1, 1}), Cmp::GT);
  EXPECT_NEAR(Z.phase({1, 0}).approx(), 0.75, 1e-12);
  EXPECT_NEAR(Z.phase({-1, 1}).approx(), 0.25, 1e-12);
  // negation moves to the lower window
  EXPECT_NEAR(Z.phase({-1, 0}).approx(), -0.25, 1e-12);
  EXPECT_EQ(compare(Z.phase({1, 0}), shifted(Z.phase({-1, 0}), 1)), Cmp::EQ);
  // real negative sits at 1
  EXPECT_NEAR(Z.phase_of_value(c(-3, 0)).approx(), 1.0, 1e-12);
  EXPECT_NEAR(Z.phase_of_value(c(3, 0)).approx(), 0.0, 1e-12);
  EXPECT_THROW(Z.phase_of_value(c(0, 0)), Error);
}

TEST(KCharge, RotationShiftsWindow) {
  const CentralCharge Z = CentralCharge::from_heart_simples(c(0, 1), c(1, 1));
  const CentralCharge W = rotate_scale(Z, Rational(0), Rational(2));
  EXPECT_EQ(compare(W.phase({1, 0}), shifted(Z.phase({1, 0}), 2)), Cmp::EQ);
  EXPECT_TRUE(difference_exceeds(W.phase({1, 0}), Z.phase({1, 0}), 1));
  EXPECT_FALSE(difference_exceeds(W.phase({1, 0}), Z.phase({1, 0}), 2));
}

TEST(KCharge, IncomparableWindows) {
  const Phase a{Rational(0), c(0, 1)};
  const Phase b{Rational(1, 2), c(0, 1)};
  EXPECT_THROW(compare(a, b), Error);
}

TEST(KCharge, CompareSignsOnGrid) {
  // whenever the hypothesis holds the conclusion must, over a small grid
  int checked = 0;
  for (long x0 = -2; x0 <= 2; ++x0)
    for (long x1 = -2; x1 <= 2; ++x1) {
      const CentralCharge Z = CentralCharge::from_heart_simples(c(x1, 1), c(x0, 1));
      for (std::int64_t s = -3; s <= 3; ++s)
        for (std::int64_t t = -3; t <= 3; ++t)
          for (std::int64_t u = -3; u <= 3; ++u)
            for (int se : {1, -1})
              for (int ss : {1, -1})
                for (int sf : {1, -1}) {
                  const KClass E{se, se * s}, S{ss, ss * t}, F{sf, sf * u};
                  if (Z(E).is_zero() || Z(S).is_zero() || Z(F).is_zero()) continue;
                  const auto r = compare_signs_check(Z, E, S, F);
                  checked += r.hypothesis;
                  EXPECT_TRUE(r.pass()) << to_string(E) << to_string(S) << to_string(F);
                }
    }
  EXPECT_GT(checked, 0);
}
