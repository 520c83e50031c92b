#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stab2cy/errors.hpp"
#include "stab2cy/homtable.hpp"
#include "stab2cy/nfcalc.hpp"

using namespace stab2cy;

TEST(Cech, CohomologyOfP1) {
  EXPECT_EQ(oracle::cech_h0(0), 1);
  EXPECT_EQ(oracle::cech_h0(3), 4);
  EXPECT_EQ(oracle::cech_h0(-1), 0);
  EXPECT_EQ(oracle::cech_h1(-1), 0);
  EXPECT_EQ(oracle::cech_h1(-2), 1);
  EXPECT_EQ(oracle::cech_h1(-5), 4);
  for (int k = -10; k <= 10; ++k) EXPECT_EQ(oracle::cech_h0(k) - oracle::cech_h1(k), k + 1);
}

TEST(HomTable, MatchesE2PageForSmallDifferences) {
  for (std::int64_t s = -4; s <= 4; ++s)
    for (std::int64_t t = s - 4; t <= s + 4; ++t) {
      const auto o = oracle::e2_page_hom(s, t);
      const HomDims h = hom_dims_line(s, t);
      EXPECT_EQ(h.d0, o[0]) << s << "," << t;
      EXPECT_EQ(h.d1, o[1]) << s << "," << t;
      EXPECT_EQ(h.d2, o[2]) << s << "," << t;
    }
}

TEST(HomTable, SpotValues) {
  EXPECT_EQ(hom_dims_line(0, 0), (HomDims{1, 0, 1}));
  EXPECT_EQ(hom_dims_line(0, 2), (HomDims{3, 1, 0}));
  EXPECT_EQ(hom_dims_line(0, -2), (HomDims{0, 1, 3}));
  EXPECT_EQ(hom_dims_line(5, 6), (HomDims{2, 0, 0}));
  EXPECT_EQ(hom_dims_line(6, 5), (HomDims{0, 0, 2}));
}

TEST(HomTable, ClausesEulerDualityTranslation) {
  for (std::int64_t s = -10; s <= 10; ++s)
    for (std::int64_t t = -10; t <= 10; ++t) {
      const HomDims h = hom_dims_line(s, t);
      EXPECT_EQ(h.euler(), 2);
      const HomDims m = hom_dims_line(t, s);
      EXPECT_EQ(h.d0, m.d2);
      EXPECT_EQ(h.d1, m.d1);
      EXPECT_EQ(h, hom_dims_line(s + 3, t + 3));
      for (std::int64_t i = 0; i <= 2; ++i) {
        if (vanishing_predicate(i, s, t)) EXPECT_EQ(h.at(i), 0) << i << " " << s << " " << t;
      }
    }
  EXPECT_THROW(vanishing_predicate(3, 0, 0), Error);
}

TEST(HomTable, Shifted) {
  // Hom^i(X[p], Y[q]) = Hom^{i-p+q}(X, Y)
  const GradedDims g = hom_dims_shifted(0, 1, 2, 0);
  EXPECT_EQ(g, (GradedDims{{1, 3}, {2, 1}}));
  EXPECT_EQ(hom_dims_shifted(0, 0, -1, 1), (GradedDims{{1, 2}}));
  for (std::int64_t p = -3; p <= 3; ++p)
    for (std::int64_t q = -3; q <= 3; ++q) {
      std::int64_t euler = 0;
      for (auto [i, d] : hom_dims_shifted(1, p, -2, q)) euler += (i % 2 == 0 ? d : -d);
      EXPECT_EQ(euler, ((p - q) % 2 == 0 ? 2 : -2));
    }
}

TEST(DifferenceLemma, LinesHaveNoViolations) {
  for (std::int64_t s = -4; s <= 4; ++s)
    for (std::int64_t n = -2; n <= 2; ++n)
      for (std::int64_t t = -6; t <= 6; ++t) {
        const DifferenceReport r = difference_check(NormalForm::line(s, n), t);
        if (r.promise == Promise::Satisfied) EXPECT_FALSE(r.any_violation());
      }
}

TEST(DifferenceLemma, PromiseOnAdjacentLine) {
  // Hom^*(O(0), O(1)[1]) sits in degree 1 only
  const DifferenceReport r = difference_check(NormalForm::line(1, -1), 0);
  EXPECT_EQ(r.promise, Promise::Satisfied);
  EXPECT_FALSE(r.any_violation());
}
