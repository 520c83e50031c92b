#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "oracles.hpp"
#include "stab2cy/errors.hpp"
#include "stab2cy/nfcalc.hpp"
#include "stab2cy/reduction.hpp"

using namespace stab2cy;

namespace {

oracle::K apply(const Generator& g, oracle::K u) {
  switch (g.kind) {
    case Generator::Kind::Tw:
    case Generator::Kind::TwInv: return oracle::twist(oracle::line_class(g.value, 0), u);
    case Generator::Kind::Shift: return g.value % 2 == 0 ? u : oracle::K{-u.a, -u.b};
  }
  return u;
}

oracle::K apply(const AutoWord& w, oracle::K u) {
  for (const auto& g : w) u = apply(g, u);
  return u;
}

// degrees of Hom^*(O(s)[p], O(t)[q]) from the E2 oracle
std::map<std::int64_t, std::int64_t> hom_oracle(const ShiftedLine& x, const ShiftedLine& y) {
  const auto h = oracle::e2_page_hom(x.level, y.level);
  std::map<std::int64_t, std::int64_t> out;
  for (int j = 0; j < 3; ++j)
    if (h[j] != 0) out[j + x.shift - y.shift] = h[j];
  return out;
}

bool admissible(const ShiftedLine& E, const ShiftedLine& F) {
  for (const auto& g : {hom_oracle(E, F), hom_oracle(F, E)})
    for (auto [i, d] : g)
      if (i != 1) return false;
  return true;
}

}  // namespace

TEST(NormalForm, CanonicalisationAndLength) {
  const NormalForm E(3, {{0, {0, 2}}, {1, {0, 1}}});
  EXPECT_EQ(E.v(), 2);
  EXPECT_EQ(E.multiplicities(0), (NormalForm::Multiplicities{2, 0}));
  EXPECT_EQ(length(E), 3);
  EXPECT_THROW(NormalForm(0, {}), Error);
  EXPECT_THROW(NormalForm(0, {{0, {-1, 1}}}), Error);
  EXPECT_TRUE(NormalForm::line(4, 2).is_line());
  EXPECT_EQ(NormalForm::line(4, 2).line_data(), (std::pair<std::int64_t, std::int64_t>{4, 2}));
  EXPECT_EQ(shift(NormalForm::line(1, 0), 3), NormalForm::line(1, 3));
}

TEST(NormalForm, ClassIsAlternatingSum) {
  // v=0: O(0)^2 in degree 0, O(-1) in degree 1
  const NormalForm E(0, {{0, {2, 0}}, {1, {0, 1}}});
  EXPECT_EQ(E.kclass(), (KClass{2 - 1, 0 + 1}));
}

TEST(Twist, LineIdentities) {
  for (std::int64_t t = -8; t <= 8; ++t)
    for (std::int64_t n = -2; n <= 2; ++n) {
      EXPECT_EQ(twist_line_on_line(t, t, n), NormalForm::line(t, n - 1));
      EXPECT_EQ(twist_line_on_line(t - 1, t, n), NormalForm::line(t - 2, n + 1));
      // K-classes agree with the reflection
      for (std::int64_t s = t - 1; s <= t + 1; ++s) {
        const auto o = oracle::twist(oracle::line_class(t, 0), oracle::line_class(s, n));
        EXPECT_EQ(twist_line_on_line(t, s, n).kclass(), (KClass{o.a, o.b}));
      }
    }
  EXPECT_THROW(twist_line_on_line(0, 5, 0), Error);
}

TEST(Twist, NeighbourTwistHasLengthThree) {
  const NormalForm X = twist_line_on_line(1, 0, 0);
  EXPECT_EQ(length(X), 3);
  EXPECT_EQ(X.multiplicities(1), (NormalForm::Multiplicities{2, 0}));
}

TEST(Twist, CompositeIsTensorByMinusTwo) {
  for (std::int64_t v = -8; v <= 8; ++v)
    for (std::int64_t t = -10; t <= 10; ++t)
      for (std::int64_t n = -1; n <= 1; ++n) {
        const KClass u = class_of_line_bundle(t, n);
        const KClass got = word_on_K({Generator::tw(v), Generator::tw(v - 1)}, u);
        EXPECT_EQ(got, class_of_line_bundle(t - 2, n));
        EXPECT_EQ(tensor_line(NormalForm::line(t, n), -2).form.kclass(), got);
      }
}

TEST(Words, ParseAndDescribe) {
  EXPECT_EQ(parse_generator("Tw(-3)"), Generator::tw(-3));
  EXPECT_EQ(parse_generator(" TwInv( 2 )"), Generator::tw_inv(2));
  EXPECT_EQ(parse_generator("Shift(1)"), Generator::shift(1));
  EXPECT_THROW(parse_generator("Tw(x)"), Error);
  const auto labels = describe_word({Generator::tw(2), Generator::tw(1), Generator::shift(1)});
  ASSERT_EQ(labels.size(), 3u);
  EXPECT_NE(labels[0].find("O(-2)"), std::string::npos);
}

TEST(Reduction, ParsesShiftedLines) {
  EXPECT_EQ(parse_shifted_line("O(-1)[1]"), (ShiftedLine{-1, 1}));
  EXPECT_EQ(parse_shifted_line("O(4)"), (ShiftedLine{4, 0}));
  EXPECT_THROW(parse_shifted_line("O[1]"), Error);
}

TEST(Reduction, AdmissibilityAgreesWithOracle) {
  for (std::int64_t m = -4; m <= 4; ++m)
    for (std::int64_t n = -4; n <= 4; ++n)
      for (std::int64_t l = -2; l <= 2; ++l) {
        const ShiftedLine E{m, l}, F{n, 0};
        EXPECT_EQ(is_concentrated_in_degree_one({E, F}), admissible(E, F));
        if (!admissible(E, F)) EXPECT_THROW(make_line_pair(E, F), Error);
      }
}

TEST(Reduction, WorkedExample) {
  const ReductionTrace tr = reduce_pair(make_line_pair(parse_shifted_line("O(0)[1]"), parse_shifted_line("O(1)[0]")));
  EXPECT_TRUE(certify(tr).ok);
  EXPECT_EQ(tr.final_pair.E, (ShiftedLine{0, 0}));
  EXPECT_EQ(tr.final_pair.F, (ShiftedLine{-1, 1}));
}

TEST(Reduction, InadmissibleExampleFromDesignNotes) {
  // {O(-1)[-1], O(0)} has Hom in degree 2; the admissible sibling is {O(-1), O(0)[-1]}
  EXPECT_THROW(make_line_pair({-1, -1}, {0, 0}), Error);
  const ReductionTrace tr = reduce_pair(make_line_pair({-1, 0}, {0, -1}));
  EXPECT_TRUE(certify(tr).ok);
}

TEST(Reduction, AllAdmissiblePairsReachStandardPair) {
  const auto start = std::chrono::steady_clock::now();
  int pairs = 0;
  for (std::int64_t m = -10; m <= 10; ++m)
    for (std::int64_t n = -10; n <= 10; ++n)
      for (std::int64_t l = -3; l <= 3; ++l)
        for (std::int64_t k = -3; k <= 3; ++k) {
          const ShiftedLine E{m, l}, F{n, k};
          if (!admissible(E, F)) continue;
          ++pairs;
          const ReductionTrace tr = reduce_pair(make_line_pair(E, F));
          const CertificateResult cert = certify(tr);
          ASSERT_TRUE(cert.ok) << to_string(E) << " " << to_string(F);
          // final classes by the oracle, from the input classes and the word
          const oracle::K e = apply(tr.word, oracle::line_class(m, l));
          const oracle::K f = apply(tr.word, oracle::line_class(n, k));
          std::vector<std::pair<std::int64_t, std::int64_t>> got{{e.a, e.b}, {f.a, f.b}};
          std::sort(got.begin(), got.end());
          EXPECT_EQ(got, (std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, 1}, {1, 0}}));
          EXPECT_LE(static_cast<std::int64_t>(tr.word.size()), std::llabs(tr.level) + 4);
          EXPECT_TRUE(admissible(tr.final_pair.E, tr.final_pair.F));
        }
  EXPECT_GT(pairs, 0);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
}
