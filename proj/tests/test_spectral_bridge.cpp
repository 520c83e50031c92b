#include <gtest/gtest.h>

#include "stab2cy/bridge.hpp"
#include "stab2cy/errors.hpp"
#include "stab2cy/spectral.hpp"
#include "stab2cy/suites.hpp"

using namespace stab2cy;

namespace {

TwoTermObject s0_s0(Scalar k) {
  const PiModule S0 = simple_module(0);
  return make_two_term(S0, S0, ExtGroup(S0, S0, 2).element({k}));
}

GradedDims shifted_sum(const TwoTermObject& E, const TwoTermObject& F) {
  // Hom^n(H^i[-i], H^j[-j]) = Ext^{n+i-j}(H^i, H^j)
  GradedDims out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const HomDims d = ext_dims(cohomology(E, i), cohomology(F, j));
      for (int k = 0; k <= 2; ++k)
        if (d.at(k)) out[k - i + j] += d.at(k);
    }
  return out;
}

}  // namespace

TEST(Spectral, ModulesAreConcentrated) {
  for (const auto& M : small_modules()) {
    if (M.total_dim() > 2) continue;
    const TwoTermObject E = module_object(M);
    GradedDims expect;
    const HomDims d = ext_dims(M, M);
    for (int k = 0; k <= 2; ++k)
      if (d.at(k)) expect[k] = d.at(k);
    EXPECT_EQ(hom_dims_via_E3(E, E), expect);
  }
  EXPECT_TRUE(sphericality_test(module_object(simple_module(1))));
}

TEST(Spectral, SplitObjectsAreDirectSums) {
  const PiModule S0 = simple_module(0), S1 = simple_module(1);
  for (const auto& [a, b] : {std::pair{S0, S1}, {S1, S0}, {S0, S0}}) {
    const TwoTermObject E = make_two_term(a, b, zero_element(2, b, a));
    EXPECT_EQ(hom_dims_via_E3(E, E), shifted_sum(E, E));
    EXPECT_EQ(hom_dims_via_E3(E, module_object(S0)), shifted_sum(E, module_object(S0)));
  }
}

TEST(Spectral, NonsplitS0S0) {
  // The cone of the nonzero degree-2 endomorphism of S_0. End^*(S_0) = k[h]/h^2
  // with |h| = 2, so Hom^*(S_0, E) is k in degrees 0 and 3 and End^*(E) has
  // one class in each of the degrees -1, 0, 2, 3.
  for (Scalar k : {1, 2}) {
    const TwoTermObject E = s0_s0(k);
    EXPECT_EQ(hom_dims_via_E3(E, E), (GradedDims{{-1, 1}, {0, 1}, {2, 1}, {3, 1}}));
    EXPECT_EQ(hom_dims_via_E3(module_object(simple_module(0)), E), (GradedDims{{0, 1}, {3, 1}}));
    EXPECT_FALSE(sphericality_test(E));
  }
  EXPECT_EQ(hom_dims_via_E3(s0_s0(0), s0_s0(0)), (GradedDims{{-1, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 1}}));
}

TEST(Spectral, D2AndIdentity) {
  const TwoTermObject E = s0_s0(1);
  const E3Page page = e3_page(E, E);
  EXPECT_EQ(page.d2_rank.at(0), 1);
  EXPECT_EQ(page.d2_rank.at(1), 1);
  EXPECT_TRUE(e2_is_zero_class(E, E, d2(E, E, e2_identity(E))));
  EXPECT_TRUE(d2(E, E, e2_zero(E, E, 1, 0)).parts.empty());
}

TEST(Spectral, SweepSuite) {
  EXPECT_EQ(two_term_sweep().size(), 307u);
  const SuiteReport r = run_spectral_suite();
  EXPECT_TRUE(r.pass()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Spectral, SubquotientOnExample) {
  const TwoTermObject E = s0_s0(2);
  for (int q = -1; q <= 1; ++q) EXPECT_TRUE(subquotient_inequality_check(E, E, q).pass());
}

TEST(Bridge, HomGradedShifts) {
  const ShiftedModule X{simple_module(0), -1}, Y{simple_module(1), 0};
  // Hom^i(S_0[-1], S_1) = Ext^{i+1}(S_0, S_1)
  EXPECT_EQ(hom_graded(X, Y), (GradedDims{{0, 2}}));
  EXPECT_EQ(X.kclass(), class_of_line_bundle(-1, 0));
}

TEST(Bridge, DictionaryCasesRealized) {
  const Realization r0 = realize_line_bundle(0);
  ASSERT_TRUE(r0.supported());
  EXPECT_EQ(r0.object->shift, 0);
  EXPECT_TRUE(iso_test(r0.object->module, simple_module(1)));
  const Realization rm1 = realize_line_bundle(-1);
  ASSERT_TRUE(rm1.supported());
  EXPECT_EQ(rm1.object->shift, -1);
  EXPECT_TRUE(iso_test(rm1.object->module, simple_module(0)));
}

TEST(Bridge, RealizationsMatchLineTable) {
  for (std::int64_t t = -3; t <= 3; ++t) {
    const Realization r = realize_line_bundle(t);
    ASSERT_TRUE(r.supported()) << t;
    EXPECT_EQ(r.observed, r.expected);
    EXPECT_EQ(r.object->kclass(), class_of_line_bundle(t, 0));
    const auto back = identify_line(*r.object);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, (ShiftedLine{t, 0}));
  }
  const Realization tiny = realize_line_bundle(3, SearchBound{1, 12, 4});
  EXPECT_FALSE(tiny.supported());
  EXPECT_GT(tiny.states_explored, 0);
}

TEST(Bridge, RealizationsReproducePairwiseHom) {
  for (std::int64_t s = -2; s <= 2; ++s)
    for (std::int64_t t = -2; t <= 2; ++t) {
      const auto X = realize_shifted_line({s, 0});
      const auto Y = realize_shifted_line({t, 0});
      ASSERT_TRUE(X && Y);
      EXPECT_EQ(hom_graded(*X, *Y), hom_dims_shifted(s, 0, t, 0)) << s << " " << t;
    }
}

TEST(Bridge, TwistThenInverse) {
  for (const auto& M : small_modules()) {
    for (int v = 0; v < 2; ++v) {
      const auto Y = twist_concentrated(v, false, {M, 0});
      if (!Y) continue;
      const auto X = twist_concentrated(v, true, *Y);
      ASSERT_TRUE(X.has_value());
      EXPECT_EQ(X->shift, 0);
      EXPECT_TRUE(iso_test(X->module, M));
    }
  }
}

TEST(Bridge, LengthReducingTwist) {
  const auto inst = lemma_tt_instances();
  ASSERT_EQ(inst.size(), 2u);
  for (const auto& E : inst) {
    EXPECT_EQ(length(E.form), 3);
    for (std::int64_t level : {-1, 0}) {
      const TTReport r = lemma_tt_certify(E, {level, 0});
      EXPECT_TRUE(r.pass()) << E.name << (r.failures.empty() ? "" : ": " + r.failures.front());
      ASSERT_TRUE(r.after.has_value());
      EXPECT_EQ(length(*r.after), 1);
      EXPECT_EQ(r.l_F_after, 1);
    }
  }
  const TTInstance line{"line", {simple_module(1), 0}, NormalForm::line(0, 0)};
  EXPECT_FALSE(lemma_tt_certify(line, {0, 0}).precondition);
}
