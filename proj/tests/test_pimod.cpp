#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stab2cy/errors.hpp"
#include "stab2cy/fp.hpp"
#include "stab2cy/pimod.hpp"
#include "stab2cy/suites.hpp"

using namespace stab2cy;

namespace {

constexpr Scalar kBig = 1000003;

std::int64_t gaussian_binomial_total(int n, Scalar p) {
  // sum_k [n choose k]_p via the q-Pascal rule
  std::vector<std::vector<std::int64_t>> c(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (int m = 0; m <= n; ++m) {
    c[m][0] = c[m][m] = 1;
    std::int64_t pk = 1;
    for (int k = 1; k < m; ++k) {
      pk *= p;
      c[m][k] = c[m - 1][k - 1] + pk * c[m - 1][k];
    }
  }
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) total += c[n][k];
  return total;
}

PiModule kronecker(Scalar a1, Scalar a2) {
  // (1,1) module with B = 0
  return make_module(1, 1, Mat(1, 1, {a1}), Mat(1, 1, {a2}), Mat(1, 1), Mat(1, 1));
}

}  // namespace

TEST(Fp, RankNullspaceSolve) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    Mat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = static_cast<Scalar>(rng() % 3);
    const int rk = fp::rank(a, 3);
    EXPECT_EQ(rk, fp::rank(a.transpose(), 3));
    const Mat n = fp::nullspace(a, 3);
    EXPECT_EQ(n.cols(), c - rk);
    EXPECT_TRUE(oracle::zero(oracle::mult(a, n, 3)));
    Mat x(c, 1);
    for (int i = 0; i < c; ++i) x(i, 0) = static_cast<Scalar>(rng() % 3);
    const Mat b = oracle::mult(a, x, 3);
    const auto sol = fp::solve(a, b, 3);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(oracle::mult(a, *sol, 3), b);
  }
}

TEST(Fp, SubspaceAndGroupCounts) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(static_cast<std::int64_t>(fp::all_subspaces(n, 3).size()), gaussian_binomial_total(n, 3));
    EXPECT_EQ(fp::count_subspaces(n, 3), gaussian_binomial_total(n, 3));
  }
  for (int n = 1; n <= 2; ++n) {
    EXPECT_EQ(fp::general_linear_order(n, 3), static_cast<std::int64_t>(oracle::invertible(n, 3).size()));
    EXPECT_EQ(static_cast<std::int64_t>(fp::general_linear(n, 3).size()), fp::general_linear_order(n, 3));
  }
  EXPECT_EQ(fp::general_linear_order(2, 5), 480);
}

TEST(Module, ValidationRejectsBadInput) {
  // relation fails: A1 B1 != 0
  EXPECT_THROW(make_module(1, 1, Mat(1, 1, {1}), Mat(1, 1), Mat(1, 1, {1}), Mat(1, 1)), Error);
  // wrong shape
  EXPECT_THROW(make_module(1, 2, Mat(1, 1), Mat(2, 1), Mat(1, 2), Mat(1, 2)), Error);
  EXPECT_NO_THROW(kronecker(1, 2));
}

TEST(Module, ExtMatchesBruteForce) {
  const auto& pool = small_modules();
  int checked = 0;
  for (const auto& M : pool)
    for (const auto& N : pool) {
      if (M.total_dim() + N.total_dim() > 4 || oracle::ext1_work(M, N) > 8) continue;
      const HomDims d = ext_dims(M, N);
      EXPECT_EQ(d.d0, oracle::hom_dim(M, N));
      EXPECT_EQ(d.d2, oracle::hom_dim(N, M));
      EXPECT_EQ(d.d1, oracle::ext1_dim(M, N));
      ++checked;
    }
  EXPECT_GT(checked, 250);
}

TEST(Module, SimplesAreSpherical) {
  for (int v = 0; v < 2; ++v) {
    const PiModule S = simple_module(v);
    EXPECT_EQ(ext_dims(S, S), (HomDims{1, 0, 1}));
  }
  EXPECT_EQ(ext_dims(simple_module(0), simple_module(1)), (HomDims{0, 2, 0}));
}

TEST(Module, EulerAndDualityOnPool) {
  const auto& pool = small_modules();
  EXPECT_EQ(pool.size(), 172u);
  for (std::size_t i = 0; i < pool.size(); i += 3)
    for (std::size_t j = 0; j < pool.size(); j += 5) {
      const PiModule &M = pool[i], &N = pool[j];
      const HomDims d = ext_dims(M, N);
      EXPECT_EQ(d.d2, ext_dims(N, M).d0);
      EXPECT_EQ(d.euler(), 2 * (M.d1 - M.d0) * (N.d1 - N.d0));
    }
}

TEST(Module, ComplexSquaresToZeroOverLargePrime) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const PiModule M = random_module(1 + trial % 3, 1 + (trial / 3) % 3, rng, kBig);
    const PiModule N = random_module(1 + (trial / 2) % 3, 1 + trial % 2, rng, kBig);
    EXPECT_TRUE(satisfies_relations(M));
    const ExtComplex c = ext_complex(M, N);
    EXPECT_TRUE(fp::mul(c.d1, c.d0, kBig).is_zero());
    const HomDims d = ext_dims(M, N);
    EXPECT_EQ(d.euler(), 2 * (M.d1 - M.d0) * (N.d1 - N.d0));
  }
}

TEST(Module, CompositionIndependentOfCoboundaries) {
  std::mt19937_64 rng(9);
  const auto& pool = small_modules();
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const PiModule& A = pool[rng() % pool.size()];
    const PiModule& B = pool[rng() % pool.size()];
    const PiModule& C = pool[rng() % pool.size()];
    const ExtGroup AB(A, B, 1), BC(B, C, 1), AC(A, C, 2);
    if (AB.dim() == 0 || BC.dim() == 0 || AC.dim() == 0) continue;
    const ExtElement y = AB.basis(0), x = BC.basis(0);
    const ExtComplex cAB = ext_complex(A, B), cBC = ext_complex(B, C);
    Mat h(cAB.n0, 1), k(cBC.n0, 1);
    for (int i = 0; i < cAB.n0; ++i) h(i, 0) = static_cast<Scalar>(rng() % 3);
    for (int i = 0; i < cBC.n0; ++i) k(i, 0) = static_cast<Scalar>(rng() % 3);
    const ExtElement y2 = add(y, unflatten(1, A, B, fp::mul(cAB.d0, h, 3)), 3);
    const ExtElement x2 = add(x, unflatten(1, B, C, fp::mul(cBC.d0, k, 3)), 3);
    EXPECT_EQ(AC.coords(compose(x, y, 3)), AC.coords(compose(x2, y2, 3)));
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Module, ExtPairingIsPerfect) {
  const PiModule S0 = simple_module(0), S1 = simple_module(1);
  const ExtGroup E01(S0, S1, 1), E10(S1, S0, 1), E00(S0, S0, 2), E11(S1, S1, 2);
  ASSERT_EQ(E01.dim(), 2);
  ASSERT_EQ(E10.dim(), 2);
  for (const auto* target : {&E00, &E11}) {
    Scalar m[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const ExtElement z = target == &E00 ? compose(E10.basis(i), E01.basis(j), 3)
                                            : compose(E01.basis(j), E10.basis(i), 3);
        m[i][j] = target->coords(z)[0];
      }
    EXPECT_NE(oracle::md(m[0][0] * m[1][1] - m[0][1] * m[1][0], 3), 0);
  }
  EXPECT_THROW(compose(E01.basis(0), E00.basis(0), 3), Error);
}

TEST(Module, IdentityIsUnitForComposition) {
  const PiModule M = kronecker(1, 0);
  const PiModule S0 = simple_module(0);
  const ExtGroup g(M, S0, 1);
  for (int j = 0; j < g.dim(); ++j) {
    EXPECT_EQ(g.coords(compose(identity_element(S0), g.basis(j), 3)), g.coords(g.basis(j)));
    EXPECT_EQ(g.coords(compose(g.basis(j), identity_element(M), 3)), g.coords(g.basis(j)));
  }
}

TEST(Module, IsoClassCountsMatchOrbitOracle) {
  for (auto [d0, d1] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}}) {
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_modules(d0, d1).size()), oracle::iso_class_count(d0, d1, 3))
        << d0 << "," << d1;
  }
  EXPECT_EQ(enumerate_modules(1, 1).size(), 9u);
}

TEST(Module, SerialAndParallelEnumerationAgree) {
  for (auto [d0, d1] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    EXPECT_EQ(enumerate_modules(d0, d1), enumerate_modules_serial(d0, d1));
  }
}

TEST(Module, SubobjectsSerialParallelAndCounts) {
  EXPECT_EQ(list_subobjects(semisimple_module(2, 0)).size(), 6u);
  EXPECT_EQ(list_subobjects(semisimple_module(1, 1)).size(), 4u);
  // the Kronecker module with A1 = 1 has no submodule containing M_0 but not M_1
  EXPECT_EQ(list_subobjects(kronecker(1, 0)).size(), 3u);
  for (const auto& M : small_modules()) {
    const auto par = list_subobjects(M);
    ASSERT_EQ(par, list_subobjects_serial(M));
    for (const auto& U : par) {
      EXPECT_TRUE(is_invariant(M, U));
      const PiModule A = restrict_to(M, U), Q = quotient(M, U);
      EXPECT_TRUE(satisfies_relations(A) && satisfies_relations(Q));
      EXPECT_EQ(A.kclass() + Q.kclass(), M.kclass());
    }
  }
}

TEST(Module, IsoTestAndCanonicalForm) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const PiModule M = random_module(2, 2, rng);
    const PiModule N = random_module(2, 2, rng);
    const bool iso = iso_test(M, N);
    EXPECT_EQ(iso, canonical_form(M) == canonical_form(N));
    const Mat g0 = fp::general_linear(2, 3)[rng() % 48], g1 = fp::general_linear(2, 3)[rng() % 48];
    const PiModule T = transform(M, g0, g1);
    EXPECT_TRUE(iso_test(M, T));
    EXPECT_EQ(canonical_form(M), canonical_form(T));
    EXPECT_EQ(decode(encoding(M), 3), M);
    EXPECT_EQ(dual(dual(M)), M);
  }
  // points of P^1 over F_3
  EXPECT_TRUE(iso_test(kronecker(1, 0), kronecker(2, 0)));
  EXPECT_TRUE(iso_test(kronecker(1, 1), kronecker(2, 2)));
  EXPECT_FALSE(iso_test(kronecker(1, 0), kronecker(1, 1)));
  EXPECT_FALSE(iso_test(kronecker(1, 0), semisimple_module(1, 1)));
}

TEST(Module, ExtensionsByCocycles) {
  const PiModule S0 = simple_module(0), S1 = simple_module(1);
  const ExtGroup g(S0, S1, 1);  // 0 -> S1 -> X -> S0 -> 0
  for (int j = 0; j < g.dim(); ++j) {
    const PiModule X = extension(S1, S0, g.basis(j));
    EXPECT_TRUE(satisfies_relations(X) && is_nilpotent(X));
    EXPECT_EQ(X.kclass(), S0.kclass() + S1.kclass());
    EXPECT_FALSE(iso_test(X, semisimple_module(1, 1)));
  }
}

TEST(Twist, SimplesAndClasses) {
  const PiModule S0 = simple_module(0), S1 = simple_module(1);
  // T_S(S) = S[-1]
  const TwistCohomology t = twist_simple(0, S0);
  EXPECT_TRUE(t.concentrated());
  EXPECT_TRUE(iso_test(t.h1, S0));
  for (const auto& M : small_modules()) {
    for (int v = 0; v < 2; ++v) {
      const KClass e = simple_module(v).kclass();
      EXPECT_EQ(twist_simple(v, M).kclass(), twist_on_K(e, M.kclass()));
      EXPECT_EQ(inverse_twist_simple(v, M).kclass(), twist_on_K(e, M.kclass()));
      EXPECT_TRUE(twist_simple(v, M).hm1.is_zero());
    }
  }
  // T_{S_0}(S_1) has H^0 of class S1 + 2 S0
  const TwistCohomology u = twist_simple(0, S1);
  EXPECT_TRUE(u.concentrated());
  EXPECT_EQ(u.h0.d0, 2);
  EXPECT_EQ(u.h0.d1, 1);
}
