#include "stab2cy/suites.hpp"

#include <random>

#include "stab2cy/errors.hpp"

namespace stab2cy {

CentralCharge charge_from_simples(const ExactComplex& z0, const ExactComplex& z1) {
  return CentralCharge::from_heart_simples(z1, z0);
}

std::vector<CentralCharge> standard_charge_grid() {
  std::vector<ExactComplex> points;
  for (int y = 1; y <= 2; ++y) {
    for (int x = -2; x <= 2; ++x) points.emplace_back(Rational(x), Rational(y));
  }
  std::vector<CentralCharge> grid;
  for (const auto& z0 : points) {
    for (const auto& z1 : points) grid.push_back(charge_from_simples(z0, z1));
  }
  return grid;
}

const std::vector<PiModule>& small_modules() {
  static const std::vector<PiModule> mods = enumerate_modules_up_to(2, 2);
  return mods;
}

namespace {

std::vector<PiModule> random_modules(std::mt19937_64& rng, int count, int max_dim) {
  std::vector<PiModule> out;
  std::uniform_int_distribution<int> dim(0, max_dim);
  while (static_cast<int>(out.size()) < count) {
    const int d0 = dim(rng), d1 = dim(rng);
    if (d0 + d1 == 0) continue;
    out.push_back(random_module(d0, d1, rng));
  }
  return out;
}

std::string describe(const PiModule& M) {
  std::string s = "(" + std::to_string(M.d0) + "," + std::to_string(M.d1) + ")[";
  for (Scalar x : encoding(M)) s += std::to_string(x);
  return s + "]";
}

std::string describe(const CentralCharge& Z) {
  return "Z(S_0)=" + to_string(Z(KClass{-1, 1})) + " Z(S_1)=" + to_string(Z(KClass{1, 0}));
}

bool is_spherical_module(const PiModule& M) { return ext_dims(M, M) == HomDims{1, 0, 1}; }

SuiteReport start(std::string name, std::uint64_t seed) {
  SuiteReport r;
  r.suite = std::move(name);
  r.seed = seed;
  return r;
}

}  // namespace

SuiteReport run_mukai_suite(std::uint64_t seed, int random_count) {
  SuiteReport r = start("mukai", seed);
  const PiCategory cat;
  std::mt19937_64 rng(seed);
  std::vector<PiModule> mods = small_modules();
  for (auto& M : random_modules(rng, random_count, 3)) mods.push_back(std::move(M));
  for (const PiModule& B : mods) {
    for (const Subobject& U : cat.list_subobjects(B)) {
      const PiModule A = restrict_to(B, U);
      const PiModule C = quotient(B, U);
      if (ext_dims(A, C).d0 != 0) {
        ++r.counters["skipped (A,C)^0 != 0"];
        continue;
      }
      ++r.instances;
      const MukaiReport m = mukai_check(cat, B, U);
      if (m.lhs == m.rhs) ++r.counters["equality"];
      if (!m.pass()) {
        r.failures.push_back(describe(B) + ": " + std::to_string(m.lhs) + " > " + std::to_string(m.rhs));
      }
    }
  }
  return r;
}

SuiteReport run_chain_suite(std::uint64_t seed, int random_count) {
  SuiteReport r = start("chain", seed);
  const PiCategory cat;
  const auto grid = standard_charge_grid();
  std::mt19937_64 rng(seed);
  std::vector<PiModule> mods = small_modules();
  for (auto& M : random_modules(rng, random_count, 3)) mods.push_back(std::move(M));
  for (const PiModule& E : mods) {
    for (const CentralCharge& Z : grid) {
      ++r.instances;
      const ChainReport c = inequality_chain_check(cat, Z, E);
      if (!c.pass()) {
        r.failures.push_back(describe(E) + " at " + describe(Z) + ": " + std::to_string(c.whole) + " >= " +
                             std::to_string(c.factors) + " >= " + std::to_string(c.blocks) + " fails");
      }
    }
  }
  // Two-term objects: (E,E)^1 >= sum_i (H^i,H^i)^1 from the E_2 page, then
  // the heart chain on each cohomology module.
  for (const TwoTermObject& E : two_term_sweep()) {
    const auto hom = hom_dims_via_E3(E, E);
    const std::int64_t whole = hom.count(1) ? hom.at(1) : 0;
    const std::int64_t parts = ext_dims(E.H0, E.H0).d1 + ext_dims(E.H1, E.H1).d1;
    ++r.counters["two-term objects"];
    ++r.instances;
    if (whole < parts) {
      r.failures.push_back("two-term " + describe(E.H0) + "|" + describe(E.H1) + ": (E,E)^1 < sum (H,H)^1");
    }
  }
  return r;
}

SuiteReport run_rigidity_suite(std::uint64_t seed, int random_count) {
  SuiteReport r = start("rigidity", seed);
  const PiCategory cat;
  const auto grid = standard_charge_grid();
  std::mt19937_64 rng(seed);
  std::vector<PiModule> mods = small_modules();
  for (auto& M : random_modules(rng, random_count, 3)) mods.push_back(std::move(M));
  for (const PiModule& E : mods) {
    for (const CentralCharge& Z : grid) {
      ++r.instances;
      const RigidityReport a = rigidity_spherical_audit(cat, Z, E);
      r.counters["stable objects"] += a.stables_seen;
      r.counters["blocks required spherical"] += a.blocks_checked;
      if (a.rigid) ++r.counters["rigid objects"];
      for (const auto& f : a.failures) r.failures.push_back(describe(E) + " at " + describe(Z) + ": " + f);
    }
  }
  return r;
}

SuiteReport run_hn_suite(std::uint64_t seed) {
  SuiteReport r = start("hn", seed);
  const PiCategory cat;
  const PiCategory serial(false);
  const auto grid = standard_charge_grid();
  for (const PiModule& M : small_modules()) {
    for (const CentralCharge& Z : grid) {
      ++r.instances;
      const std::string at = describe(M) + " at " + describe(Z) + ": ";
      const auto hn = hn_filter(cat, Z, M);
      KClass sum{};
      for (std::size_t i = 0; i < hn.factors.size(); ++i) {
        const auto& fi = hn.factors[i];
        sum = sum + fi.object.kclass();
        if (i > 0 && compare(hn.factors[i - 1].phase, fi.phase) != Cmp::GT) {
          r.failures.push_back(at + "phases not strictly decreasing");
        }
        for (std::size_t j = i + 1; j < hn.factors.size(); ++j) {
          if (ext_dims(fi.object, hn.factors[j].object).d0 != 0) {
            r.failures.push_back(at + "Hom from a higher to a lower phase factor");
          }
        }
        const auto jh = jh_blocks(cat, Z, fi.object, fi.phase);
        r.counters["jh blocks"] += static_cast<std::int64_t>(jh.blocks.size());
        if (!jh.certified) r.failures.push_back(at + "JH-block certificate fails");
      }
      if (sum != M.kclass()) r.failures.push_back(at + "factor classes do not add up");
      if (hn.factors.size() > 1) ++r.counters["not semistable"];
      // The serial subobject order must give the same factors.
      const auto hn2 = hn_filter(serial, Z, M);
      bool same = hn2.factors.size() == hn.factors.size();
      for (std::size_t i = 0; same && i < hn.factors.size(); ++i) {
        same = iso_test(hn.factors[i].object, hn2.factors[i].object);
      }
      if (!same) r.failures.push_back(at + "serial and parallel filtrations differ");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

bool condition_b(const PiCategory& cat, const CentralCharge& Z, const std::vector<PiModule>& pool) {
  std::vector<std::pair<Phase, const PiModule*>> stable;
  for (const PiModule& M : pool) {
    if (!is_spherical_module(M) || !is_semistable(cat, Z, M) || !is_stable(cat, Z, M)) continue;
    stable.emplace_back(heart_phase(Z, M.kclass()), &M);
  }
  for (std::size_t i = 0; i < stable.size(); ++i) {
    for (std::size_t j = i + 1; j < stable.size(); ++j) {
      if (compare(stable[i].first, stable[j].first) == Cmp::EQ && !iso_test(*stable[i].second, *stable[j].second)) {
        return false;
      }
    }
  }
  return true;
}

TwistLemmaReport twist_lemma_check(const PiCategory& cat, const CentralCharge& Z, int v, const PiModule& F,
                                   bool condition_b_holds) {
  const PiModule S = simple_module(v, F.p);
  const ExactComplex zS = Z(S.kclass());
  if (!(sgn(zS.im) == 0 && sgn(zS.re) < 0)) {
    throw Error(Errc::HypothesisViolated, "Z(S_v) must be negative real so that S_v[-1] has phase 0");
  }
  if (F.is_zero()) throw Error(Errc::HypothesisViolated, "F is zero");
  if (ext_dims(S, F).d0 != 0) throw Error(Errc::HypothesisViolated, "Hom(S_v, F) != 0: F has a phase-1 part");

  TwistLemmaReport r;
  r.vertex = v;
  r.F = F;
  r.condition_b = condition_b_holds;
  // T_E = T_{S_v}, and F's data in T_E sigma are those of T_E^{-1} F in sigma.
  r.G = inverse_twist_simple(v, F);
  r.lemma_applies = true;
  const bool h1_multiple_of_S = r.G.h1.dim(1 - v) == 0;
  r.lemma_holds = r.G.hm1.is_zero() && h1_multiple_of_S;
  r.hn_factors_of_G = (r.G.h0.is_zero() ? 0 : static_cast<std::int64_t>(hn_filter(cat, Z, r.G.h0).factors.size())) +
                      (r.G.h1.is_zero() ? 0 : 1);

  const bool phase_inside = sgn(Z(F.kclass()).im) > 0;
  r.cor_applies = phase_inside && ext_dims(S, F).d1 != 0;
  r.cor_holds = r.hn_factors_of_G > 1;
  r.cor2_applies = r.cor_applies && is_spherical_module(F) && condition_b_holds;
  // Heart phases lie in (0, 1], so the phase-0 part of G is H^1(G)[-1].
  r.cor2_holds = r.G.h1.is_zero();
  return r;
}

SuiteReport run_twist_suite(std::uint64_t seed) {
  SuiteReport r = start("twist", seed);
  const PiCategory cat;
  std::vector<ExactComplex> upper;
  for (int y = 1; y <= 2; ++y) {
    for (int x = -2; x <= 2; ++x) upper.emplace_back(Rational(x), Rational(y));
  }
  for (int v = 0; v < 2; ++v) {
    for (int m = 1; m <= 2; ++m) {
      const ExactComplex neg(Rational(-m), Rational(0));
      for (const auto& z : upper) {
        const CentralCharge Z = v == 0 ? charge_from_simples(neg, z) : charge_from_simples(z, neg);
        const bool b = condition_b(cat, Z, small_modules());
        if (b) ++r.counters["charges with condition (b)"];
        for (const PiModule& F : small_modules()) {
          if (ext_dims(simple_module(v, F.p), F).d0 != 0) continue;
          const TwistLemmaReport t = twist_lemma_check(cat, Z, v, F, b);
          ++r.instances;
          r.counters["lemma instances"] += t.lemma_applies;
          r.counters["cor instances"] += t.cor_applies;
          r.counters["cor2 instances"] += t.cor2_applies;
          const std::string at = "E=S_" + std::to_string(v) + "[-1] F=" + describe(F) + " at " + describe(Z) + ": ";
          if (t.lemma_applies && !t.lemma_holds) r.failures.push_back(at + "T_E^-1 F not in P([0,1])");
          if (t.cor_applies && !t.cor_holds) r.failures.push_back(at + "F semistable in T_E sigma");
          if (t.cor2_applies && !t.cor2_holds) r.failures.push_back(at + "phase-0 part of F in T_E sigma nonzero");
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport run_soundness_suite(std::uint64_t seed, int random_pairs) {
  SuiteReport r = start("soundness", seed);
  auto check = [&r](const PiModule& M, const PiModule& N) {
    ++r.instances;
    const HomDims mn = ext_dims(M, N), nm = ext_dims(N, M);
    if (mn.d2 != nm.d0) r.failures.push_back(describe(M) + "," + describe(N) + ": Ext^2 != Hom^*");
    if (mn.euler() != euler_form(M.kclass(), N.kclass())) {
      r.failures.push_back(describe(M) + "," + describe(N) + ": Euler form mismatch");
    }
  };
  const auto& mods = small_modules();
  for (const PiModule& M : mods) {
    for (const PiModule& N : mods) check(M, N);
  }
  r.counters["exhaustive pairs"] = r.instances;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_pairs; ++k) {
    const auto pair = random_modules(rng, 2, 3);
    check(pair[0], pair[1]);
  }
  r.counters["random pairs"] = random_pairs;
  return r;
}

std::vector<TwoTermObject> two_term_sweep() {
  std::vector<PiModule> parts = {zero_module(), simple_module(0), simple_module(1)};
  for (const PiModule& M : enumerate_modules(1, 1)) parts.push_back(M);
  std::vector<TwoTermObject> out;
  for (const PiModule& H0 : parts) {
    for (const PiModule& H1 : parts) {
      if (H0.is_zero() && H1.is_zero()) continue;
      const ExtGroup ext2(H1, H0, 2);
      const int d = ext2.dim();
      std::int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= H0.p;
      for (std::int64_t n = 0; n < count; ++n) {
        std::vector<Scalar> c(d);
        std::int64_t k = n;
        for (int i = 0; i < d; ++i, k /= H0.p) c[i] = k % H0.p;
        out.push_back(TwoTermObject{H0, H1, ext2.element(c)});
      }
    }
  }
  return out;
}

namespace {

bool e_is_zero(const TwoTermObject& E) { return ExtGroup(E.H1, E.H0, 2).is_zero_class(E.e); }

GradedDims direct_sum_expectation(const TwoTermObject& E, const TwoTermObject& F) {
  GradedDims out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const HomDims d = ext_dims(cohomology(E, i), cohomology(F, j));
      for (std::int64_t k = 0; k <= 2; ++k) {
        if (d.at(k) != 0) out[k - i + j] += d.at(k);
      }
    }
  }
  return out;
}

}  // namespace

SuiteReport run_spectral_suite() {
  SuiteReport r = start("spectral", 0);
  const auto objects = two_term_sweep();
  std::vector<const TwoTermObject*> probes;
  for (const auto& E : objects) {
    if (E.H0.total_dim() <= 1 && E.H1.total_dim() <= 1) probes.push_back(&E);
  }
  auto pair_checks = [&r](const TwoTermObject& E, const TwoTermObject& F, const std::string& at) {
    const GradedDims hom = hom_dims_via_E3(E, F);
    std::int64_t alt = 0;
    for (const auto& [n, d] : hom) alt += (n % 2 == 0 ? d : -d);
    if (alt != euler_form(E.kclass(), F.kclass())) r.failures.push_back(at + "alternating sum != Euler form");
    GradedDims back;
    for (const auto& [n, d] : hom_dims_via_E3(F, E)) back[2 - n] = d;
    if (back != hom) r.failures.push_back(at + "degree duality fails");
    if (e_is_zero(E) && e_is_zero(F)) {
      ++r.counters["e = 0 pairs"];
      if (hom != direct_sum_expectation(E, F)) r.failures.push_back(at + "e = 0 but not a direct sum");
    }
    for (int q = -1; q <= 1; ++q) {
      if (!subquotient_inequality_check(E, F, q).pass()) {
        r.failures.push_back(at + "subquotient inequality at q=" + std::to_string(q));
      }
    }
  };
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const TwoTermObject& E = objects[i];
    const std::string at = "object " + std::to_string(i) + ": ";
    ++r.instances;
    if (!e2_is_zero_class(E, E, d2(E, E, e2_identity(E)))) r.failures.push_back(at + "identity not in Ker d2");
    for (int p = 0; p <= 2; ++p) {
      for (int q = -1; q <= 1; ++q) {
        const E2Element x = d2(E, E, d2(E, E, e2_zero(E, E, p, q)));
        if (!x.parts.empty()) r.failures.push_back(at + "d2 o d2 lands in a nonzero space");
      }
    }
    pair_checks(E, E, at);
    for (const TwoTermObject* P : probes) {
      ++r.counters["pairs"];
      pair_checks(E, *P, at + "vs probe: ");
      pair_checks(*P, E, at + "probe vs: ");
    }
  }
  r.counters["objects"] = static_cast<std::int64_t>(objects.size());
  return r;
}

}  // namespace stab2cy
