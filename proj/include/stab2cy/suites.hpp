#pragma once

// Verification sweeps over the module category: exhaustive over all
// isomorphism classes with dimension vector at most (2, 2), plus seeded
// random modules up to (3, 3).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stab2cy/heartlab.hpp"
#include "stab2cy/kcharge.hpp"
#include "stab2cy/pimod.hpp"
#include "stab2cy/spectral.hpp"

namespace stab2cy {

/// Charges with Z(S_0), Z(S_1) both in {x + iy : x in -2..2, y in 1..2}.
std::vector<CentralCharge> standard_charge_grid();
/// Z with Z(S_1) = z1 and Z(S_0) = z0.
CentralCharge charge_from_simples(const ExactComplex& z0, const ExactComplex& z1);
/// Every isomorphism class with 0 < d0 + d1, d0 <= 2, d1 <= 2 over F_3.
const std::vector<PiModule>& small_modules();

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::int64_t instances = 0;
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> failures;
  bool pass() const noexcept { return failures.empty(); }
};

/// 0 -> U -> B -> B/U -> 0 with (U, B/U)^0 = 0, every B and U.
SuiteReport run_mukai_suite(std::uint64_t seed, int random_modules = 10);
/// inequality_chain_check on every module under every grid charge, and on
/// two-term objects through the E_2 page.
SuiteReport run_chain_suite(std::uint64_t seed, int random_modules = 5);
/// rigidity_spherical_audit on every module under every grid charge.
SuiteReport run_rigidity_suite(std::uint64_t seed, int random_modules = 5);
/// HN/JH invariants on every module under every grid charge.
SuiteReport run_hn_suite(std::uint64_t seed);

// ---------------------------------------------------------------------------
// Twisting at a simple sitting at phase 0.

struct TwistLemmaReport {
  int vertex = 0;  // E = S_v[-1]
  PiModule F;
  TwistCohomology G;  // T_E^{-1}(F); its sigma-data are F's T_E sigma-data
  std::int64_t hn_factors_of_G = 0;
  bool condition_b = false;
  bool lemma_applies = false, lemma_holds = false;
  bool cor_applies = false, cor_holds = false;
  bool cor2_applies = false, cor2_holds = false;
  bool pass() const noexcept {
    return (!lemma_applies || lemma_holds) && (!cor_applies || cor_holds) && (!cor2_applies || cor2_holds);
  }
};

/// Whether stable spherical modules among the pool with equal phases are
/// isomorphic.
bool condition_b(const PiCategory& cat, const CentralCharge& Z, const std::vector<PiModule>& pool);

/// E = S_v[-1] with Z(S_v) negative real, so E is stable spherical of phase
/// 0; F a nonzero module. Errc::HypothesisViolated if Z(S_v) is not negative
/// real or Hom(S_v, F) != 0 (then F has a phase-1 part and is not in P([0,1))).
TwistLemmaReport twist_lemma_check(const PiCategory& cat, const CentralCharge& Z, int v, const PiModule& F,
                                   bool condition_b_holds);

SuiteReport run_twist_suite(std::uint64_t seed);

// ---------------------------------------------------------------------------
// Module-category and spectral checks.

/// Duality Ext^2(M,N) = Hom(N,M)^* and the Euler form on all pairs of small
/// modules plus random pairs up to (3, 3).
SuiteReport run_soundness_suite(std::uint64_t seed, int random_pairs = 200);

/// Two-term objects with H0, H1 in {0, S_0, S_1, (1,1)-modules} and every e.
std::vector<TwoTermObject> two_term_sweep();
SuiteReport run_spectral_suite();

}  // namespace stab2cy
