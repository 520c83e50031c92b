#pragma once

// Harder-Narasimhan and Jordan-Hoelder machinery over any finite-length
// abelian category exposed through the CategoryOracle concept, plus the
// numerical checks built on it (Mukai inequality, the inequality chain,
// JH-block rigidity, decomposability by phase gaps).
//
// Objects are taken in a heart whose nonzero classes have charges in the
// upper window, so phases lie in (0, 1] offset by the charge's rotation.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stab2cy/errors.hpp"
#include "stab2cy/homtable.hpp"
#include "stab2cy/kcharge.hpp"

namespace stab2cy {

template <class C>
concept CategoryOracle = requires(const C& c, const typename C::Object& X, const typename C::Sub& U) {
  { c.list_subobjects(X) } -> std::same_as<std::vector<typename C::Sub>>;
  { c.subobject(X, U) } -> std::same_as<typename C::Object>;
  { c.quotient(X, U) } -> std::same_as<typename C::Object>;
  { c.hom_dims(X, X) } -> std::same_as<HomDims>;
  { c.direct_sum(X, X) } -> std::same_as<typename C::Object>;
  { c.is_zero(X) } -> std::same_as<bool>;
  { c.iso_test(X, X) } -> std::same_as<bool>;
  { c.kclass(X) } -> std::same_as<KClass>;
  { c.length(X) } -> std::same_as<std::int64_t>;
  { c.order_key(X) } -> std::same_as<std::vector<std::int64_t>>;
};

/// Phase of a nonzero heart class. Errc::ChargeDegenerate on a zero charge,
/// Errc::InvalidInput when the charge leaves the upper window.
inline Phase heart_phase(const CentralCharge& Z, const KClass& u) {
  const ExactComplex z = Z(u);
  if (z.is_zero()) throw Error(Errc::ChargeDegenerate, "class " + to_string(u) + " has zero charge");
  if (!in_upper_window(z)) {
    throw Error(Errc::InvalidInput, "charge of " + to_string(u) + " leaves the upper window");
  }
  return Z.phase(u);
}

template <class Obj>
struct HNFactor {
  Phase phase;
  Obj object;
};

template <class Obj>
struct HNFiltration {
  std::vector<HNFactor<Obj>> factors;
  bool semistable() const noexcept { return factors.size() == 1; }
};

/// Nonzero subobject of maximal phase and, among those, maximal length.
/// Exhaustively checks that this choice is unique.
template <CategoryOracle C>
std::optional<typename C::Sub> maximal_destabilizing(const C& cat, const CentralCharge& Z,
                                                     const typename C::Object& X) {
  std::optional<typename C::Sub> best;
  std::optional<Phase> best_phase;
  std::int64_t best_len = -1;
  bool tie = false;
  for (const auto& U : cat.list_subobjects(X)) {
    const auto A = cat.subobject(X, U);
    if (cat.is_zero(A)) continue;
    const Phase ph = heart_phase(Z, cat.kclass(A));
    const std::int64_t len = cat.length(A);
    const Cmp c = best_phase ? compare(ph, *best_phase) : Cmp::GT;
    if (c == Cmp::GT || (c == Cmp::EQ && len > best_len)) {
      best = U;
      best_phase = ph;
      best_len = len;
      tie = false;
    } else if (c == Cmp::EQ && len == best_len) {
      tie = true;
    }
  }
  if (tie) throw std::logic_error("maximal destabilizing subobject is not unique");
  return best;
}

template <CategoryOracle C>
HNFiltration<typename C::Object> hn_filter(const C& cat, const CentralCharge& Z, const typename C::Object& M) {
  HNFiltration<typename C::Object> hn;
  auto X = M;
  while (!cat.is_zero(X)) {
    const auto U = maximal_destabilizing(cat, Z, X);
    auto A = cat.subobject(X, *U);
    hn.factors.push_back({heart_phase(Z, cat.kclass(A)), A});
    X = cat.quotient(X, *U);
  }
  return hn;
}

template <CategoryOracle C>
bool is_semistable(const C& cat, const CentralCharge& Z, const typename C::Object& M) {
  return !cat.is_zero(M) && hn_filter(cat, Z, M).semistable();
}

/// Stable in the abelian category of semistables of its phase: no proper
/// nonzero subobject of the same phase. M must be semistable.
template <CategoryOracle C>
bool is_stable(const C& cat, const CentralCharge& Z, const typename C::Object& M) {
  if (cat.is_zero(M)) return false;
  const Phase ph = heart_phase(Z, cat.kclass(M));
  const std::int64_t n = cat.length(M);
  for (const auto& U : cat.list_subobjects(M)) {
    const auto A = cat.subobject(M, U);
    if (cat.is_zero(A) || cat.length(A) == n) continue;
    if (compare(heart_phase(Z, cat.kclass(A)), ph) == Cmp::EQ) return false;
  }
  return true;
}

/// Stable factors of a semistable object, bottom up.
template <CategoryOracle C>
std::vector<typename C::Object> stable_factors(const C& cat, const CentralCharge& Z, const typename C::Object& M) {
  std::vector<typename C::Object> out;
  auto X = M;
  while (!cat.is_zero(X)) {
    const Phase ph = heart_phase(Z, cat.kclass(X));
    std::optional<typename C::Sub> pick;
    std::int64_t pick_len = 0;
    for (const auto& U : cat.list_subobjects(X)) {
      const auto A = cat.subobject(X, U);
      if (cat.is_zero(A) || compare(heart_phase(Z, cat.kclass(A)), ph) != Cmp::EQ) continue;
      if (!pick || cat.length(A) < pick_len) {
        pick = U;
        pick_len = cat.length(A);
      }
    }
    out.push_back(cat.subobject(X, *pick));
    X = cat.quotient(X, *pick);
  }
  return out;
}

template <class Obj>
struct JHBlock {
  Obj block;        // A_i
  Obj rest;         // B_i = B_{i-1} / A_i
  Obj stable_type;  // the common stable factor of A_i
  std::int64_t multiplicity = 0;
  std::int64_t hom_block_rest = 0;  // dim Hom(A_i, B_i); 0 by construction
};

template <class Obj>
struct JHBlocks {
  Phase phase;
  std::vector<JHBlock<Obj>> blocks;
  KClass class_sum;
  bool certified = false;  // class sum matches and every Hom(A_i, B_i) = 0
};

/// Greedy JH-blocks of a semistable object of phase k. The block type at
/// each step is the stable subobject of least order_key. Errc::NotSemistable
/// if M is not semistable of phase k.
template <CategoryOracle C>
JHBlocks<typename C::Object> jh_blocks(const C& cat, const CentralCharge& Z, const typename C::Object& M,
                                       const Phase& k) {
  using Obj = typename C::Object;
  if (cat.is_zero(M) || compare(heart_phase(Z, cat.kclass(M)), k) != Cmp::EQ || !is_semistable(cat, Z, M)) {
    throw Error(Errc::NotSemistable, "jh_blocks needs a semistable object of the given phase");
  }
  JHBlocks<Obj> out{k, {}, KClass{}, true};
  Obj B = M;
  while (!cat.is_zero(B)) {
    struct Candidate {
      typename C::Sub U;
      Obj A;
    };
    std::vector<Candidate> same_phase;
    for (const auto& U : cat.list_subobjects(B)) {
      Obj A = cat.subobject(B, U);
      if (!cat.is_zero(A) && compare(heart_phase(Z, cat.kclass(A)), k) == Cmp::EQ) {
        same_phase.push_back({U, std::move(A)});
      }
    }
    std::optional<Obj> type;
    std::vector<std::int64_t> type_key;
    for (const auto& c : same_phase) {
      if (!is_stable(cat, Z, c.A)) continue;
      auto key = cat.order_key(c.A);
      if (!type || key < type_key) {
        type = c.A;
        type_key = std::move(key);
      }
    }
    const Candidate* best = nullptr;
    bool tie = false;
    for (const auto& c : same_phase) {
      const auto factors = stable_factors(cat, Z, c.A);
      const bool isotypic =
          std::all_of(factors.begin(), factors.end(), [&](const Obj& S) { return cat.iso_test(S, *type); });
      if (!isotypic) continue;
      if (!best || cat.length(c.A) > cat.length(best->A)) {
        best = &c;
        tie = false;
      } else if (cat.length(c.A) == cat.length(best->A)) {
        tie = true;
      }
    }
    if (tie) throw std::logic_error("maximal isotypic subobject is not unique");
    Obj rest = cat.quotient(B, best->U);
    JHBlock<Obj> blk{best->A, rest, *type, cat.length(best->A) / cat.length(*type),
                     cat.hom_dims(best->A, rest).d0};
    if (blk.hom_block_rest != 0) out.certified = false;
    out.class_sum = out.class_sum + cat.kclass(blk.block);
    out.blocks.push_back(std::move(blk));
    B = std::move(rest);
  }
  if (out.class_sum != cat.kclass(M)) out.certified = false;
  return out;
}

// ---------------------------------------------------------------------------
// Checks

struct MukaiReport {
  bool hypothesis = false;  // (A, C)^0 = 0 and the sequence is exact
  std::int64_t lhs = 0;     // (A,A)^1 + (C,C)^1
  std::int64_t rhs = 0;     // (B,B)^1
  bool pass() const noexcept { return lhs <= rhs; }
};

/// 0 -> A -> B -> C -> 0 with A = U and C = B / U. Errc::HypothesisViolated
/// if (A, C)^0 != 0 or the classes do not add up.
template <CategoryOracle C>
MukaiReport mukai_check(const C& cat, const typename C::Object& B, const typename C::Sub& U) {
  const auto A = cat.subobject(B, U);
  const auto Q = cat.quotient(B, U);
  if (cat.kclass(A) + cat.kclass(Q) != cat.kclass(B)) {
    throw Error(Errc::HypothesisViolated, "sequence is not exact");
  }
  if (cat.hom_dims(A, Q).d0 != 0) throw Error(Errc::HypothesisViolated, "(A, C)^0 != 0");
  MukaiReport r;
  r.hypothesis = true;
  r.lhs = cat.hom_dims(A, A).d1 + cat.hom_dims(Q, Q).d1;
  r.rhs = cat.hom_dims(B, B).d1;
  return r;
}

/// As above, with A and C given and matched against the witness.
template <CategoryOracle C>
MukaiReport mukai_check(const C& cat, const typename C::Object& A, const typename C::Object& B,
                        const typename C::Object& Q, const typename C::Sub& U) {
  if (!cat.iso_test(A, cat.subobject(B, U)) || !cat.iso_test(Q, cat.quotient(B, U))) {
    throw Error(Errc::HypothesisViolated, "witness does not present A -> B -> C");
  }
  return mukai_check(cat, B, U);
}

struct ChainReport {
  std::int64_t whole = 0;    // (E,E)^1
  std::int64_t factors = 0;  // sum over HN factors of (H,H)^1
  std::int64_t blocks = 0;   // sum over JH-blocks of (A,A)^1
  bool pass() const noexcept { return whole >= factors && factors >= blocks; }
};

/// (E,E)^1 >= sum_k (H^k,H^k)^1 >= sum_{k, A in J^k} (A,A)^1 for a heart
/// object E.
template <CategoryOracle C>
ChainReport inequality_chain_check(const C& cat, const CentralCharge& Z, const typename C::Object& E) {
  ChainReport r;
  r.whole = cat.hom_dims(E, E).d1;
  for (const auto& f : hn_filter(cat, Z, E).factors) {
    r.factors += cat.hom_dims(f.object, f.object).d1;
    for (const auto& b : jh_blocks(cat, Z, f.object, f.phase).blocks) r.blocks += cat.hom_dims(b.block, b.block).d1;
  }
  return r;
}

struct DecomposabilityVerdict {
  bool decomposable = false;
  std::size_t s = 0;  // the gap sits between phases s-1 and s
};

/// Decomposable(s) when k_{s-1} - k_s > n - 1 for some s. Errc::PhasesNotDecreasing
/// unless the list strictly decreases.
inline DecomposabilityVerdict decomposability_certificate(const std::vector<Phase>& phases, std::int64_t n = 2) {
  for (std::size_t s = 1; s < phases.size(); ++s) {
    if (compare(phases[s - 1], phases[s]) != Cmp::GT) {
      throw Error(Errc::PhasesNotDecreasing, "phase " + std::to_string(s) + " does not decrease");
    }
  }
  for (std::size_t s = 1; s < phases.size(); ++s) {
    if (difference_exceeds(phases[s - 1], phases[s], n - 1)) return {true, s};
  }
  return {};
}

template <CategoryOracle C>
bool is_spherical(const C& cat, const typename C::Object& X) {
  const HomDims d = cat.hom_dims(X, X);
  return d.d0 + d.d1 + d.d2 == 2;
}

struct RigidityReport {
  bool rigid = false;                // (E,E)^1 = 0
  std::int64_t blocks_checked = 0;   // blocks required to be multiples of a stable spherical
  std::int64_t stables_seen = 0;
  std::vector<std::string> failures;
  bool pass() const noexcept { return failures.empty(); }
};

/// For each HN factor, its JH-blocks: every block of a rigid E, and every
/// rigid block in general, must be a multiple of a stable spherical object.
/// Every stable type met must have even (A,A)^1.
template <CategoryOracle C>
RigidityReport rigidity_spherical_audit(const C& cat, const CentralCharge& Z, const typename C::Object& E) {
  RigidityReport r;
  r.rigid = cat.hom_dims(E, E).d1 == 0;
  const auto hn = hn_filter(cat, Z, E);
  for (std::size_t i = 0; i < hn.factors.size(); ++i) {
    const auto& f = hn.factors[i];
    const auto jh = jh_blocks(cat, Z, f.object, f.phase);
    for (std::size_t j = 0; j < jh.blocks.size(); ++j) {
      const auto& b = jh.blocks[j];
      const std::string at = "factor " + std::to_string(i) + " block " + std::to_string(j) + ": ";
      ++r.stables_seen;
      if (cat.hom_dims(b.stable_type, b.stable_type).d1 % 2 != 0) r.failures.push_back(at + "odd (A,A)^1");
      if (!r.rigid && cat.hom_dims(b.block, b.block).d1 != 0) continue;
      ++r.blocks_checked;
      if (!is_spherical(cat, b.stable_type)) {
        r.failures.push_back(at + "stable factor is not spherical");
        continue;
      }
      auto power = b.stable_type;
      for (std::int64_t n = 1; n < b.multiplicity; ++n) power = cat.direct_sum(power, b.stable_type);
      if (!cat.iso_test(b.block, power)) r.failures.push_back(at + "block is not a multiple of its stable factor");
    }
  }
  return r;
}

}  // namespace stab2cy
