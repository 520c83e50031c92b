#pragma once

// Carries a pair of shifted line bundles with Hom concentrated in degree 1
// to the standard pair {O_Z, O_Z(-1)[1]} by a word in the twist group, and
// records a step-by-step certificate.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stab2cy/homtable.hpp"
#include "stab2cy/kcharge.hpp"
#include "stab2cy/nfcalc.hpp"

namespace stab2cy {

/// O_Z(level)[shift].
struct ShiftedLine {
  std::int64_t level = 0;
  std::int64_t shift = 0;

  KClass kclass() const noexcept { return class_of_line_bundle(level, shift); }
  friend bool operator==(const ShiftedLine&, const ShiftedLine&) = default;
};

std::string to_string(const ShiftedLine& x);
/// Parses "O(m)[l]" (the "[l]" part is optional).
ShiftedLine parse_shifted_line(const std::string& text);

struct LinePair {
  ShiftedLine E;
  ShiftedLine F;
};

/// True when Hom^i(E, F) and Hom^i(F, E) vanish for every i != 1.
bool is_concentrated_in_degree_one(const LinePair& p);
/// Errc::InadmissiblePair unless is_concentrated_in_degree_one.
LinePair make_line_pair(ShiftedLine E, ShiftedLine F);

enum class PairCase { M_EQ_N_MINUS_1_L1, N_EQ_M_MINUS_1_Lm1 };
const char* to_string(PairCase c) noexcept;

/// After shifting F to degree 0: either E = O(n-1)[1], F = O(n), or
/// E = O(m)[-1], F = O(m-1). Cross-checked against hom_dims_shifted.
PairCase classify_pair(const LinePair& p);

/// The pair as {O(v), O(v-1)[1]} up to a global shift and ordering.
struct LevelForm {
  std::int64_t v = 0;
  /// Shift that moves the pair into that shape.
  std::int64_t normalizing_shift = 0;
};
LevelForm level_form(const LinePair& p);

struct NormalizedPair {
  LinePair pair;
  AutoWord word;
};
/// Moves a pair at level v to level 0 or 1 with O(-2) / O(2) composites,
/// after the normalizing shift.
NormalizedPair normalize_level(const LinePair& p);
/// For a pair {O(v), O(v-1)[1]} with v in {0, 1}: the word to the standard pair.
AutoWord finalize(const LinePair& p);

struct TraceStep {
  std::string generator;  // a generator, or a labelled O(+-2) composite
  AutoWord generators;
  ShiftedLine E_before, F_before, E_after, F_after;
  KClass E_class_before, F_class_before, E_class_after, F_class_after;
  GradedDims hom_before, hom_after;  // Hom^*(E, F)
  std::int64_t l_E = 1, l_F = 1;     // lengths before/after (lines stay lines)
};

struct ReductionTrace {
  LinePair input;
  PairCase pair_case = PairCase::M_EQ_N_MINUS_1_L1;
  std::int64_t level = 0;
  AutoWord word;
  std::vector<TraceStep> steps;
  /// Final pair in canonical order: first = O_Z, second = O_Z(-1)[1].
  LinePair final_pair;
  /// True when the input E ended up as O_Z(-1)[1].
  bool swapped = false;
};

ReductionTrace reduce_pair(const LinePair& p);

struct CertificateResult {
  bool ok = true;
  std::vector<std::string> failures;
};
/// Re-derives every step: K-classes via word_on_K, Hom tables via homtable,
/// and the final classes {(1,0), (-1,1)}.
CertificateResult certify(const ReductionTrace& trace);

}  // namespace stab2cy
