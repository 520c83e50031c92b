#pragma once

// Graded Hom dimensions between shifted pushforwards O_Z(s)[p] on the
// cotangent bundle of P^1, and the vanishing/implication checks built on them.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stab2cy/nfcalc.hpp"

namespace stab2cy {

struct HomDims {
  std::int64_t d0 = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;

  std::int64_t at(std::int64_t degree) const noexcept {
    switch (degree) {
      case 0: return d0;
      case 1: return d1;
      case 2: return d2;
      default: return 0;
    }
  }
  std::int64_t euler() const noexcept { return d0 - d1 + d2; }
  friend bool operator==(const HomDims&, const HomDims&) = default;
};

/// Degree -> dimension, nonzero entries only.
using GradedDims = std::map<std::int64_t, std::int64_t>;

/// dim Hom^i(O_Z(s), O_Z(t)), i = 0, 1, 2. Depends only on t - s.
HomDims hom_dims_line(std::int64_t s, std::int64_t t) noexcept;

/// dim Hom^i(O_Z(s)[p], O_Z(t)[q]) for all i.
GradedDims hom_dims_shifted(std::int64_t s, std::int64_t p, std::int64_t t, std::int64_t q);

/// Hom^i(O_Z(s), O_Z(t)) = 0, decided by the three clauses
///   (a) i = 0 and s - t > 0, (b) i = 1 and |s - t| < 2, (c) i = 2 and s - t < 0.
/// Errc::DegreeOutOfRange for i outside {0, 1, 2}.
bool vanishing_predicate(std::int64_t i, std::int64_t s, std::int64_t t);

enum class Promise { Satisfied, Unsatisfied, Undetermined };
const char* to_string(Promise p) noexcept;

struct ClauseResult {
  char clause = 'a';  // 'a', 'b' or 'c'
  std::int64_t q = 0;
  std::int64_t s = 0;
  bool prerequisite = false;
  bool conclusion = false;
  bool violated() const noexcept { return prerequisite && !conclusion; }
};

struct DifferenceReport {
  std::int64_t t = 0;
  /// Whether Hom^i(E, O_Z(t)) = 0 for i != 1 is known to hold, known to
  /// fail, or not decidable from the cohomology sheaves alone.
  Promise promise = Promise::Undetermined;
  std::vector<ClauseResult> clauses;
  bool any_violation() const noexcept;
};

/// Evaluates the three implications of the difference lemma for every line
/// summand O_Z(s) of H^q(E), against F = O_Z(t). A violated implication is
/// only a contradiction when the promise actually holds.
DifferenceReport difference_check(const NormalForm& E, std::int64_t t);

}  // namespace stab2cy
