#include "stab2cy/homtable.hpp"

#include <algorithm>
#include <cstdlib>

#include "stab2cy/errors.hpp"

namespace stab2cy {

HomDims hom_dims_line(std::int64_t s, std::int64_t t) noexcept {
  const std::int64_t d = t - s;
  return HomDims{
      std::max<std::int64_t>(d + 1, 0),
      std::max<std::int64_t>(d - 1, 0) + std::max<std::int64_t>(-d - 1, 0),
      std::max<std::int64_t>(-d + 1, 0),
  };
}

GradedDims hom_dims_shifted(std::int64_t s, std::int64_t p, std::int64_t t, std::int64_t q) {
  // Hom^i(X[p], Y[q]) = Hom^{i - p + q}(X, Y).
  const HomDims h = hom_dims_line(s, t);
  GradedDims out;
  for (std::int64_t j = 0; j <= 2; ++j) {
    if (h.at(j) != 0) out[j + p - q] = h.at(j);
  }
  return out;
}

bool vanishing_predicate(std::int64_t i, std::int64_t s, std::int64_t t) {
  switch (i) {
    case 0: return s - t > 0;
    case 1: return std::llabs(s - t) < 2;
    case 2: return s - t < 0;
    default: throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(i));
  }
}

const char* to_string(Promise p) noexcept {
  switch (p) {
    case Promise::Satisfied: return "satisfied";
    case Promise::Unsatisfied: return "promise unsatisfied";
    case Promise::Undetermined: return "undetermined";
  }
  return "?";
}

bool DifferenceReport::any_violation() const noexcept {
  return std::any_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.violated(); });
}

namespace {

// dim Hom^p(H^q(E), O(t)) summed over the line summands of H^q(E).
std::int64_t sheaf_hom(const NormalForm& E, std::int64_t q, std::int64_t p, std::int64_t t) {
  const auto [f, g] = E.multiplicities(q);
  return f * hom_dims_line(E.v(), t).at(p) + g * hom_dims_line(E.v() - 1, t).at(p);
}

// Decides the promise from the E2 page E2^{p,q'} = Hom^p(H^{-q'}(E), O(t)).
// Terms with p = 1 always survive to E_infinity (no d2 enters or leaves the
// middle column); with a single nonzero row nothing can cancel at all.
Promise evaluate_promise(const NormalForm& E, std::int64_t t) {
  const bool single_row = E.components().size() == 1;
  bool all_off_degree_vanish = true;
  for (const auto& [q, fg] : E.components()) {
    const std::int64_t qp = -q;
    for (std::int64_t p = 0; p <= 2; ++p) {
      if (p + qp == 1) continue;
      if (sheaf_hom(E, q, p, t) == 0) continue;
      all_off_degree_vanish = false;
      if (single_row || p == 1) return Promise::Unsatisfied;
    }
  }
  return all_off_degree_vanish ? Promise::Satisfied : Promise::Undetermined;
}

}  // namespace

DifferenceReport difference_check(const NormalForm& E, std::int64_t t) {
  E.validate();
  DifferenceReport r;
  r.t = t;
  r.promise = evaluate_promise(E, t);

  const bool hom_from_below_vanishes = sheaf_hom(E, -1, 0, t) == 0;
  const bool ext2_from_above_vanishes = sheaf_hom(E, 1, 2, t) == 0;

  for (const auto& [q, fg] : E.components()) {
    for (const std::int64_t s : {E.v(), E.v() - 1}) {
      const std::int64_t mult = (s == E.v()) ? fg.first : fg.second;
      if (mult == 0) continue;
      if (q != 0) {
        r.clauses.push_back({'a', q, s, true, std::llabs(s - t) < 2});
      } else {
        r.clauses.push_back({'b', q, s, hom_from_below_vanishes, s - t < 0});
        r.clauses.push_back({'c', q, s, ext2_from_above_vanishes, s - t > 0});
      }
    }
  }
  return r;
}

}  // namespace stab2cy
