#pragma once

// Links between the module category and the line-bundle calculus: modules
// realizing O_Z(t) through the dictionary S_1 = O_Z, S_0 = O_Z(-1)[1], and
// length-reducing twists checked on module objects.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stab2cy/homtable.hpp"
#include "stab2cy/nfcalc.hpp"
#include "stab2cy/pimod.hpp"
#include "stab2cy/reduction.hpp"
#include "stab2cy/spectral.hpp"

namespace stab2cy {

/// module[shift].
struct ShiftedModule {
  PiModule module;
  std::int64_t shift = 0;

  KClass kclass() const noexcept { return shift % 2 == 0 ? module.kclass() : -module.kclass(); }
  /// The same object as a two-term object; requires shift in {0, -1}.
  TwoTermObject two_term() const;
  friend bool operator==(const ShiftedModule&, const ShiftedModule&) = default;
};

/// Hom^i(X, Y) = Ext^{i - X.shift + Y.shift}(X.module, Y.module), nonzero
/// entries only.
GradedDims hom_graded(const ShiftedModule& X, const ShiftedModule& Y);

/// T_{S_v}(X) or its inverse when it is concentrated in one degree.
std::optional<ShiftedModule> twist_concentrated(int v, bool inverse, const ShiftedModule& X);

struct SearchBound {
  int max_depth = 8;       // twists applied to S_0 or S_1
  int max_total_dim = 12;  // largest module kept
  int shift_window = 4;    // shifts tried around the one reached
};

struct Realization {
  std::int64_t t = 0;
  std::optional<ShiftedModule> object;  // empty: Unsupported
  std::string word;                     // twists applied, left to right
  SearchBound bound;
  std::int64_t states_explored = 0;
  // Expected (from the line-bundle table) and observed graded Hom against
  // O_Z and O_Z(-1)[1], both directions.
  std::vector<GradedDims> expected, observed;
  bool supported() const noexcept { return object.has_value(); }
};

/// Breadth-first search over twists and inverse twists at S_0, S_1 for a
/// spherical object with the class of O_Z(t) whose Hom tables against the
/// realizations of O_Z and O_Z(-1)[1] match the line-bundle table exactly.
Realization realize_line_bundle(std::int64_t t, const SearchBound& bound = {}, Scalar p = kDefaultPrime);

/// The realization of O(t)[shift] when the search succeeds.
std::optional<ShiftedModule> realize_shifted_line(const ShiftedLine& x, Scalar p = kDefaultPrime);
/// O(s)[n] if X is isomorphic to the realization of a line bundle of its class.
std::optional<ShiftedLine> identify_line(const ShiftedModule& X);

/// A module object together with the normal form of its image on the
/// line-bundle side.
struct TTInstance {
  std::string name;
  ShiftedModule object;
  NormalForm form;
};

/// Length-3 objects that are shifted modules: T_{O(0)}(O(-1)[1]) and
/// T_{O(-1)}^{-1}(O(0)).
std::vector<TTInstance> lemma_tt_instances(Scalar p = kDefaultPrime);

struct TTReport {
  std::string instance;
  NormalForm before = NormalForm::line(0, 0);
  std::optional<NormalForm> after;
  std::int64_t twist_level = 0;  // the twist is T_{O(twist_level)}
  ShiftedLine F_before, F_after;
  std::int64_t l_before = 0, l_after = 0, l_F_before = 1, l_F_after = 1;
  bool precondition = false;
  std::vector<std::string> failures;
  bool pass() const noexcept { return precondition && failures.empty(); }
};

/// Applies T_{O(v-1)} (v the level of E's normal form) to E and F inside the
/// module category and checks l(E) drops while l(F) stays. A precondition
/// failure (l(E) <= 1) is reported, not thrown. Errc::UnsupportedInstance
/// when O(v-1) or F has no module realization or a result is not identified.
TTReport lemma_tt_certify(const TTInstance& E, const ShiftedLine& F);

}  // namespace stab2cy
