#pragma once

// Two-term objects of the module category and the E_2 page computing their
// graded Hom spaces.
//
// A two-term object E has H^0(E) = H0, H^1(E) = H1 and is glued by
// e in Ext^2(H1, H0). For objects E, F,
//   E_2^{p,q} = (+)_i Hom^p(H^i E, H^{i+q} F)
// lives in the strip p in {0, 1, 2}. The only differential that can be
// nonzero is d_2^{0,q}: E_2^{0,q} -> E_2^{2,q-1},
//   d_2(f)_i = (-1)^{p+q} f_{i-1} o e_i(E) - e_{i+q}(F) o f_i,
// and the sequence degenerates at E_3.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stab2cy/homtable.hpp"
#include "stab2cy/kcharge.hpp"
#include "stab2cy/pimod.hpp"

namespace stab2cy {

struct TwoTermObject {
  PiModule H0;
  PiModule H1;
  ExtElement e;  // degree 2, H1 -> H0

  KClass kclass() const noexcept { return H0.kclass() - H1.kclass(); }
  friend bool operator==(const TwoTermObject&, const TwoTermObject&) = default;
};

/// Validates both modules and the shape of e. Errc::InvalidModule on bad
/// modules, Errc::InvalidInput on a malformed e.
TwoTermObject make_two_term(PiModule H0, PiModule H1, ExtElement e);
/// M concentrated in degree 0.
TwoTermObject module_object(const PiModule& M);
/// Cohomology in degree i (zero outside {0, 1}).
const PiModule& cohomology(const TwoTermObject& E, int i);

/// An element of E_2^{p,q}(E, F): parts[i] is a cochain H^i E -> H^{i+q} F of
/// degree p, for i = 0, 1.
struct E2Element {
  int p = 0;
  int q = 0;
  std::vector<ExtElement> parts;
};

E2Element e2_zero(const TwoTermObject& E, const TwoTermObject& F, int p, int q);
/// (id_{H0}, id_{H1}) in E_2^{0,0}(E, E).
E2Element e2_identity(const TwoTermObject& E);
int e2_dim(const TwoTermObject& E, const TwoTermObject& F, int p, int q);

/// d_2 at cocycle level. Targets with p + 2 > 2 are the zero space: the
/// result then has p + 2, q - 1 and no parts.
E2Element d2(const TwoTermObject& E, const TwoTermObject& F, const E2Element& x);
/// Whether every part of x is a coboundary.
bool e2_is_zero_class(const TwoTermObject& E, const TwoTermObject& F, const E2Element& x);
/// Matrix of d_2^{0,q} in the cohomology bases of source and target.
Mat d2_matrix(const TwoTermObject& E, const TwoTermObject& F, int q);

struct E3Page {
  std::map<std::pair<int, int>, int> e2;    // (p, q) -> dim E_2
  std::map<int, int> d2_rank;               // q -> rank d_2^{0,q}
  std::map<std::pair<int, int>, int> e3;    // (p, q) -> dim E_3
  GradedDims total;                         // n -> dim Hom^n(E, F)
};

E3Page e3_page(const TwoTermObject& E, const TwoTermObject& F);
GradedDims hom_dims_via_E3(const TwoTermObject& E, const TwoTermObject& F);

struct SubquotientReport {
  int q = 0;
  std::int64_t hom = 0;   // dim Hom^{1+q}(E, F)
  std::int64_t kernel = 0;    // dim Ker d_2^{0,q+1}
  std::int64_t cokernel = 0;  // dim Coker d_2^{0,q}
  std::int64_t middle = 0;    // dim E_2^{1,q}, counted only when E = F
  bool pass() const noexcept { return hom >= kernel + cokernel + middle; }
};
SubquotientReport subquotient_inequality_check(const TwoTermObject& E, const TwoTermObject& F, int q);

bool sphericality_test(const TwoTermObject& E);

}  // namespace stab2cy
