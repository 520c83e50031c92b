#pragma once

// Nilpotent representations of the doubled Kronecker quiver
//
//        a1, a2
//     0 ========> 1
//       <========
//        b1, b2
//
// subject to A1 B1 + A2 B2 = 0 and B1 A1 + B2 A2 = 0, over F_p. Matrices act
// on column vectors, so A_i is d1 x d0 and B_i is d0 x d1.
//
// Ext groups come from the three-term complex
//   C^0 = (+)_v Hom(M_v, N_v) -> C^1 = (+)_arrows Hom(M_s, N_t) -> C^2 = (+)_v Hom(M_v, N_v)
//   d0(f)_x = f_t M_x - N_x f_s
//   d1(g)_1 = sum_i N_Ai g_Bi + g_Ai M_Bi,   d1(g)_0 = sum_i N_Bi g_Ai + g_Bi M_Ai.
//
// Dictionary with the local P^1 side: [S_1] = [O_Z] = (1,0) and
// [S_0] = [O_Z(-1)[1]] = (-1,1), so a module of dimension (d0, d1) has class
// (d1 - d0, d0).

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "stab2cy/fp.hpp"
#include "stab2cy/homtable.hpp"
#include "stab2cy/kcharge.hpp"

namespace stab2cy {

using fp::Mat;
using fp::Scalar;

enum class Arrow { A1 = 0, A2 = 1, B1 = 2, B2 = 3 };
inline constexpr std::array<Arrow, 4> kArrows = {Arrow::A1, Arrow::A2, Arrow::B1, Arrow::B2};
constexpr int source(Arrow a) noexcept { return (a == Arrow::A1 || a == Arrow::A2) ? 0 : 1; }
constexpr int target(Arrow a) noexcept { return 1 - source(a); }
const char* to_string(Arrow a) noexcept;

inline constexpr Scalar kDefaultPrime = 3;

struct PiModule {
  Scalar p = kDefaultPrime;
  int d0 = 0;
  int d1 = 0;
  std::array<Mat, 4> arrows{Mat(0, 0), Mat(0, 0), Mat(0, 0), Mat(0, 0)};

  int dim(int v) const noexcept { return v == 0 ? d0 : d1; }
  int total_dim() const noexcept { return d0 + d1; }
  bool is_zero() const noexcept { return d0 == 0 && d1 == 0; }
  const Mat& arrow(Arrow a) const { return arrows[static_cast<int>(a)]; }
  Mat& arrow(Arrow a) { return arrows[static_cast<int>(a)]; }
  KClass kclass() const noexcept { return {d1 - d0, d0}; }

  friend bool operator==(const PiModule&, const PiModule&) = default;
};

/// Module with all arrows zero.
PiModule semisimple_module(int d0, int d1, Scalar p = kDefaultPrime);
PiModule zero_module(Scalar p = kDefaultPrime);
PiModule simple_module(int v, Scalar p = kDefaultPrime);
/// Validates (see validate) before returning.
PiModule make_module(int d0, int d1, Mat A1, Mat A2, Mat B1, Mat B2, Scalar p = kDefaultPrime);

bool satisfies_relations(const PiModule& M);
bool is_nilpotent(const PiModule& M);
/// Errc::InvalidModule on bad shapes, unreduced entries, a non-prime or too
/// large field, failed relations, or a non-nilpotent module.
void validate(const PiModule& M);

PiModule direct_sum(const PiModule& M, const PiModule& N);
PiModule direct_power(const PiModule& M, int n);
/// Vector-space dual with arrows reversed: (A_i, B_i) -> (B_i^T, A_i^T).
PiModule dual(const PiModule& M);
/// Base change by g0 in GL(d0), g1 in GL(d1): A -> g1 A g0^-1, B -> g0 B g1^-1.
PiModule transform(const PiModule& M, const Mat& g0, const Mat& g1);
/// Flat encoding (d0, d1, then the four matrices row-major).
std::vector<Scalar> encoding(const PiModule& M);
PiModule decode(const std::vector<Scalar>& code, Scalar p);

// ---------------------------------------------------------------------------
// Ext complex

struct ExtComplex {
  Mat d0;  // C^0 -> C^1
  Mat d1;  // C^1 -> C^2
  int n0 = 0, n1 = 0, n2 = 0;
};
ExtComplex ext_complex(const PiModule& M, const PiModule& N);
/// Dimensions of Ext^0, Ext^1, Ext^2 (M, N).
HomDims ext_dims(const PiModule& M, const PiModule& N);

/// A cochain of the complex above. Degrees 0 and 2 carry two vertex maps
/// (N_v x M_v); degree 1 carries four arrow maps (N_t x M_s) in A1, A2, B1,
/// B2 order.
struct ExtElement {
  int degree = 0;
  std::vector<Mat> parts;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

ExtElement zero_element(int degree, const PiModule& M, const PiModule& N);
ExtElement identity_element(const PiModule& M);
Mat flatten(const ExtElement& x);
ExtElement unflatten(int degree, const PiModule& M, const PiModule& N, const Mat& v);
ExtElement add(const ExtElement& x, const ExtElement& y, Scalar p);
ExtElement scale(const ExtElement& x, Scalar k, Scalar p);
bool is_cocycle(const ExtElement& x, const PiModule& M, const PiModule& N);

/// Ext^k(M, N) presented by cocycle representatives.
class ExtGroup {
 public:
  ExtGroup(const PiModule& M, const PiModule& N, int degree);
  int degree() const noexcept { return degree_; }
  int dim() const noexcept { return sq_.dim(); }
  ExtElement basis(int j) const;
  std::vector<Scalar> coords(const ExtElement& x) const;
  ExtElement element(const std::vector<Scalar>& c) const;
  bool is_zero_class(const ExtElement& x) const;

 private:
  PiModule M_, N_;
  int degree_;
  fp::Subquotient sq_;
};

/// Yoneda product x o y for y: A -> B of degree q and x: B -> C of degree p
/// (cochain level, well defined on classes). Errc::DegreeOverflow if p + q > 2.
ExtElement compose(const ExtElement& x, const ExtElement& y, Scalar p);

// ---------------------------------------------------------------------------
// Submodules and quotients

/// A submodule given by column bases of U_0 in M_0 and U_1 in M_1.
struct Subobject {
  Mat U0;
  Mat U1;
  int dim(int v) const noexcept { return v == 0 ? U0.cols() : U1.cols(); }
  friend bool operator==(const Subobject&, const Subobject&) = default;
};

bool is_invariant(const PiModule& M, const Subobject& U);
PiModule restrict_to(const PiModule& M, const Subobject& U);
PiModule quotient(const PiModule& M, const Subobject& U);

/// Enumeration guard: at most this many subspace pairs are examined.
inline constexpr std::int64_t kMaxSubspacePairs = 1 << 21;

/// All submodules, ordered by total dimension, then dim U_0, then the
/// reduced bases. Errc::TooLarge past the guard or when d0 or d1 exceeds 4.
/// OpenMP-parallel over candidate pairs.
std::vector<Subobject> list_subobjects(const PiModule& M);
/// Serial reference for list_subobjects; same output.
std::vector<Subobject> list_subobjects_serial(const PiModule& M);

// ---------------------------------------------------------------------------
// Isomorphism and enumeration

/// Exact: searches Hom(M, N) for an invertible element. Errc::TooLarge when
/// Hom(M, N) has more than max_elements elements.
bool iso_test(const PiModule& M, const PiModule& N, std::int64_t max_elements = 531441);

/// Whether canonical_form is affordable for these dimensions.
bool canonical_form_available(int d0, int d1, Scalar p);
/// Least encoding among the orbit members whose first nonzero arrow is in
/// rank normal form.
/// Errc::TooLarge when not available.
PiModule canonical_form(const PiModule& M);

/// Limit on candidate tuples for enumerate_modules.
inline constexpr std::int64_t kMaxCandidates = 20'000'000;

/// One representative (in canonical form) of every isomorphism class of
/// modules with dimension vector (d0, d1), sorted by encoding. OpenMP-parallel.
std::vector<PiModule> enumerate_modules(int d0, int d1, Scalar p = kDefaultPrime);
std::vector<PiModule> enumerate_modules_serial(int d0, int d1, Scalar p = kDefaultPrime);
/// Every class with 0 < d0 + d1 and d0 <= max0, d1 <= max1.
std::vector<PiModule> enumerate_modules_up_to(int max0, int max1, Scalar p = kDefaultPrime);

/// Middle term of 0 -> A -> X -> C -> 0 classified by zeta in Z^1(C, A):
/// X_v = A_v + C_v and X_x = [[A_x, zeta_x], [0, C_x]]. Errc::InvalidModule
/// when zeta is not a cocycle.
PiModule extension(const PiModule& A, const PiModule& C, const ExtElement& zeta);

/// Iterated random extensions by simples followed by a random base change.
PiModule random_module(int d0, int d1, std::mt19937_64& rng, Scalar p = kDefaultPrime);

// ---------------------------------------------------------------------------
// Twists at simples

/// Cohomology (in the standard heart) of a twisted module.
struct TwistCohomology {
  PiModule hm1;  // H^-1
  PiModule h0;   // H^0
  PiModule h1;   // H^1
  /// True when at most one of the three is nonzero.
  bool concentrated() const noexcept;
  KClass kclass() const noexcept { return h0.kclass() - hm1.kclass() - h1.kclass(); }
};

/// T_{S_v}(M).
TwistCohomology twist_simple(int v, const PiModule& M);
/// T_{S_v}^{-1}(M), through the duality D T_S D = T_S^{-1}.
TwistCohomology inverse_twist_simple(int v, const PiModule& M);

// ---------------------------------------------------------------------------
// Oracle for the generic heart engines.

class PiCategory {
 public:
  using Object = PiModule;
  using Sub = Subobject;

  explicit PiCategory(bool parallel = true) : parallel_(parallel) {}

  std::vector<Subobject> list_subobjects(const PiModule& M) const;
  PiModule subobject(const PiModule& M, const Subobject& U) const { return restrict_to(M, U); }
  PiModule quotient(const PiModule& M, const Subobject& U) const { return stab2cy::quotient(M, U); }
  HomDims hom_dims(const PiModule& X, const PiModule& Y) const { return ext_dims(X, Y); }
  PiModule direct_sum(const PiModule& X, const PiModule& Y) const { return stab2cy::direct_sum(X, Y); }
  bool is_zero(const PiModule& X) const { return X.is_zero(); }
  bool iso_test(const PiModule& X, const PiModule& Y) const { return stab2cy::iso_test(X, Y); }
  KClass kclass(const PiModule& X) const { return X.kclass(); }
  std::int64_t length(const PiModule& X) const { return X.total_dim(); }
  /// Dimension vector, then the canonical encoding when affordable, else
  /// Hom dimensions against the simples and the raw encoding.
  std::vector<std::int64_t> order_key(const PiModule& X) const;

 private:
  bool parallel_;
};

}  // namespace stab2cy
