#pragma once

// K-group of the local P^1 category, its Euler form, exact central charges
// and phase comparison, and the action of spherical twists on classes.
//
// K(T) is free on [O_Z] and [O_x]; a class a[O_Z] + b[O_x] is stored as
// (a, b). The Euler form only sees the O_Z coefficient: chi(u, v) = 2 u.a v.a.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace stab2cy {

using Rational = mpq_class;

struct KClass {
  std::int64_t a = 0;  // coefficient of [O_Z]
  std::int64_t b = 0;  // coefficient of [O_x]

  /// Image in N(T) is +-[O_Z].
  bool is_spherical_candidate() const noexcept { return a == 1 || a == -1; }

  friend KClass operator+(KClass u, KClass v) noexcept { return {u.a + v.a, u.b + v.b}; }
  friend KClass operator-(KClass u, KClass v) noexcept { return {u.a - v.a, u.b - v.b}; }
  friend KClass operator-(KClass u) noexcept { return {-u.a, -u.b}; }
  friend KClass operator*(std::int64_t k, KClass u) noexcept { return {k * u.a, k * u.b}; }
  friend bool operator==(const KClass&, const KClass&) = default;
  friend auto operator<=>(const KClass&, const KClass&) = default;
};

std::string to_string(const KClass& u);

struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ExactComplex conj() const { return {re, -im}; }
  /// |z|^2; the modulus itself is irrational in general.
  Rational norm2() const { return re * re + im * im; }

  friend ExactComplex operator+(const ExactComplex& u, const ExactComplex& v) {
    return {u.re + v.re, u.im + v.im};
  }
  friend ExactComplex operator-(const ExactComplex& u, const ExactComplex& v) {
    return {u.re - v.re, u.im - v.im};
  }
  friend ExactComplex operator-(const ExactComplex& u) { return {-u.re, -u.im}; }
  friend ExactComplex operator*(const ExactComplex& u, const ExactComplex& v) {
    return {u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re};
  }
  friend ExactComplex operator*(const Rational& k, const ExactComplex& u) {
    return {k * u.re, k * u.im};
  }
  friend bool operator==(const ExactComplex& u, const ExactComplex& v) {
    return u.re == v.re && u.im == v.im;
  }
};

std::string to_string(const ExactComplex& z);

/// Sign of Im(conj(u) v): +1 when v lies counter-clockwise of u by an angle
/// in (0, pi), -1 when clockwise, 0 when u and v are real-proportional.
int cross_sign(const ExactComplex& u, const ExactComplex& v);

/// z lies in the closed upper half-plane minus [0, inf): arg z in (0, pi].
bool in_upper_window(const ExactComplex& z);

enum class Cmp { LT, EQ, GT };
const char* to_string(Cmp c) noexcept;

/// Compares principal arguments in (-pi, pi] exactly. Both inputs nonzero.
Cmp compare_args(const ExactComplex& u, const ExactComplex& v);

/// An exact phase value window + arg(direction)/pi with arg(direction) in
/// (0, pi]. Two phases are comparable when their windows differ by an
/// integer; otherwise Errc::PhaseIncomparable.
struct Phase {
  Rational window;
  ExactComplex direction;

  /// For display only; not used in any decision.
  double approx() const;
};

Cmp compare(const Phase& p, const Phase& q);
/// p - q > gap, exactly, for an integer gap.
bool difference_exceeds(const Phase& p, const Phase& q, std::int64_t gap);
Phase shifted(const Phase& p, std::int64_t n);

class CentralCharge {
 public:
  CentralCharge() = default;
  CentralCharge(ExactComplex z_OZ, ExactComplex z_Ox);

  /// Builds Z from its values on the two simple objects of the standard
  /// heart: [O_Z] = (1,0) and [O_Z(-1)[1]] = (-1,1).
  static CentralCharge from_heart_simples(const ExactComplex& z_OZ,
                                          const ExactComplex& z_Om1_shift1);
  /// As above but requires both values in the open upper half-plane.
  static CentralCharge standard(const ExactComplex& z_OZ, const ExactComplex& z_Om1_shift1);

  const ExactComplex& z_OZ() const noexcept { return z_OZ_; }
  const ExactComplex& z_Ox() const noexcept { return z_Ox_; }
  const Rational& rot() const noexcept { return rot_; }
  const Rational& logscale() const noexcept { return logscale_; }

  bool in_standard_region() const;

  /// Linear evaluation; the rotation/scale tag never touches raw values.
  ExactComplex operator()(const KClass& u) const;

  /// Phase of a class whose value lies in the upper window, offset by rot.
  Phase phase(const KClass& u) const;
  Phase phase_of_value(const ExactComplex& z) const;

  friend CentralCharge rotate_scale(const CentralCharge& Z, const Rational& x,
                                    const Rational& t);
  friend bool operator==(const CentralCharge&, const CentralCharge&);

 private:
  ExactComplex z_OZ_;
  ExactComplex z_Ox_;
  Rational rot_ = 0;
  Rational logscale_ = 0;
};

/// The C-action by z = x + i*pi*t, kept symbolic: e^x is never evaluated.
CentralCharge rotate_scale(const CentralCharge& Z, const Rational& x, const Rational& t);

std::int64_t euler_form(const KClass& u, const KClass& v) noexcept;
/// [O(t)[shift]].
KClass class_of_line_bundle(std::int64_t t, std::int64_t shift) noexcept;
ExactComplex charge_eval(const CentralCharge& Z, const KClass& u);
/// Errc::ZeroCharge if either class evaluates to zero.
Cmp phase_compare(const CentralCharge& Z, const KClass& u, const KClass& v);
/// T_E on K: f - chi(e, f) e. Errc::NotSphericalClass unless |e.a| = 1.
KClass twist_on_K(const KClass& e, const KClass& f);

struct SignAndP {
  int s = 1;
  std::int64_t p = 0;
  friend bool operator==(const SignAndP&, const SignAndP&) = default;
};
/// Coordinates of e in the basis {f, [O_x]}.
SignAndP sign_and_p(const KClass& f, const KClass& e);
/// Sign relative to [O_Z].
inline int sign_of(const KClass& e) { return e.a > 0 ? 1 : -1; }

struct CompareSignsReport {
  bool hypothesis = false;
  bool conclusion = false;
  std::string note;
  /// The implication hypothesis => conclusion.
  bool pass() const noexcept { return !hypothesis || conclusion; }
};

/// Checks: E and F of different signs and phi(E[-1]) < phi(S) < phi(F) <
/// phi(E) imply sign(F) = sign(S). Phases of S and F are the representatives
/// inside the open unit interval below phi(E).
CompareSignsReport compare_signs_check(const CentralCharge& Z, const KClass& E,
                                       const KClass& S, const KClass& F);

}  // namespace stab2cy
