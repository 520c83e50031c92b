#include "stab2cy/kcharge.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "stab2cy/errors.hpp"

namespace stab2cy {

std::string to_string(const KClass& u) {
  std::ostringstream os;
  os << "(" << u.a << "," << u.b << ")";
  return os.str();
}

std::string to_string(const ExactComplex& z) {
  std::ostringstream os;
  os << z.re << (sgn(z.im) < 0 ? "-" : "+") << abs(z.im) << "i";
  return os.str();
}

int cross_sign(const ExactComplex& u, const ExactComplex& v) {
  return sgn(u.re * v.im - u.im * v.re);
}

bool in_upper_window(const ExactComplex& z) {
  return sgn(z.im) > 0 || (sgn(z.im) == 0 && sgn(z.re) < 0);
}

const char* to_string(Cmp c) noexcept {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

namespace {

Cmp from_sign(int s) { return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ); }

// Within one half-window two arguments differ by less than pi, so the cross
// product decides.
Cmp compare_same_half(const ExactComplex& u, const ExactComplex& v) {
  return from_sign(-cross_sign(u, v));
}

std::int64_t integer_difference(const Rational& a, const Rational& b) {
  Rational d = a - b;
  if (d.get_den() != 1) {
    throw Error(Errc::PhaseIncomparable, "phase windows differ by a non-integer");
  }
  return d.get_num().get_si();
}

}  // namespace

Cmp compare_args(const ExactComplex& u, const ExactComplex& v) {
  if (u.is_zero() || v.is_zero()) throw Error(Errc::ZeroCharge, "argument of zero");
  const bool uu = in_upper_window(u);
  const bool vu = in_upper_window(v);
  if (uu != vu) return uu ? Cmp::GT : Cmp::LT;
  return compare_same_half(u, v);
}

double Phase::approx() const {
  return window.get_d() + std::atan2(direction.im.get_d(), direction.re.get_d()) / std::numbers::pi;
}

Cmp compare(const Phase& p, const Phase& q) {
  const std::int64_t k = integer_difference(p.window, q.window);
  if (k >= 1) return Cmp::GT;
  if (k <= -1) return Cmp::LT;
  return compare_same_half(p.direction, q.direction);
}

bool difference_exceeds(const Phase& p, const Phase& q, std::int64_t gap) {
  const std::int64_t m = integer_difference(p.window, q.window) - gap;
  if (m >= 1) return true;
  if (m <= -1) return false;
  return compare_same_half(p.direction, q.direction) == Cmp::GT;
}

Phase shifted(const Phase& p, std::int64_t n) { return Phase{p.window + n, p.direction}; }

CentralCharge::CentralCharge(ExactComplex z_OZ, ExactComplex z_Ox)
    : z_OZ_(std::move(z_OZ)), z_Ox_(std::move(z_Ox)) {}

CentralCharge CentralCharge::from_heart_simples(const ExactComplex& z_OZ,
                                                const ExactComplex& z_Om1_shift1) {
  // (-1,1) = -[O_Z] + [O_x]  =>  Z(O_x) = Z(O_Z) + Z(O_Z(-1)[1]).
  return CentralCharge(z_OZ, z_OZ + z_Om1_shift1);
}

CentralCharge CentralCharge::standard(const ExactComplex& z_OZ,
                                      const ExactComplex& z_Om1_shift1) {
  CentralCharge Z = from_heart_simples(z_OZ, z_Om1_shift1);
  if (!Z.in_standard_region()) {
    throw Error(Errc::InvalidInput, "standard-region charge needs Im Z(O_Z), Im Z(O_Z(-1)[1]) > 0");
  }
  return Z;
}

bool CentralCharge::in_standard_region() const {
  return sgn((*this)(KClass{1, 0}).im) > 0 && sgn((*this)(KClass{-1, 1}).im) > 0;
}

ExactComplex CentralCharge::operator()(const KClass& u) const {
  return Rational(u.a) * z_OZ_ + Rational(u.b) * z_Ox_;
}

Phase CentralCharge::phase_of_value(const ExactComplex& z) const {
  if (z.is_zero()) throw Error(Errc::ZeroCharge, "phase of a zero charge");
  if (in_upper_window(z)) return Phase{rot_, z};
  return Phase{rot_ - 1, -z};
}

Phase CentralCharge::phase(const KClass& u) const { return phase_of_value((*this)(u)); }

CentralCharge rotate_scale(const CentralCharge& Z, const Rational& x, const Rational& t) {
  CentralCharge out = Z;
  out.logscale_ += x;
  out.rot_ += t;
  return out;
}

bool operator==(const CentralCharge& a, const CentralCharge& b) {
  return a.z_OZ_ == b.z_OZ_ && a.z_Ox_ == b.z_Ox_ && a.rot_ == b.rot_ &&
         a.logscale_ == b.logscale_;
}

std::int64_t euler_form(const KClass& u, const KClass& v) noexcept { return 2 * u.a * v.a; }

KClass class_of_line_bundle(std::int64_t t, std::int64_t shift) noexcept {
  const std::int64_t sign = (shift % 2 == 0) ? 1 : -1;
  return {sign, sign * t};
}

ExactComplex charge_eval(const CentralCharge& Z, const KClass& u) { return Z(u); }

Cmp phase_compare(const CentralCharge& Z, const KClass& u, const KClass& v) {
  const ExactComplex zu = Z(u);
  const ExactComplex zv = Z(v);
  if (zu.is_zero() || zv.is_zero()) {
    throw Error(Errc::ZeroCharge, "class " + to_string(zu.is_zero() ? u : v) + " has Z = 0");
  }
  return compare_args(zu, zv);
}

KClass twist_on_K(const KClass& e, const KClass& f) {
  if (!e.is_spherical_candidate()) {
    throw Error(Errc::NotSphericalClass, "twist centre " + to_string(e));
  }
  return f - euler_form(e, f) * e;
}

SignAndP sign_and_p(const KClass& f, const KClass& e) {
  if (!f.is_spherical_candidate()) throw Error(Errc::NotABasis, to_string(f));
  if (!e.is_spherical_candidate()) throw Error(Errc::NotSphericalClass, to_string(e));
  const int s = static_cast<int>(e.a * f.a);  // f.a = +-1 is its own inverse
  return {s, e.b - s * f.b};
}

CompareSignsReport compare_signs_check(const CentralCharge& Z, const KClass& E,
                                       const KClass& S, const KClass& F) {
  for (const KClass* c : {&E, &S, &F}) {
    if (!c->is_spherical_candidate()) throw Error(Errc::NotSphericalClass, to_string(*c));
  }
  const ExactComplex zE = Z(E), zS = Z(S), zF = Z(F);
  if (zE.is_zero() || zS.is_zero() || zF.is_zero()) {
    throw Error(Errc::ZeroCharge, "compare_signs_check");
  }
  CompareSignsReport r;
  // phi(E) - 1 < phi(X) < phi(E) <=> Z(E) is strictly counter-clockwise of Z(X).
  const bool s_below_e = cross_sign(zS, zE) > 0;
  const bool f_below_e = cross_sign(zF, zE) > 0;
  const bool s_below_f = cross_sign(zS, zF) > 0;
  r.hypothesis = sign_of(E) != sign_of(F) && s_below_e && f_below_e && s_below_f;
  r.conclusion = sign_of(F) == sign_of(S);
  if (!r.hypothesis) {
    r.note = "hypothesis not met";
  } else {
    r.note = r.conclusion ? "PASS" : "FAIL: F and S have different signs";
  }
  return r;
}

}  // namespace stab2cy
