#pragma once

// Normal forms of spherical objects on local P^1: each cohomology sheaf
// H^q(E) is O_Z(v)^{f_q} + O_Z(v-1)^{g_q} for one common level v.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stab2cy/kcharge.hpp"

namespace stab2cy {

class NormalForm {
 public:
  using Multiplicities = std::pair<std::int64_t, std::int64_t>;  // (f_q, g_q)

  /// Canonicalizes: drops empty degrees, and when no O(v) summand occurs
  /// lowers v by one so that the top level always carries f.
  /// Errc::InvalidNormalForm for negative multiplicities or an empty map.
  NormalForm(std::int64_t v, std::map<std::int64_t, Multiplicities> comps);

  /// O_Z(s)[n], i.e. a single summand in degree -n.
  static NormalForm line(std::int64_t s, std::int64_t n);

  std::int64_t v() const noexcept { return v_; }
  const std::map<std::int64_t, Multiplicities>& components() const noexcept { return comps_; }
  Multiplicities multiplicities(std::int64_t q) const;

  void validate() const;
  bool is_line() const noexcept;
  /// (s, n) with *this = O_Z(s)[n]; requires is_line().
  std::pair<std::int64_t, std::int64_t> line_data() const;

  /// Alternating sum of the summand classes.
  KClass kclass() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  std::int64_t v_ = 0;
  std::map<std::int64_t, Multiplicities> comps_;
};

std::string to_string(const NormalForm& E);

/// l(E) = sum over q of f_q + g_q.
std::int64_t length(const NormalForm& E);
/// E[n]: degree q moves to q - n.
NormalForm shift(const NormalForm& E, std::int64_t n);

struct TensorResult {
  NormalForm form;
  /// Only even degrees are reached by the twist group (as composites of two
  /// neighbouring twists).
  bool in_group;
};
TensorResult tensor_line(const NormalForm& E, std::int64_t k);

/// T_{O(t)}(O(s)[n]) for s in {t-1, t, t+1}; Errc::UnsupportedTwistDistance
/// otherwise, since the cone then depends on more than the normal form.
NormalForm twist_line_on_line(std::int64_t t, std::int64_t s, std::int64_t n);

struct Generator {
  enum class Kind { Tw, TwInv, Shift };
  Kind kind = Kind::Tw;
  std::int64_t value = 0;

  static Generator tw(std::int64_t t) { return {Kind::Tw, t}; }
  static Generator tw_inv(std::int64_t t) { return {Kind::TwInv, t}; }
  static Generator shift(std::int64_t n) { return {Kind::Shift, n}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A word in the twist group, applied left to right.
using AutoWord = std::vector<Generator>;

std::string to_string(const Generator& g);
/// Parses "Tw(3)", "TwInv(-1)", "Shift(2)".
Generator parse_generator(const std::string& text);

/// One label per generator; each adjacent pair [Tw(v), Tw(v-1)] is labelled
/// "tensor O(-2)" and [TwInv(v-1), TwInv(v)] "tensor O(2)".
std::vector<std::string> describe_word(const AutoWord& w);

KClass apply_on_K(const Generator& g, const KClass& u);
KClass word_on_K(const AutoWord& w, const KClass& u);

}  // namespace stab2cy
