#include "stab2cy/nfcalc.hpp"

#include <regex>
#include <sstream>

#include "stab2cy/errors.hpp"
#include "stab2cy/homtable.hpp"

namespace stab2cy {

NormalForm::NormalForm(std::int64_t v, std::map<std::int64_t, Multiplicities> comps) : v_(v) {
  bool any_top = false;
  for (const auto& [q, fg] : comps) {
    if (fg.first < 0 || fg.second < 0) {
      throw Error(Errc::InvalidNormalForm, "negative multiplicity in degree " + std::to_string(q));
    }
    if (fg.first == 0 && fg.second == 0) continue;
    comps_.emplace(q, fg);
    any_top = any_top || fg.first > 0;
  }
  if (comps_.empty()) throw Error(Errc::InvalidNormalForm, "zero object");
  if (!any_top) {
    --v_;
    for (auto& [q, fg] : comps_) fg = {fg.second, 0};
  }
}

NormalForm NormalForm::line(std::int64_t s, std::int64_t n) { return NormalForm(s, {{-n, {1, 0}}}); }

NormalForm::Multiplicities NormalForm::multiplicities(std::int64_t q) const {
  auto it = comps_.find(q);
  return it == comps_.end() ? Multiplicities{0, 0} : it->second;
}

void NormalForm::validate() const {
  if (comps_.empty()) throw Error(Errc::InvalidNormalForm, "zero object");
  bool any_top = false;
  for (const auto& [q, fg] : comps_) {
    if (fg.first < 0 || fg.second < 0 || (fg.first == 0 && fg.second == 0)) {
      throw Error(Errc::InvalidNormalForm, "bad multiplicities in degree " + std::to_string(q));
    }
    any_top = any_top || fg.first > 0;
  }
  if (!any_top) throw Error(Errc::InvalidNormalForm, "not canonical: no summand at level v");
}

bool NormalForm::is_line() const noexcept { return length(*this) == 1; }

std::pair<std::int64_t, std::int64_t> NormalForm::line_data() const {
  if (!is_line()) throw Error(Errc::InvalidInput, "not a line bundle: " + to_string(*this));
  // Canonical form puts a lone summand at level v.
  return {v_, -comps_.begin()->first};
}

KClass NormalForm::kclass() const {
  KClass sum;
  for (const auto& [q, fg] : comps_) {
    const KClass term = fg.first * class_of_line_bundle(v_, 0) +
                        fg.second * class_of_line_bundle(v_ - 1, 0);
    sum = (q % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

std::string to_string(const NormalForm& E) {
  std::ostringstream os;
  os << "v=" << E.v() << " {";
  bool first = true;
  for (const auto& [q, fg] : E.components()) {
    os << (first ? "" : ", ") << q << ":(" << fg.first << "," << fg.second << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

std::int64_t length(const NormalForm& E) {
  std::int64_t l = 0;
  for (const auto& [q, fg] : E.components()) l += fg.first + fg.second;
  return l;
}

NormalForm shift(const NormalForm& E, std::int64_t n) {
  std::map<std::int64_t, NormalForm::Multiplicities> comps;
  for (const auto& [q, fg] : E.components()) comps.emplace(q - n, fg);
  return NormalForm(E.v(), std::move(comps));
}

TensorResult tensor_line(const NormalForm& E, std::int64_t k) {
  return {NormalForm(E.v() + k, E.components()), k % 2 == 0};
}

NormalForm twist_line_on_line(std::int64_t t, std::int64_t s, std::int64_t n) {
  if (s == t) return NormalForm::line(t, n - 1);
  if (s == t + 1) return NormalForm::line(t - 1, n + 1);
  if (s == t - 1) {
    // RHom(O(t), O(t-1)) sits in degree 2 only, so the cone of
    // O(t)^{d2}[-2] -> O(t-1) has H^0 = O(t-1) and H^1 = O(t)^{d2}.
    const std::int64_t d2 = hom_dims_line(t, s).d2;
    return shift(NormalForm(t, {{0, {0, 1}}, {1, {d2, 0}}}), n);
  }
  throw Error(Errc::UnsupportedTwistDistance,
              "T_O(" + std::to_string(t) + ") on O(" + std::to_string(s) + ")");
}

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Tw: return "Tw(" + std::to_string(g.value) + ")";
    case Generator::Kind::TwInv: return "TwInv(" + std::to_string(g.value) + ")";
    case Generator::Kind::Shift: return "Shift(" + std::to_string(g.value) + ")";
  }
  return "?";
}

Generator parse_generator(const std::string& text) {
  static const std::regex pattern(R"(\s*(Tw|TwInv|Shift)\(\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(Errc::InvalidInput, "bad generator '" + text + "'");
  }
  const std::int64_t value = std::stoll(m[2].str());
  if (m[1] == "Tw") return Generator::tw(value);
  if (m[1] == "TwInv") return Generator::tw_inv(value);
  return Generator::shift(value);
}

std::vector<std::string> describe_word(const AutoWord& w) {
  std::vector<std::string> labels;
  for (const Generator& g : w) labels.push_back(to_string(g));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Generator& x = w[i];
    const Generator& y = w[i + 1];
    if (x.kind == Generator::Kind::Tw && y.kind == Generator::Kind::Tw && y.value == x.value - 1) {
      labels[i] += " [tensor O(-2)";
      labels[i + 1] += "]";
      ++i;
    } else if (x.kind == Generator::Kind::TwInv && y.kind == Generator::Kind::TwInv &&
               y.value == x.value + 1) {
      labels[i] += " [tensor O(2)";
      labels[i + 1] += "]";
      ++i;
    }
  }
  return labels;
}

KClass apply_on_K(const Generator& g, const KClass& u) {
  switch (g.kind) {
    case Generator::Kind::Tw:
    case Generator::Kind::TwInv:
      // Reflections are involutions on K.
      return twist_on_K(class_of_line_bundle(g.value, 0), u);
    case Generator::Kind::Shift:
      return (g.value % 2 == 0) ? u : -u;
  }
  return u;
}

KClass word_on_K(const AutoWord& w, const KClass& u) {
  KClass x = u;
  for (const Generator& g : w) x = apply_on_K(g, x);
  return x;
}

}  // namespace stab2cy
