#include "stab2cy/bridge.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "stab2cy/errors.hpp"

namespace stab2cy {

TwoTermObject ShiftedModule::two_term() const {
  const PiModule Z = zero_module(module.p);
  if (shift == 0) return module_object(module);
  if (shift == -1) return TwoTermObject{Z, module, zero_element(2, module, Z)};
  throw Error(Errc::InvalidInput, "only shifts 0 and -1 are two-term objects");
}

GradedDims hom_graded(const ShiftedModule& X, const ShiftedModule& Y) {
  const HomDims d = ext_dims(X.module, Y.module);
  GradedDims out;
  for (std::int64_t j = 0; j <= 2; ++j) {
    if (d.at(j) != 0) out[j + X.shift - Y.shift] = d.at(j);
  }
  return out;
}

std::optional<ShiftedModule> twist_concentrated(int v, bool inverse, const ShiftedModule& X) {
  const TwistCohomology tc = inverse ? inverse_twist_simple(v, X.module) : twist_simple(v, X.module);
  if (!tc.concentrated()) return std::nullopt;
  if (!tc.hm1.is_zero()) return ShiftedModule{tc.hm1, X.shift + 1};
  if (!tc.h1.is_zero()) return ShiftedModule{tc.h1, X.shift - 1};
  return ShiftedModule{tc.h0, X.shift};
}

namespace {

std::vector<GradedDims> expected_tables(std::int64_t t) {
  return {hom_dims_shifted(t, 0, 0, 0), hom_dims_shifted(0, 0, t, 0), hom_dims_shifted(t, 0, -1, 1),
          hom_dims_shifted(-1, 1, t, 0)};
}

std::vector<GradedDims> observed_tables(const ShiftedModule& X) {
  const ShiftedModule OZ{simple_module(1, X.module.p), 0};
  const ShiftedModule Om1{simple_module(0, X.module.p), 0};
  return {hom_graded(X, OZ), hom_graded(OZ, X), hom_graded(X, Om1), hom_graded(Om1, X)};
}

struct Node {
  ShiftedModule x;
  std::string word;
  int last_v = -1;
  bool last_inverse = false;
  int depth = 0;
};

}  // namespace

Realization realize_line_bundle(std::int64_t t, const SearchBound& bound, Scalar p) {
  Realization r;
  r.t = t;
  r.bound = bound;
  r.expected = expected_tables(t);
  const KClass target = class_of_line_bundle(t, 0);

  std::deque<Node> queue;
  queue.push_back({{simple_module(0, p), 0}, "S_0", -1, false, 0});
  queue.push_back({{simple_module(1, p), 0}, "S_1", -1, false, 0});
  std::set<std::pair<std::vector<Scalar>, std::int64_t>> seen;
  for (const Node& n : queue) seen.insert({encoding(n.x.module), n.x.shift});

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    ++r.states_explored;
    const PiModule& M = node.x.module;
    if ((M.kclass() == target || M.kclass() == -target) && sphericality_test(module_object(M))) {
      for (std::int64_t k = node.x.shift - bound.shift_window; k <= node.x.shift + bound.shift_window; ++k) {
        const ShiftedModule X{M, k};
        if (X.kclass() != target) continue;
        auto obs = observed_tables(X);
        if (obs == r.expected) {
          r.object = X;
          r.observed = std::move(obs);
          r.word = node.word + (k == node.x.shift ? "" : " [" + std::to_string(k - node.x.shift) + "]");
          return r;
        }
      }
    }
    if (node.depth >= bound.max_depth) continue;
    for (int v = 0; v < 2; ++v) {
      for (bool inverse : {false, true}) {
        if (v == node.last_v && inverse != node.last_inverse) continue;
        auto y = twist_concentrated(v, inverse, node.x);
        if (!y || y->module.total_dim() > bound.max_total_dim) continue;
        if (!seen.insert({encoding(y->module), y->shift}).second) continue;
        const std::string label = "T_S" + std::to_string(v) + (inverse ? "^-1" : "");
        queue.push_back({std::move(*y), node.word + " " + label, v, inverse, node.depth + 1});
      }
    }
  }
  return r;
}

namespace {

const Realization& cached_realization(std::int64_t t, Scalar p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, Scalar>, Realization> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({t, p});
  if (it == cache.end()) it = cache.emplace(std::make_pair(t, p), realize_line_bundle(t, {}, p)).first;
  return it->second;
}

}  // namespace

std::optional<ShiftedModule> realize_shifted_line(const ShiftedLine& x, Scalar p) {
  const Realization& r = cached_realization(x.level, p);
  if (!r.object) return std::nullopt;
  return ShiftedModule{r.object->module, r.object->shift + x.shift};
}

std::optional<ShiftedLine> identify_line(const ShiftedModule& X) {
  const KClass u = X.kclass();
  if (!u.is_spherical_candidate()) return std::nullopt;
  const std::int64_t t = u.a * u.b;
  const Realization& r = cached_realization(t, X.module.p);
  if (!r.object) return std::nullopt;
  const PiModule& R = r.object->module;
  if (R.d0 != X.module.d0 || R.d1 != X.module.d1 || !iso_test(R, X.module)) return std::nullopt;
  return ShiftedLine{t, X.shift - r.object->shift};
}

std::vector<TTInstance> lemma_tt_instances(Scalar p) {
  std::vector<TTInstance> out;
  {
    const auto x = twist_concentrated(1, false, {simple_module(0, p), 0});
    out.push_back({"T_S1(S_0)", *x, twist_line_on_line(0, -1, 1)});
  }
  {
    // T_{O(-1)}^{-1}(O(0)): cohomology O(-1)^2 in degree -1 and O(0) in degree 0.
    const auto y = twist_concentrated(0, true, {simple_module(1, p), 0});
    out.push_back({"T_S0^-1(S_1)", *y, NormalForm(0, {{-1, {0, 2}}, {0, {1, 0}}})});
  }
  return out;
}

TTReport lemma_tt_certify(const TTInstance& E, const ShiftedLine& F) {
  TTReport r;
  r.instance = E.name;
  r.before = E.form;
  r.l_before = length(E.form);
  r.F_before = F;
  r.twist_level = E.form.v() - 1;
  if (r.l_before <= 1) {
    r.failures.push_back("precondition: l(E) = " + std::to_string(r.l_before) + " is not > 1");
    return r;
  }
  r.precondition = true;
  if (E.object.kclass() != E.form.kclass()) {
    throw Error(Errc::InvalidInput, E.name + ": module class does not match the normal form");
  }

  // O(0) = S_1 and O(-1) = S_0[-1]; T_{X[n]} = T_X.
  if (r.twist_level != 0 && r.twist_level != -1) {
    throw Error(Errc::UnsupportedInstance,
                "twist by O(" + std::to_string(r.twist_level) + ") has no simple realization");
  }
  const int vertex = r.twist_level == 0 ? 1 : 0;
  const Scalar p = E.object.module.p;

  const auto tE = twist_concentrated(vertex, false, E.object);
  if (!tE) throw Error(Errc::UnsupportedInstance, E.name + ": twisted object is not concentrated");
  const auto lineE = identify_line(*tE);
  if (!lineE) throw Error(Errc::UnsupportedInstance, E.name + ": twisted object not identified");
  r.after = NormalForm::line(lineE->level, lineE->shift);
  r.l_after = length(*r.after);
  if (r.l_after >= r.l_before) r.failures.push_back("l(E) did not decrease");
  if (tE->kclass() != word_on_K({Generator::tw(r.twist_level)}, E.form.kclass())) {
    r.failures.push_back("twisted class disagrees with word_on_K");
  }

  const auto realF = realize_shifted_line(F, p);
  if (!realF) throw Error(Errc::UnsupportedInstance, "F = " + to_string(F) + " has no realization");
  const auto tF = twist_concentrated(vertex, false, *realF);
  const auto lineF = tF ? identify_line(*tF) : std::nullopt;
  if (!lineF) throw Error(Errc::UnsupportedInstance, "twisted F not identified");
  r.F_after = *lineF;
  r.l_F_after = 1;
  const NormalForm expected = twist_line_on_line(r.twist_level, F.level, F.shift);
  if (!(expected.is_line() && NormalForm::line(lineF->level, lineF->shift) == expected)) {
    r.failures.push_back("twisted F disagrees with the line-bundle rule: " + to_string(expected));
  }
  return r;
}

}  // namespace stab2cy
