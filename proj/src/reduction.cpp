#include "stab2cy/reduction.hpp"

#include <cstdlib>
#include <regex>

#include "stab2cy/errors.hpp"

namespace stab2cy {

std::string to_string(const ShiftedLine& x) {
  return "O(" + std::to_string(x.level) + ")[" + std::to_string(x.shift) + "]";
}

ShiftedLine parse_shifted_line(const std::string& text) {
  static const std::regex pattern(R"(\s*O(?:_Z)?\(\s*(-?\d+)\s*\)\s*(?:\[\s*(-?\d+)\s*\])?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(Errc::InvalidInput, "expected O(m)[l], got '" + text + "'");
  }
  return {std::stoll(m[1].str()), m[2].matched ? std::stoll(m[2].str()) : 0};
}

namespace {

GradedDims hom_between(const ShiftedLine& x, const ShiftedLine& y) {
  return hom_dims_shifted(x.level, x.shift, y.level, y.shift);
}

bool only_degree_one(const GradedDims& g) {
  for (const auto& [deg, dim] : g) {
    if (deg != 1 && dim != 0) return false;
  }
  return true;
}

ShiftedLine apply_shift(const ShiftedLine& x, std::int64_t n) { return {x.level, x.shift + n}; }

ShiftedLine apply_tensor(const ShiftedLine& x, std::int64_t k) { return {x.level + k, x.shift}; }

ShiftedLine apply_twist(std::int64_t t, const ShiftedLine& x) {
  const NormalForm out = twist_line_on_line(t, x.level, x.shift);
  const auto [s, n] = out.line_data();
  return {s, n};
}

}  // namespace

bool is_concentrated_in_degree_one(const LinePair& p) {
  return only_degree_one(hom_between(p.E, p.F)) && only_degree_one(hom_between(p.F, p.E));
}

LinePair make_line_pair(ShiftedLine E, ShiftedLine F) {
  LinePair p{E, F};
  if (!is_concentrated_in_degree_one(p)) {
    throw Error(Errc::InadmissiblePair,
                "Hom^*(" + to_string(E) + ", " + to_string(F) + ") not concentrated in degree 1");
  }
  return p;
}

const char* to_string(PairCase c) noexcept {
  switch (c) {
    case PairCase::M_EQ_N_MINUS_1_L1: return "M_EQ_N_MINUS_1_L1";
    case PairCase::N_EQ_M_MINUS_1_Lm1: return "N_EQ_M_MINUS_1_Lm1";
  }
  return "?";
}

PairCase classify_pair(const LinePair& p) {
  const std::int64_t m = p.E.level, n = p.F.level;
  const std::int64_t l = p.E.shift - p.F.shift;
  PairCase c;
  if (m == n - 1 && l == 1) {
    c = PairCase::M_EQ_N_MINUS_1_L1;
  } else if (n == m - 1 && l == -1) {
    c = PairCase::N_EQ_M_MINUS_1_Lm1;
  } else {
    throw Error(Errc::InadmissiblePair, "(m, n, l) = (" + std::to_string(m) + ", " +
                                            std::to_string(n) + ", " + std::to_string(l) + ")");
  }
  // Both cases give Hom^*(E, F) = k^2 in degree 1; anything else means the
  // (m, n, l) bookkeeping and the dimension table disagree.
  const GradedDims dims = hom_dims_shifted(m, l, n, 0);
  if (!(dims.size() == 1 && dims.count(1) == 1 && dims.at(1) == 2) ||
      !is_concentrated_in_degree_one(p)) {
    throw Error(Errc::InadmissiblePair, "Hom table disagrees with case classification");
  }
  return c;
}

LevelForm level_form(const LinePair& p) {
  switch (classify_pair(p)) {
    case PairCase::M_EQ_N_MINUS_1_L1:
      return {p.F.level, -p.F.shift};
    case PairCase::N_EQ_M_MINUS_1_Lm1:
      return {p.E.level, 1 - p.F.shift};
  }
  return {};
}

namespace {

// The O(-2) composite at level v and the O(2) composite undoing the one at
// level v + 2.
AutoWord down_composite(std::int64_t v) { return {Generator::tw(v), Generator::tw(v - 1)}; }
AutoWord up_composite(std::int64_t v) { return {Generator::tw_inv(v + 1), Generator::tw_inv(v + 2)}; }

struct Builder {
  ReductionTrace trace;
  ShiftedLine E, F;

  void step(std::string label, AutoWord gens, ShiftedLine E_after, ShiftedLine F_after) {
    TraceStep s;
    s.generator = std::move(label);
    s.generators = gens;
    s.E_before = E;
    s.F_before = F;
    s.E_after = E_after;
    s.F_after = F_after;
    s.E_class_before = E.kclass();
    s.F_class_before = F.kclass();
    s.E_class_after = E_after.kclass();
    s.F_class_after = F_after.kclass();
    s.hom_before = hom_between(E, F);
    s.hom_after = hom_between(E_after, F_after);
    trace.steps.push_back(std::move(s));
    trace.word.insert(trace.word.end(), gens.begin(), gens.end());
    E = E_after;
    F = F_after;
  }
};

}  // namespace

NormalizedPair normalize_level(const LinePair& p) {
  const LevelForm lf = level_form(p);
  NormalizedPair out{p, {}};
  if (lf.normalizing_shift != 0) {
    out.word.push_back(Generator::shift(lf.normalizing_shift));
    out.pair.E = apply_shift(out.pair.E, lf.normalizing_shift);
    out.pair.F = apply_shift(out.pair.F, lf.normalizing_shift);
  }
  std::int64_t v = lf.v;
  while (v >= 2) {
    for (const Generator& g : down_composite(v)) out.word.push_back(g);
    out.pair.E = apply_tensor(out.pair.E, -2);
    out.pair.F = apply_tensor(out.pair.F, -2);
    v -= 2;
  }
  while (v < 0) {
    for (const Generator& g : up_composite(v)) out.word.push_back(g);
    out.pair.E = apply_tensor(out.pair.E, 2);
    out.pair.F = apply_tensor(out.pair.F, 2);
    v += 2;
  }
  return out;
}

AutoWord finalize(const LinePair& p) {
  const LevelForm lf = level_form(p);
  if (lf.v != 0 && lf.v != 1) {
    throw Error(Errc::InvalidInput, "finalize needs level 0 or 1, got " + std::to_string(lf.v));
  }
  AutoWord w;
  if (lf.normalizing_shift != 0) w.push_back(Generator::shift(lf.normalizing_shift));
  if (lf.v == 1) w.push_back(Generator::tw(0));
  return w;
}

ReductionTrace reduce_pair(const LinePair& p) {
  Builder b;
  b.trace.input = p;
  b.trace.pair_case = classify_pair(p);
  const LevelForm lf = level_form(p);
  b.trace.level = lf.v;
  b.E = p.E;
  b.F = p.F;

  if (lf.normalizing_shift != 0) {
    const Generator g = Generator::shift(lf.normalizing_shift);
    b.step(to_string(g), {g}, apply_shift(b.E, g.value), apply_shift(b.F, g.value));
  }
  std::int64_t v = lf.v;
  while (v >= 2) {
    const AutoWord w = down_composite(v);
    b.step(to_string(w[0]) + " " + to_string(w[1]) + " [tensor O(-2)]", w, apply_tensor(b.E, -2),
           apply_tensor(b.F, -2));
    v -= 2;
  }
  while (v < 0) {
    const AutoWord w = up_composite(v);
    b.step(to_string(w[0]) + " " + to_string(w[1]) + " [tensor O(2)]", w, apply_tensor(b.E, 2),
           apply_tensor(b.F, 2));
    v += 2;
  }
  if (v == 1) {
    const Generator g = Generator::tw(0);
    b.step(to_string(g), {g}, apply_twist(0, b.E), apply_twist(0, b.F));
  }

  const ShiftedLine oz{0, 0};
  const ShiftedLine om1{-1, 1};
  if (b.E == oz && b.F == om1) {
    b.trace.final_pair = {b.E, b.F};
    b.trace.swapped = false;
  } else if (b.E == om1 && b.F == oz) {
    b.trace.final_pair = {b.F, b.E};
    b.trace.swapped = true;
  } else {
    throw Error(Errc::InvalidInput, "reduction did not reach the standard pair: " +
                                        to_string(b.E) + ", " + to_string(b.F));
  }
  return b.trace;
}

namespace {

// For the O(-2) composite, the summand that stays a line bundle after the
// first twist can be followed object by object.
bool composite_consistent_on_objects(const AutoWord& w, const ShiftedLine& before,
                                     const ShiftedLine& after) {
  if (w.size() != 2 || w[0].kind != Generator::Kind::Tw) return true;
  const std::int64_t v = w[0].value;
  if (before.level != v) return true;  // middle object leaves the line world
  const ShiftedLine mid = apply_twist(v, before);
  return apply_twist(v - 1, mid) == after;
}

}  // namespace

CertificateResult certify(const ReductionTrace& trace) {
  CertificateResult r;
  auto fail = [&r](std::string msg) {
    r.ok = false;
    r.failures.push_back(std::move(msg));
  };

  ShiftedLine E = trace.input.E, F = trace.input.F;
  AutoWord accumulated;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (!(s.E_before == E && s.F_before == F)) fail(at + "objects do not chain");
    if (s.E_class_before != E.kclass() || s.F_class_before != F.kclass()) {
      fail(at + "class before mismatch");
    }
    if (word_on_K(s.generators, s.E_class_before) != s.E_class_after ||
        word_on_K(s.generators, s.F_class_before) != s.F_class_after) {
      fail(at + "word_on_K disagrees with recorded classes");
    }
    if (s.E_after.kclass() != s.E_class_after || s.F_after.kclass() != s.F_class_after) {
      fail(at + "class after mismatch");
    }
    if (s.hom_before != hom_between(s.E_before, s.F_before) ||
        s.hom_after != hom_between(s.E_after, s.F_after)) {
      fail(at + "Hom table disagrees with homtable");
    }
    if (s.hom_before != s.hom_after || !only_degree_one(s.hom_after) ||
        !only_degree_one(hom_between(s.F_after, s.E_after))) {
      fail(at + "Hom concentration not preserved");
    }
    if (!composite_consistent_on_objects(s.generators, s.E_before, s.E_after) ||
        !composite_consistent_on_objects(s.generators, s.F_before, s.F_after)) {
      fail(at + "object-level twist rules disagree with the composite");
    }
    accumulated.insert(accumulated.end(), s.generators.begin(), s.generators.end());
    E = s.E_after;
    F = s.F_after;
  }
  if (accumulated != trace.word) fail("steps do not spell the word");
  if (word_on_K(trace.word, trace.input.E.kclass()) != E.kclass() ||
      word_on_K(trace.word, trace.input.F.kclass()) != F.kclass()) {
    fail("full word disagrees with final classes");
  }
  const KClass a = trace.final_pair.E.kclass(), b = trace.final_pair.F.kclass();
  if (!(a == KClass{1, 0} && b == KClass{-1, 1})) fail("final classes are not {(1,0), (-1,1)}");
  const LinePair reached = trace.swapped ? LinePair{F, E} : LinePair{E, F};
  if (!(reached.E == trace.final_pair.E && reached.F == trace.final_pair.F)) {
    fail("final pair does not match the last step");
  }
  return r;
}

}  // namespace stab2cy
