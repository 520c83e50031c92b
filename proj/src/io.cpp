#include "stab2cy/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "stab2cy/errors.hpp"

namespace stab2cy::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::InvalidInput, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Rational rational_from_string(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw Error(Errc::InvalidInput, "bad rational '" + text + "'");
  Rational r(m[1].str(), 10);
  if (m[2].matched) {
    const mpz_class den(m[2].str(), 10);
    if (den == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + text + "'");
    r /= den;
  }
  r.canonicalize();
  return r;
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(Errc::InvalidInput, "expected 'x,y', got '" + text + "'");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

json graded_map(const std::map<std::int64_t, std::int64_t>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j, int rows, int cols, Scalar p) {
  Mat m(rows, cols);
  if (rows == 0 || cols == 0) return m;  // [], [[]] and [[], []] all accepted
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw Error(Errc::InvalidInput, "matrix should have " + std::to_string(rows) + " rows");
  }
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw Error(Errc::InvalidInput, "matrix row should have " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) m(i, c) = fp::reduce(as_int(row[c], "matrix entry"), p);
  }
  return m;
}

json to_json(const PiModule& M) {
  return json{{"d", {M.d0, M.d1}},
              {"A1", to_json(M.arrow(Arrow::A1))},
              {"A2", to_json(M.arrow(Arrow::A2))},
              {"B1", to_json(M.arrow(Arrow::B1))},
              {"B2", to_json(M.arrow(Arrow::B2))},
              {"p", M.p}};
}

PiModule module_from_json(const json& j) {
  const json& d = field(j, "d");
  if (!d.is_array() || d.size() != 2) throw Error(Errc::InvalidInput, "'d' must be [d0, d1]");
  const auto d0 = as_int(d[0], "d0");
  const auto d1 = as_int(d[1], "d1");
  if (d0 < 0 || d1 < 0 || d0 > 64 || d1 > 64) throw Error(Errc::InvalidInput, "dimensions out of range");
  const Scalar p = j.contains("p") ? as_int(j.at("p"), "p") : kDefaultPrime;
  if (!fp::is_prime(p)) throw Error(Errc::InvalidInput, "p must be prime");
  const int n0 = static_cast<int>(d0), n1 = static_cast<int>(d1);
  auto get = [&](const char* key, int rows, int cols) {
    return j.contains(key) ? mat_from_json(j.at(key), rows, cols, p) : Mat(rows, cols);
  };
  // A: vertex 0 -> 1 (d1 x d0), B: vertex 1 -> 0 (d0 x d1)
  return make_module(n0, n1, get("A1", n1, n0), get("A2", n1, n0), get("B1", n0, n1), get("B2", n0, n1), p);
}

json to_json(const TwoTermObject& E) {
  json out{{"H0", to_json(E.H0)}, {"H1", to_json(E.H1)}};
  if (ExtGroup(E.H1, E.H0, 2).dim() > 0) out["e"] = ExtGroup(E.H1, E.H0, 2).coords(E.e);
  out["class"] = to_json(E.kclass());
  return out;
}

TwoTermObject two_term_from_json(const json& j) {
  PiModule H0 = j.contains("H0") ? module_from_json(j.at("H0")) : zero_module();
  PiModule H1 = j.contains("H1") ? module_from_json(j.at("H1")) : zero_module(H0.p);
  if (H0.is_zero()) H0 = zero_module(H1.p);
  if (H0.p != H1.p) throw Error(Errc::InvalidInput, "H0 and H1 over different fields");
  const ExtGroup ext(H1, H0, 2);
  std::vector<Scalar> c(static_cast<std::size_t>(ext.dim()), 0);
  if (j.contains("e")) {
    const json& e = j.at("e");
    if (!e.is_array() || static_cast<int>(e.size()) != ext.dim()) {
      throw Error(Errc::InvalidInput, "'e' needs " + std::to_string(ext.dim()) + " coordinates");
    }
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp::reduce(as_int(e[i], "e"), H0.p);
  }
  return make_two_term(std::move(H0), std::move(H1), ext.element(c));
}

json to_json(const KClass& u) { return json::array({u.a, u.b}); }

KClass kclass_from_string(const std::string& text) {
  const auto [a, b] = split_pair(text);
  try {
    return {std::stoll(a), std::stoll(b)};
  } catch (const std::exception&) {
    throw Error(Errc::InvalidInput, "bad class '" + text + "'");
  }
}

json to_json(const ExactComplex& z) { return json::array({z.re.get_str(), z.im.get_str()}); }

ExactComplex complex_from_string(const std::string& text) {
  const auto [re, im] = split_pair(text);
  return {rational_from_string(re), rational_from_string(im)};
}

json to_json(const Phase& ph) {
  return json{{"window", ph.window.get_str()}, {"direction", to_json(ph.direction)}, {"approx", ph.approx()}};
}

json to_json(const HomDims& d) {
  return json{{"0", d.d0}, {"1", d.d1}, {"2", d.d2}};
}

json to_json(const GradedDims& g) { return graded_map(g); }

json to_json(const NormalForm& E) {
  json comps = json::object();
  for (const auto& [q, fg] : E.components()) comps[std::to_string(q)] = {fg.first, fg.second};
  return json{{"v", E.v()}, {"comps", comps}, {"text", to_string(E)}, {"length", length(E)},
              {"class", to_json(E.kclass())}};
}

NormalForm normal_form_from_json(const json& j) {
  const std::int64_t v = as_int(field(j, "v"), "v");
  std::map<std::int64_t, NormalForm::Multiplicities> comps;
  for (const auto& [key, fg] : field(j, "comps").items()) {
    if (!fg.is_array() || fg.size() != 2) throw Error(Errc::InvalidInput, "component must be [f, g]");
    std::int64_t q = 0;
    try {
      q = std::stoll(key);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "bad component degree '" + key + "'");
    }
    comps[q] = {as_int(fg[0], "f"), as_int(fg[1], "g")};
  }
  return NormalForm(v, std::move(comps));
}

json to_json(const AutoWord& w) {
  json out = json::array();
  for (const Generator& g : w) out.push_back(to_string(g));
  return out;
}

AutoWord word_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "word must be an array of generators");
  AutoWord w;
  for (const json& g : j) {
    if (!g.is_string()) throw Error(Errc::InvalidInput, "generator must be a string");
    w.push_back(parse_generator(g.get<std::string>()));
  }
  return w;
}

json to_json(const ShiftedLine& x) {
  return json{{"level", x.level}, {"shift", x.shift}, {"text", to_string(x)}, {"class", to_json(x.kclass())}};
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    steps.push_back(json{{"generator", s.generator},
                         {"generators", to_json(s.generators)},
                         {"E_before", to_string(s.E_before)},
                         {"F_before", to_string(s.F_before)},
                         {"E_after", to_string(s.E_after)},
                         {"F_after", to_string(s.F_after)},
                         {"E_class_before", to_json(s.E_class_before)},
                         {"F_class_before", to_json(s.F_class_before)},
                         {"E_class_after", to_json(s.E_class_after)},
                         {"F_class_after", to_json(s.F_class_after)},
                         {"hom_before", to_json(s.hom_before)},
                         {"hom_after", to_json(s.hom_after)},
                         {"l_E", s.l_E},
                         {"l_F", s.l_F}});
  }
  return json{{"input", {{"E", to_json(t.input.E)}, {"F", to_json(t.input.F)}}},
              {"case", to_string(t.pair_case)},
              {"level", t.level},
              {"word", to_json(t.word)},
              {"word_described", describe_word(t.word)},
              {"steps", steps},
              {"final", {to_json(t.final_pair.E), to_json(t.final_pair.F)}},
              {"swapped", t.swapped}};
}

json to_json(const CertificateResult& c) { return json{{"ok", c.ok}, {"failures", c.failures}}; }

json to_json(const TwistCohomology& t) {
  return json{{"H-1", to_json(t.hm1)},
              {"H0", to_json(t.h0)},
              {"H1", to_json(t.h1)},
              {"concentrated", t.concentrated()},
              {"class", to_json(t.kclass())}};
}

json to_json(const HNFiltration<PiModule>& hn) {
  json factors = json::array();
  for (const auto& f : hn.factors) {
    factors.push_back(json{{"phase", to_json(f.phase)}, {"object", to_json(f.object)},
                           {"class", to_json(f.object.kclass())}});
  }
  return json{{"semistable", hn.semistable()}, {"factors", factors}};
}

json to_json(const JHBlocks<PiModule>& jh) {
  json blocks = json::array();
  for (const auto& b : jh.blocks) {
    blocks.push_back(json{{"block", to_json(b.block)},
                          {"rest", to_json(b.rest)},
                          {"stable_type", to_json(b.stable_type)},
                          {"multiplicity", b.multiplicity},
                          {"hom_block_rest", b.hom_block_rest}});
  }
  return json{{"phase", to_json(jh.phase)},
              {"blocks", blocks},
              {"class_sum", to_json(jh.class_sum)},
              {"certified", jh.certified}};
}

json to_json(const E3Page& page) {
  auto bigraded = [](const std::map<std::pair<int, int>, int>& m) {
    json out = json::array();
    for (const auto& [pq, d] : m) out.push_back(json{{"p", pq.first}, {"q", pq.second}, {"dim", d}});
    return out;
  };
  json ranks = json::object();
  for (const auto& [q, r] : page.d2_rank) ranks[std::to_string(q)] = r;
  return json{{"E2", bigraded(page.e2)}, {"d2_rank", ranks}, {"E3", bigraded(page.e3)},
              {"hom", to_json(page.total)}};
}

json to_json(const ShiftedModule& X) {
  return json{{"module", to_json(X.module)}, {"shift", X.shift}, {"class", to_json(X.kclass())}};
}

json to_json(const Realization& r) {
  json out{{"t", r.t},
           {"supported", r.supported()},
           {"bound",
            {{"max_depth", r.bound.max_depth},
             {"max_total_dim", r.bound.max_total_dim},
             {"shift_window", r.bound.shift_window}}},
           {"states_explored", r.states_explored}};
  json expected = json::array(), observed = json::array();
  for (const auto& g : r.expected) expected.push_back(to_json(g));
  for (const auto& g : r.observed) observed.push_back(to_json(g));
  out["expected"] = expected;
  if (r.object) {
    out["object"] = to_json(*r.object);
    out["word"] = r.word;
    out["observed"] = observed;
  }
  return out;
}

json to_json(const TTReport& r) {
  json out{{"instance", r.instance},
           {"before", to_json(r.before)},
           {"twist_level", r.twist_level},
           {"F_before", to_json(r.F_before)},
           {"F_after", to_json(r.F_after)},
           {"l_before", r.l_before},
           {"l_after", r.l_after},
           {"l_F_before", r.l_F_before},
           {"l_F_after", r.l_F_after},
           {"precondition", r.precondition},
           {"failures", r.failures},
           {"pass", r.pass()}};
  if (r.after) out["after"] = to_json(*r.after);
  return out;
}

json to_json(const SuiteReport& r) {
  json counters = json::object();
  for (const auto& [k, v] : r.counters) counters[k] = v;
  return json{{"suite", r.suite},     {"seed", r.seed},         {"instances", r.instances},
              {"counters", counters}, {"failures", r.failures}, {"pass", r.pass()}};
}

json parse_argument(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(Errc::InvalidInput, "cannot read " + text.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, std::string("bad JSON: ") + e.what());
  }
}

}  // namespace stab2cy::io
