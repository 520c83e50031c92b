#include "stab2cy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "stab2cy/errors.hpp"
#include "stab2cy/io.hpp"

namespace stab2cy::cli {

namespace {

using io::json;

struct Options {
  std::string out_path;
  int indent = 2;

  // homdim
  std::int64_t s = 0, t = 0, shift_s = 0, shift_t = 0;
  bool shifted = false;
  // kclass / twist
  std::string cls, other, line, word, module, inverse_of;
  int vertex = -1;
  bool inverse = false;
  std::int64_t twist_t = 0;
  // reduce
  std::string E, F;
  // hn / jh
  std::string z0 = "1,1", z1 = "-1,1";
  // verify
  std::string suite;
  std::uint64_t seed = 0;
  int random = -1;
  // realize
  SearchBound bound;
  Scalar p = kDefaultPrime;
};

json homdim(const Options& o) {
  if (o.shifted) return json{{"dims", io::to_json(hom_dims_shifted(o.s, o.shift_s, o.t, o.shift_t))}};
  return json{{"dims", io::to_json(hom_dims_line(o.s, o.t))}};
}

std::optional<CentralCharge> charge_option(const Options& o, const CLI::App& sub) {
  if (sub.count("--z0") == 0 && sub.count("--z1") == 0) return std::nullopt;
  return charge_from_simples(io::complex_from_string(o.z0), io::complex_from_string(o.z1));
}

json kclass(const Options& o, const CLI::App& sub) {
  if (o.cls.empty() == o.line.empty()) throw Error(Errc::InvalidInput, "give exactly one of --class, --line");
  const KClass u = o.line.empty() ? io::kclass_from_string(o.cls) : parse_shifted_line(o.line).kclass();
  json out{{"class", io::to_json(u)},
           {"euler_self", euler_form(u, u)},
           {"spherical_candidate", u.is_spherical_candidate()}};
  if (u.is_spherical_candidate()) {
    out["line"] = to_string(ShiftedLine{u.a * u.b, u.a > 0 ? 0 : 1});
  }
  if (!o.other.empty()) {
    const KClass v = io::kclass_from_string(o.other);
    out["other"] = io::to_json(v);
    out["euler"] = euler_form(u, v);
    if (v.is_spherical_candidate()) {
      out["twist_by_other"] = io::to_json(twist_on_K(v, u));
      const SignAndP sp = sign_and_p(v, u);
      out["sign_and_p"] = {{"s", sp.s}, {"p", sp.p}};
    }
  }
  if (const auto Z = charge_option(o, sub)) {
    out["charge"] = io::to_json((*Z)(u));
    if (!(*Z)(u).is_zero()) out["phase"] = io::to_json(Z->phase(u));
  }
  return out;
}

json twist(const Options& o, const CLI::App& sub) {
  if (!o.module.empty()) {
    if (o.vertex != 0 && o.vertex != 1) throw Error(Errc::InvalidInput, "--vertex must be 0 or 1");
    const PiModule M = io::module_from_json(io::parse_argument(o.module));
    const TwistCohomology tc = o.inverse ? inverse_twist_simple(o.vertex, M) : twist_simple(o.vertex, M);
    return json{{"vertex", o.vertex}, {"inverse", o.inverse}, {"input", io::to_json(M)}, {"result", io::to_json(tc)}};
  }
  if (!o.line.empty()) {
    if (sub.count("--t") == 0) throw Error(Errc::InvalidInput, "--line needs --t");
    const ShiftedLine x = parse_shifted_line(o.line);
    return json{{"twist", "T_O(" + std::to_string(o.twist_t) + ")"},
                {"input", io::to_json(x)},
                {"result", io::to_json(twist_line_on_line(o.twist_t, x.level, x.shift))}};
  }
  if (!o.word.empty()) {
    if (o.cls.empty()) throw Error(Errc::InvalidInput, "--word needs --class");
    const AutoWord w = io::word_from_json(io::parse_argument(o.word));
    const KClass u = io::kclass_from_string(o.cls);
    return json{{"word", io::to_json(w)}, {"class", io::to_json(u)}, {"result", io::to_json(word_on_K(w, u))}};
  }
  if (!o.cls.empty() && !o.other.empty()) {
    const KClass e = io::kclass_from_string(o.other);
    const KClass f = io::kclass_from_string(o.cls);
    return json{{"e", io::to_json(e)}, {"f", io::to_json(f)}, {"result", io::to_json(twist_on_K(e, f))}};
  }
  throw Error(Errc::InvalidInput, "twist needs --module/--vertex, --line/--t, --word/--class or --class/--by");
}

json reduce(const Options& o) {
  const LinePair pair = make_line_pair(parse_shifted_line(o.E), parse_shifted_line(o.F));
  const ReductionTrace trace = reduce_pair(pair);
  json out = io::to_json(trace);
  out["certificate"] = io::to_json(certify(trace));
  return out;
}

json hn(const Options& o) {
  const PiModule M = io::module_from_json(io::parse_argument(o.module));
  const CentralCharge Z = charge_from_simples(io::complex_from_string(o.z0), io::complex_from_string(o.z1));
  const PiCategory cat;
  json out = io::to_json(hn_filter(cat, Z, M));
  out["input"] = io::to_json(M);
  out["charge"] = {{"S0", io::to_json(Z(simple_module(0).kclass()))}, {"S1", io::to_json(Z(simple_module(1).kclass()))}};
  return out;
}

json jh(const Options& o) {
  const PiModule M = io::module_from_json(io::parse_argument(o.module));
  const CentralCharge Z = charge_from_simples(io::complex_from_string(o.z0), io::complex_from_string(o.z1));
  const PiCategory cat;
  json out = io::to_json(jh_blocks(cat, Z, M, heart_phase(Z, M.kclass())));
  out["input"] = io::to_json(M);
  return out;
}

json spectral(const Options& o) {
  const TwoTermObject E = io::two_term_from_json(io::parse_argument(o.E));
  const TwoTermObject F = o.F.empty() ? E : io::two_term_from_json(io::parse_argument(o.F));
  json out = io::to_json(e3_page(E, F));
  if (o.F.empty()) out["spherical"] = sphericality_test(E);
  return out;
}

SuiteReport run_suite(const Options& o) {
  const std::uint64_t seed = o.seed;
  const auto n = [&](int fallback) { return o.random >= 0 ? o.random : fallback; };
  if (o.suite == "mukai") return run_mukai_suite(seed, n(10));
  if (o.suite == "chain") return run_chain_suite(seed, n(5));
  if (o.suite == "rigidity") return run_rigidity_suite(seed, n(5));
  if (o.suite == "twist") return run_twist_suite(seed);
  if (o.suite == "hn") return run_hn_suite(seed);
  if (o.suite == "soundness") return run_soundness_suite(seed, n(200));
  if (o.suite == "spectral") {
    SuiteReport r = run_spectral_suite();
    r.seed = seed;
    return r;
  }
  if (o.suite == "tt") {
    SuiteReport r;
    r.suite = "tt";
    r.seed = seed;
    for (const TTInstance& inst : lemma_tt_instances(o.p)) {
      for (std::int64_t level = -1; level <= 0; ++level) {
        const TTReport rep = lemma_tt_certify(inst, ShiftedLine{level, 0});
        ++r.instances;
        ++r.counters[rep.pass() ? "pass" : "fail"];
        for (const auto& f : rep.failures) r.failures.push_back(inst.name + ": " + f);
      }
    }
    return r;
  }
  throw Error(Errc::InvalidInput, "unknown suite '" + o.suite + "'");
}

json realize(const Options& o) { return io::to_json(realize_line_bundle(o.t, o.bound, o.p)); }

void write(const json& j, const Options& o, std::ostream& out) {
  const std::string text = j.dump(o.indent) + "\n";
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw Error(Errc::InvalidInput, "cannot write " + o.out_path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in a 2-Calabi-Yau category and its module model", "stab2cy"};
  app.set_version_flag("--version", io::kSchemaVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--out", o.out_path, "write JSON here instead of stdout");
  app.add_option("--indent", o.indent, "JSON indentation (-1 for compact)");

  auto* c_homdim = app.add_subcommand("homdim", "dim Hom^i(O(s)[a], O(t)[b])");
  c_homdim->add_option("--s", o.s)->required();
  c_homdim->add_option("--t", o.t)->required();
  c_homdim->add_option("--shift-s", o.shift_s);
  c_homdim->add_option("--shift-t", o.shift_t);

  auto* c_kclass = app.add_subcommand("kclass", "K-class arithmetic, Euler form, charges");
  c_kclass->add_option("--class", o.cls, "a,b");
  c_kclass->add_option("--line", o.line, "O(t)[n]");
  c_kclass->add_option("--with", o.other, "second class a,b");
  c_kclass->add_option("--z0", o.z0, "Z(S_0) as re,im");
  c_kclass->add_option("--z1", o.z1, "Z(S_1) as re,im");

  auto* c_twist = app.add_subcommand("twist", "spherical twists on lines, classes and modules");
  c_twist->add_option("--t", o.twist_t, "twist by O(t)");
  c_twist->add_option("--line", o.line, "O(s)[n]");
  c_twist->add_option("--class", o.cls, "a,b");
  c_twist->add_option("--by", o.other, "spherical class a,b to twist by");
  c_twist->add_option("--word", o.word, "JSON array of generators");
  c_twist->add_option("--module", o.module, "module JSON or @file");
  c_twist->add_option("--vertex", o.vertex, "twist by S_vertex");
  c_twist->add_flag("--inverse", o.inverse);

  auto* c_reduce = app.add_subcommand("reduce", "reduce a pair of shifted line bundles to the standard pair");
  c_reduce->add_option("--E", o.E, "O(m)[l]")->required();
  c_reduce->add_option("--F", o.F, "O(n)[k]")->required();
  c_reduce->add_flag("--json", "accepted for compatibility; output is always JSON");

  auto* c_hn = app.add_subcommand("hn", "HN filtration of a module in the standard heart");
  c_hn->add_option("--module", o.module, "module JSON or @file")->required();
  c_hn->add_option("--z0", o.z0, "Z(S_0) as re,im");
  c_hn->add_option("--z1", o.z1, "Z(S_1) as re,im");

  auto* c_jh = app.add_subcommand("jh", "JH blocks of a semistable module");
  c_jh->add_option("--module", o.module, "module JSON or @file")->required();
  c_jh->add_option("--z0", o.z0, "Z(S_0) as re,im");
  c_jh->add_option("--z1", o.z1, "Z(S_1) as re,im");

  auto* c_spectral = app.add_subcommand("spectral", "E_2/E_3 pages for two-term objects");
  c_spectral->add_option("--E", o.E, "two-term JSON or @file")->required();
  c_spectral->add_option("--F", o.F, "two-term JSON or @file (default: E)");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"mukai", "chain", "rigidity", "twist", "hn", "soundness", "spectral", "tt"}));
  c_verify->add_option("--seed", o.seed);
  c_verify->add_option("--random", o.random, "random instances on top of the exhaustive sweep");

  auto* c_realize = app.add_subcommand("realize", "search for a module realizing O(t)");
  c_realize->add_option("--t", o.t)->required();
  c_realize->add_option("--max-depth", o.bound.max_depth);
  c_realize->add_option("--max-dim", o.bound.max_total_dim);
  c_realize->add_option("--shift-window", o.bound.shift_window);
  c_realize->add_option("--p", o.p, "field order")->check(CLI::Range(2, 7));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.shifted = c_homdim->count("--shift-s") + c_homdim->count("--shift-t") > 0;

  try {
    json result;
    int status = kExitOk;
    if (*c_homdim) result = homdim(o);
    else if (*c_kclass) result = kclass(o, *c_kclass);
    else if (*c_twist) result = twist(o, *c_twist);
    else if (*c_reduce) result = reduce(o);
    else if (*c_hn) result = hn(o);
    else if (*c_jh) result = jh(o);
    else if (*c_spectral) result = spectral(o);
    else if (*c_realize) result = realize(o);
    else if (*c_verify) {
      const SuiteReport r = run_suite(o);
      result = io::to_json(r);
      if (!r.pass()) status = kExitViolation;
    }
    write(result, o, out);
    return status;
  } catch (const Error& e) {
    err << json{{"error", to_string(e.code())}, {"detail", e.what()}}.dump() << "\n";
    return kExitInvalid;
  }
}

}  // namespace stab2cy::cli
