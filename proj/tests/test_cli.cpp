#include <gtest/gtest.h>

#include <sstream>

#include "stab2cy/cli.hpp"
#include "stab2cy/errors.hpp"
#include "stab2cy/io.hpp"

using namespace stab2cy;
using io::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(IO, ModuleRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const PiModule M = random_module(1 + i % 3, 1 + (i / 3) % 3, rng);
    EXPECT_EQ(io::module_from_json(json::parse(io::to_json(M).dump())), M);
  }
  EXPECT_EQ(io::module_from_json(json::parse(R"({"d":[1,0]})")), simple_module(0));
  EXPECT_THROW(io::module_from_json(json::parse(R"({"d":[1,1],"A1":[[1]],"B1":[[1]]})")), Error);
  EXPECT_THROW(io::module_from_json(json::parse(R"({"d":[1,1],"A1":[[1,2]]})")), Error);
  EXPECT_THROW(io::module_from_json(json::parse(R"({"dims":[1,1]})")), Error);
}

TEST(IO, TwoTermRoundTrip) {
  for (const auto& E : two_term_sweep()) {
    EXPECT_EQ(io::two_term_from_json(json::parse(io::to_json(E).dump())), E);
  }
}

TEST(IO, NormalFormAndWordRoundTrip) {
  const NormalForm E(0, {{-1, {0, 2}}, {0, {1, 0}}});
  EXPECT_EQ(io::normal_form_from_json(io::to_json(E)), E);
  const AutoWord w{Generator::tw(2), Generator::tw_inv(-1), Generator::shift(3)};
  EXPECT_EQ(io::word_from_json(io::to_json(w)), w);
}

TEST(IO, ComplexParsing) {
  const ExactComplex z = io::complex_from_string("-1/2,3");
  EXPECT_EQ(z.re, Rational(-1, 2));
  EXPECT_EQ(z.im, Rational(3));
  EXPECT_THROW(io::complex_from_string("1"), Error);
  EXPECT_THROW(io::complex_from_string("1/0,1"), Error);
  EXPECT_EQ(io::kclass_from_string("-1,4"), (KClass{-1, 4}));
}

TEST(CLI, HomdimExample) {
  const Result r = run({"homdim", "--s", "0", "--t", "2", "--indent", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"dims\":{\"0\":3,\"1\":1,\"2\":0}}\n");
}

TEST(CLI, ReduceExample) {
  const Result r = run({"reduce", "--E", "O(0)[1]", "--F", "O(1)[0]"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["certificate"]["ok"].get<bool>());
  EXPECT_EQ(j["final"][0]["class"], json::array({1, 0}));
  EXPECT_EQ(j["final"][1]["class"], json::array({-1, 1}));
}

TEST(CLI, ExitCodes) {
  EXPECT_EQ(run({"reduce", "--E", "O(0)", "--F", "O(5)"}).code, cli::kExitInvalid);
  EXPECT_EQ(run({"reduce", "--E", "nonsense", "--F", "O(5)"}).code, cli::kExitInvalid);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"homdim", "--s", "x", "--t", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"jh", "--module", R"({"d":[1,1],"A1":[[1]]})", "--z0", "1,1", "--z1", "-1,1"}).code,
            cli::kExitInvalid);
  const Result v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(io::kSchemaVersion) + "\n");
}

TEST(CLI, VerifyIsDeterministic) {
  const Result a = run({"verify", "--suite", "mukai", "--seed", "7"});
  const Result b = run({"verify", "--suite", "mukai", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["seed"], 7);
}

TEST(CLI, HnAndSpectral) {
  const Result h = run({"hn", "--module", R"({"d":[1,1],"A1":[[1]]})", "--z0", "1,1", "--z1", "-1,1"});
  ASSERT_EQ(h.code, 0);
  const json j = json::parse(h.out);
  ASSERT_EQ(j["factors"].size(), 2u);
  EXPECT_EQ(j["factors"][0]["class"], json::array({1, 0}));
  // factors parse back as modules
  EXPECT_EQ(io::module_from_json(j["factors"][1]["object"]), simple_module(0));

  const Result s = run({"spectral", "--E", R"({"H0":{"d":[1,0]},"H1":{"d":[1,0]},"e":[1]})"});
  ASSERT_EQ(s.code, 0);
  EXPECT_FALSE(json::parse(s.out)["spherical"].get<bool>());
}

TEST(CLI, TwistKclassRealize) {
  const Result t = run({"twist", "--t", "0", "--line", "O(0)"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(io::normal_form_from_json(json::parse(t.out)["result"]), NormalForm::line(0, -1));
  const Result k = run({"kclass", "--line", "O(2)[1]", "--with", "1,0"});
  ASSERT_EQ(k.code, 0);
  EXPECT_EQ(json::parse(k.out)["class"], json::array({-1, -2}));
  EXPECT_EQ(json::parse(k.out)["euler"], -2);
  const Result r = run({"realize", "--t", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["supported"].get<bool>());
  const Result m = run({"twist", "--module", R"({"d":[0,1]})", "--vertex", "0"});
  ASSERT_EQ(m.code, 0);
  EXPECT_TRUE(json::parse(m.out)["result"]["concentrated"].get<bool>());
}
