#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "support.hpp"
#include "torideg/dataset.hpp"
#include "torideg/io.hpp"
#include "torideg/serialize.hpp"
#include "torideg/tropical.hpp"
#include "torideg/valuation.hpp"

using namespace torideg;
using namespace torideg::test;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = TORIDEG_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> w;
  for (std::string s; in >> s;) w.push_back(s);
  return w;
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  std::istringstream in(read_file(kGolden / "cases.txt"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    cases.push_back({line.substr(0, colon), words(line.substr(colon + 1))});
  }
  return cases;
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("torideg-cli-" + std::to_string(::getpid()) + "-" + name);
}

}  // namespace

TEST(Golden, EveryWorkedExampleMatchesByteForByte) {
  std::vector<GoldenCase> cases = golden_cases();
  ASSERT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    SCOPED_TRACE(c.name);
    Outcome r = run(c.args);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, read_file(kGolden / (c.name + ".out")));
  }
}

TEST(ExitCodes, InputErrorsAreTwo) {
  EXPECT_EQ(run({"gb", "--dataset", "nosuch"}).code, cli::kInputError);
  EXPECT_EQ(run({"gb"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"gb", "--dataset", "curve", "--order", "revlex"}).code, cli::kInputError);
  EXPECT_EQ(run({"certify", "--dataset", "curve", "--rays", "[2,3]"}).code, cli::kInputError);
  EXPECT_EQ(run({"trop", "--dataset", "curve", "--format", "xml"}).code, cli::kInputError);
  fs::path bad = temp_path("bad.txt");
  write_file_atomic(bad, "ring x,y\nx^2 + w\n");
  EXPECT_EQ(run({"gb", "--ideal", bad.string()}).code, cli::kInputError);
  EXPECT_EQ(run({"gb", "--ideal", bad.string(), "--dataset", "curve"}).code, cli::kInputError);
  fs::remove(bad);
}

TEST(ExitCodes, FailedExpectationsAreOne) {
  Outcome r = run({"certify", "--dataset", "curve", "--rays", "[1,0,1]", "--expect", "prime"});
  EXPECT_EQ(r.code, cli::kMathFailure);
  EXPECT_NE(r.out.find("prime false"), std::string::npos);
  EXPECT_EQ(run({"initial", "--dataset", "curve", "--point", "1,0,0", "--expect", "monomial-free"}).code,
            cli::kMathFailure);
  EXPECT_EQ(run({"valuation", "khovanskii", "--dataset", "curve", "--rays", "[1,0,1]", "--expect", "prime"}).code,
            cli::kMathFailure);
  EXPECT_EQ(run({"initial", "--dataset", "curve", "--point", "0,1,1", "--expect", "monomial-free"}).code,
            cli::kSuccess);
}

TEST(ExitCodes, HelpSucceeds) {
  Outcome r = run({"--help"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("wallcross"), std::string::npos);
}

TEST(Determinism, RepeatedRunsAreIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gfan", "--dataset", "curve", "--format", "json"},
           {"trop", "--dataset", "curve"},
           {"lift", "--dataset", "curve", "--rays", "[2,3,0],[1,0,1]"}}) {
    Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Output, OutFileMatchesStdout) {
  fs::path path = temp_path("nobody.json");
  std::vector<std::string> args = {"nobody", "--dataset", "curve", "--rays", "[2,3,0]", "--format", "json"};
  Outcome direct = run(args);
  args.insert(args.end(), {"--out", path.string()});
  Outcome to_file = run(args);
  EXPECT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(read_file(path), direct.out);
  fs::remove(path);
}

TEST(RoundTrip, GroebnerBasisText) {
  Outcome r = run({"gb", "--dataset", "curve", "--order", "grevlex"});
  MarkedGroebnerBasis G = parse_groebner(r.out);
  EXPECT_EQ(G, buchberger(curve_ideal(), TermOrder::grevlex()));
  EXPECT_EQ(format_groebner(G), r.out);
}

TEST(RoundTrip, GroebnerBasisJson) {
  auto doc = nlohmann::json::parse(run({"gb", "--dataset", "curve", "--format", "json"}).out);
  Ideal I = parse_ideal(doc["ring"].get<std::string>() + "\n" + doc["basis"][0]["poly"].get<std::string>() + "\n");
  EXPECT_TRUE(same_ideal(I, curve_ideal()));
  EXPECT_EQ(TermOrder::parse(doc["order"].get<std::string>()), TermOrder::grevlex());
}

TEST(RoundTrip, PolytopeJson) {
  Polytope P = polytope_from_json(run({"nobody", "--dataset", "curve", "--rays", "[2,3,0]", "--format", "json"}).out);
  EXPECT_EQ(P.vertices(), QMatrix({Q({1, 0}), Q({1, 3})}));
  EXPECT_EQ(polytope_from_json(polytope_to_json(P)), P);
}

TEST(RoundTrip, FanJson) {
  Outcome r = run({"gfan", "--dataset", "curve", "--format", "json"});
  Fan F = fan_from_json(r.out);
  GroebnerFan G = gfan_traverse(curve_ideal());
  ASSERT_EQ(F.cones.size(), G.cones.size());
  for (std::size_t k = 0; k < F.cones.size(); ++k) {
    EXPECT_TRUE(G.cones[k].contains_in_relative_interior(F.cones[k].relative_interior_point()));
    EXPECT_TRUE(F.cones[k].contains_in_relative_interior(G.cones[k].relative_interior_point()));
  }
  EXPECT_EQ(F.adjacency, G.adjacency);
  EXPECT_EQ(fan_to_json(fan_from_json(fan_to_json(F))), fan_to_json(F));
}

TEST(RoundTrip, LiftedIdealAndFiberText) {
  Outcome lift = run({"lift", "--dataset", "curve", "--rays", "[2,3,0],[1,0,1]"});
  Ideal L = parse_ideal(lift.out);
  RingPtr R = L.ring();
  ASSERT_EQ(R->nvars(), 5u);
  EXPECT_TRUE(same_ideal(L, Ideal(R, {P("y^2*z*t2^2 - x^3 + z^3*t1^6", R)})));
  Ideal F = parse_ideal(run({"fiber", "--dataset", "curve", "--rays", "[2,3,0],[1,0,1]", "--at", "1,0"}).out);
  EXPECT_TRUE(same_ideal(F, Ideal(F.ring(), {P("z^3 - x^3", F.ring())})));
}

TEST(RoundTrip, TropicalConesJson) {
  auto doc = nlohmann::json::parse(run({"trop", "--dataset", "curve", "--format", "json"}).out);
  ASSERT_EQ(doc.size(), 3u);
  Ideal I = curve_ideal();
  for (const auto& cone : doc) {
    ZMatrix M;
    for (const auto& row : cone["ray_matrix"]) {
      ZVector v;
      for (const auto& x : row) v.emplace_back(x.get<std::string>());
      M.push_back(v);
    }
    TropicalCone t = certify_prime_cone(I, M, cone["lineality_rows"].get<std::size_t>());
    EXPECT_EQ(t.prime, cone["prime"].get<bool>());
    EXPECT_EQ(ideal_key(t.initial_ideal),
              ideal_key(Ideal(I.ring(), {P(cone["initial_ideal"][0].get<std::string>(), I.ring())})));
  }
}

TEST(Environment, DataDirectoryOverride) {
  fs::path dir = temp_path("data");
  fs::create_directories(dir);
  write_file_atomic(dir / "catalog.json", R"({"datasets": []})");
  ::setenv("TORIDEG_DATA", dir.c_str(), 1);
  EXPECT_EQ(run({"gb", "--dataset", "curve"}).code, cli::kInputError);
  EXPECT_EQ(run({"datasets"}).out, "");
  ::unsetenv("TORIDEG_DATA");
  EXPECT_EQ(run({"gb", "--dataset", "curve"}).code, cli::kSuccess);
  fs::remove_all(dir);
}

TEST(Trop, CandidateConesFromNamedRays) {
  fs::path cones = temp_path("cones.txt");
  write_file_atomic(cones, "# one cone per line\n[2,3,0]\n[0,1,1]\n");
  Outcome r = run({"trop", "--dataset", "curve", "--cones-from", cones.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cones 2"), std::string::npos) << r.out;
  EXPECT_EQ(run({"trop", "--dataset", "curve", "--cones-from", cones.string(), "--expect", "prime"}).code,
            cli::kMathFailure);
  fs::remove(cones);
}
