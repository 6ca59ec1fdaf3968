#include "cli.hpp"
#include "report.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace crn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string net(const char* name) { return std::string(CRN_NETWORKS_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents)
{
  const auto path = std::string(CRN_TEST_TMP) + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_SUITE("cli")
{
  TEST_CASE("siphons")
  {
    const auto r = run({"siphons", net("ex1_1.crn")});
    CHECK(r.code == 0);
    CHECK(r.out == "A B E\nA C E\nC D E\n");
    CHECK(run({"siphons", "--brute-force", net("ex1_1.crn")}).out == r.out);
  }

  TEST_CASE("counting the chain")
  {
    const auto r = run({"siphons", "--count-only", "--histogram", net("chain50.crn")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("total 1221537\n", 0) == 0);
    CHECK(r.out.find("size 25: 26\n") != std::string::npos);
    CHECK(r.out.find("size 33: 18\n") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);
  }

  TEST_CASE("analyze emits verdicts as JSON")
  {
    const auto r = run({"analyze", "--c0", "1,1,1,1,1", net("ex1_1.crn")});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["schema_version"] == cli::kSchemaVersion);
    std::vector<std::string> relevant, c0_relevant;
    for (const auto& s : j["minimal_siphons"]) {
      std::string members;
      for (const auto& m : s["members"]) members += m.get<std::string>();
      if (s["relevant"]) relevant.push_back(members);
      if (s["c0_relevant"]) c0_relevant.push_back(members);
    }
    CHECK(relevant == std::vector<std::string>{"ABE", "ACE"});
    CHECK(c0_relevant == std::vector<std::string>{"ACE"});
    CHECK(j["minimal_siphons"][2]["witnesses"]["conservation"] == nlohmann::ordered_json({"0", "0", "1", "1", "1"}));
  }

  TEST_CASE("output is deterministic")
  {
    const std::vector<std::string> args{"analyze", "--components", "--c0", "1,1,1,1,1,1", net("ex1_2.crn")};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> inv{"invariance-check", "--siphon", "I,R", "--seed", "7", net("ex1_2.crn")};
    CHECK(run(inv).out == run(inv).out);
  }

  TEST_CASE("reports survive a JSON round trip")
  {
    for (const char* name : {"ex1_1.crn", "ex1_2.crn", "ex1_3.crn"}) {
      const auto n = test::load(name);
      AnalysisOptions opts;
      opts.c0 = test::constant(n.num_species(), 1);
      opts.omega = {test::constant(n.num_species(), 2)};
      opts.components = connectivity(n).components_strongly_connected;
      const auto report = analyze(n, opts);
      CHECK(report.elapsed_ms.has_value());
      const auto text = cli::to_json(report).dump();
      CHECK(cli::report_from_json(nlohmann::ordered_json::parse(text)) == report);
    }
    CHECK_THROWS_AS(cli::report_from_json(nlohmann::ordered_json::parse("{}")), std::invalid_argument);
  }

  TEST_CASE("text format")
  {
    const auto r = run({"analyze", "--format", "text", net("ex1_3.crn")});
    CHECK(r.code == 0);
    CHECK(r.out.find("certificate: ") != std::string::npos);
    CHECK(run({"analyze", "--format", "xml", net("ex1_3.crn")}).code == 1);
  }

  TEST_CASE("initial points")
  {
    const auto a = run({"relevance", "--c0", "1/10,1/10,1,1/10,1/10", net("ex1_1.crn")});
    const auto b = run({"relevance", "--assign", "A=1/10", "--assign", "B=1/10", "--assign", "C=1", "--assign", "D=1/10",
                        "--assign", "E=1/10", net("ex1_1.crn")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("A B E  c0-relevant") != std::string::npos);
    CHECK(run({"relevance", "--c0", "0.1,1,1,1,1", net("ex1_1.crn")}).code == 1);
    CHECK(run({"relevance", "--c0", "1,1,1", net("ex1_1.crn")}).code == 1);
    CHECK(run({"relevance", "--assign", "A=1", net("ex1_1.crn")}).code == 1);
  }

  TEST_CASE("omega files")
  {
    const auto r = run({"relevance", "--omega", net("ex4_2_omega.txt"), net("ex1_1.crn")});
    CHECK(r.code == 0);
    CHECK(r.out.find("A C E  c0-relevant  sample 1") != std::string::npos);
    CHECK(r.out.find("C D E  not c0-relevant") != std::string::npos);
  }

  TEST_CASE("facets, vertices and face dimensions")
  {
    const auto f = run({"facets", net("ex1_1.crn")});
    CHECK(f.out.find("complement C D E") != std::string::npos);
    const auto v = run({"vertices", "--c0", "1,1,1,1,1", net("ex1_1.crn")});
    CHECK(v.out == "E\nA C\nA D\nB C\nB D\n");
    CHECK(run({"face-dim", "--c0", "1,1,1,1,1", "--siphon", "A,C,E", net("ex1_1.crn")}).out == "0\n");
    CHECK(run({"face-dim", "--c0", "1,1,1,1,1", "--siphon", "A,B,E", net("ex1_1.crn")}).out == "empty\n");
    CHECK(run({"face-dim", "--c0", "1,1,1,1,1", "--siphon", "E", net("ex1_1.crn")}).code == 1);
  }

  TEST_CASE("ode and invariance checks")
  {
    const auto kappa = temp_file("xy.kappa", "k1 = 3\n");
    CHECK(run({"ode", "--kappa", kappa, net("x_to_y.crn")}).out == "dX/dt = -3*X\ndY/dt = 3*X\n");
    CHECK(run({"ode", net("x_to_y.crn")}).out == "dX/dt = -k1*X\ndY/dt = k1*X\n");
    const auto pass = run({"invariance-check", "--siphon", "A,B,E", net("ex1_1.crn")});
    CHECK(pass.code == 0);
    CHECK(pass.out.rfind("pass", 0) == 0);
    CHECK(run({"invariance-check", "--steady", "--siphon", "E,X", net("ex1_3.crn")}).code == 1);
  }

  TEST_CASE("computer algebra export")
  {
    const auto jg = run({"export-cas", "--flavor", "JG", net("ex1_2.crn")});
    CHECK(jg.out.find("ideal(S*E-Q, Q-E*P, Q*I-R)") != std::string::npos);
    const auto mg = run({"export-cas", "--flavor", "MG", net("ex1_1.crn")});
    CHECK(mg.out.find("ideal(A^2*C, A*D, E, B*C)") != std::string::npos);
    const auto ig = run({"export-cas", net("ex1_1.crn")});
    CHECK(ig.out.find("A^2*C*(A*D-A^2*C)") != std::string::npos);
    CHECK(run({"export-cas", "--flavor", "MG", net("ex1_2.crn")}).code == 1);
    CHECK(run({"export-cas", "--flavor", "XX", net("ex1_2.crn")}).code == 1);
  }

  TEST_CASE("exit codes")
  {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"siphons", "/nonexistent.crn"}).code == 2);
    const auto bad = temp_file("bad.crn", "A + -> B\n");
    const auto r = run({"parse", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find(":1:") != std::string::npos);
    CHECK(run({"--budget-ms", "1", "siphons", "--count-only", net("chain50.crn")}).code == 3);
  }

  TEST_CASE("parse echoes canonical text")
  {
    const auto r = run({"parse", net("ex1_2.crn")});
    CHECK(r.code == 0);
    CHECK(parse_network(r.out) == test::load("ex1_2.crn"));
  }
}
