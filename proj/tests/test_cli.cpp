#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "woi/cli.hpp"
#include "woi/json_io.hpp"

using namespace woi;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parse_out(const RunResult& r) { return Json::parse(r.out); }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string("cli_test_tmp_") + std::to_string(counter++) + ".json";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("edge-ideal reports generators for a family graph") {
  RunResult r = run_cli({"edge-ideal", "--family", "path", "--length", "3",
                         "--weights", "1,2,1,1"});
  REQUIRE(r.code == 0);
  Json j = parse_out(r);
  CHECK(j["ideal"]["text"] == "(x0*x1^2, x1*x2, x2*x3)");
  CHECK(j["graph"]["vertices"].size() == 4);
}

TEST_CASE("edge-ideal loads graphs from disk") {
  TempFile f(R"({"vertices":[{"name":"a","weight":1},{"name":"b","weight":3}],
                 "edges":[["a","b"]]})");
  RunResult r = run_cli({"edge-ideal", "--graph", f.path});
  REQUIRE(r.code == 0);
  CHECK(parse_out(r)["ideal"]["text"] == "(a*b^3)");
  RunResult missing = run_cli({"edge-ideal", "--graph", "no_such_file.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);
}

TEST_CASE("covers subcommand lists the census") {
  RunResult r = run_cli({"covers", "--family", "cycle", "--n", "4",
                         "--weights", "1,2,1,1"});
  REQUIRE(r.code == 0);
  Json j = parse_out(r);
  CHECK(j["count"] == 3);
  CHECK(j["covers"][2]["l3"] == Json::array({"x3"}));
  CHECK(j["total_cover_strong"] == false);
  CHECK(j["minimal_strong_property"] == false);

  RunResult all = run_cli({"covers", "--family", "cycle", "--n", "4", "--all"});
  CHECK(parse_out(all)["count"] == 7);
}

TEST_CASE("compare exits nonzero exactly when powers differ") {
  RunResult differ = run_cli({"compare", "--family", "path", "--length", "3",
                              "--weights", "1,2,1,1", "-s", "2"});
  CHECK(differ.code == 1);
  Json j = parse_out(differ);
  CHECK(j["equal"] == false);
  CHECK(j["witness"] == "x0*x1^2*x2");
  CHECK(j["methods_agree"] == true);

  RunResult same = run_cli({"compare", "--family", "star", "--n", "3", "-s",
                            "2", "--weights", "1,2,3,1"});
  CHECK(same.code == 0);
  CHECK(parse_out(same)["equal"] == true);
  CHECK(parse_out(same)["witness"].is_null());
}

TEST_CASE("symbolic honors the oracle cross-check flag") {
  RunResult r = run_cli({"symbolic", "--family", "cycle", "--n", "4",
                         "--weights", "1,2,1,1", "-s", "2", "--check-oracle"});
  REQUIRE(r.code == 0);
  CHECK(parse_out(r)["oracle_agrees"] == true);
}

TEST_CASE("phi and clamp checks pass on a weighted cycle") {
  RunResult phi = run_cli({"phi-check", "--family", "cycle", "--n", "4",
                           "--weights", "1,3,1,2", "-s", "2"});
  CHECK(phi.code == 0);
  CHECK(parse_out(phi)["commutes"] == true);
  RunResult clamp = run_cli({"clamp-check", "--family", "cycle", "--n", "4",
                             "--weights", "1,3,1,2", "-s", "2"});
  CHECK(clamp.code == 0);
  CHECK(parse_out(clamp)["structure_preserved"] == true);
}

TEST_CASE("family subcommand emits a verdict") {
  RunResult r = run_cli({"family", "odd-cycle", "--family", "cycle", "--n",
                         "5", "--weights", "2,2,2,2,2", "--s-max", "3"});
  REQUIRE(r.code == 0);
  Json j = parse_out(r);
  CHECK(j["family"] == "odd-cycle");
  CHECK(j["hypothesis"] == true);
  CHECK(j["outcome"] == "satisfied");
  CHECK(j["equal_by_s"] == Json::array({true, true}));
}

TEST_CASE("verify subcommand runs a small sweep") {
  RunResult r = run_cli({"verify", "star", "--orders", "3", "--samples", "4",
                         "--s-max", "2", "--seed", "7"});
  REQUIRE(r.code == 0);
  Json j = parse_out(r);
  CHECK(j["family"] == "star");
  CHECK(j["summary"]["total"] == 4);
  CHECK(j["summary"]["violated"] == 0);
  CHECK(!j.contains("instances"));
  RunResult with = run_cli({"verify", "star", "--orders", "3", "--samples",
                            "2", "--s-max", "2", "--seed", "7", "--instances"});
  CHECK(parse_out(with)["instances"].size() == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"edge-ideal"}).code == 2);  // no graph given
  CHECK(run_cli({"compare", "--family", "star", "--n", "3", "-s", "9"}).code ==
        2);  // power over the cap
  CHECK(run_cli({"edge-ideal", "--family", "cycle"}).code == 2);  // missing --n
  CHECK(run_cli({"edge-ideal", "--family", "cycle", "--n", "4", "--weights",
                 "1,2"})
            .code == 2);  // wrong weight count
  CHECK(run_cli({"verify", "unknown-sweep"}).code == 2);
}

TEST_CASE("help is a success") {
  RunResult top = run_cli({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("woi") != std::string::npos);
  RunResult sub = run_cli({"compare", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--power") != std::string::npos);
}

TEST_CASE("reports are byte-stable unless timing is requested") {
  std::vector<std::string> args{"symbolic", "--family", "cycle", "--n", "5",
                                "--weights", "1,2,1,1,2", "-s", "2"};
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
  args.push_back("--timing");
  RunResult timed = run_cli(args);
  CHECK(parse_out(timed).contains("elapsed_ms"));
}

TEST_CASE("source weight normalization warns on stderr") {
  TempFile f(R"({"vertices":[{"name":"a","weight":5},{"name":"b","weight":1}],
                 "edges":[["a","b"]]})");
  RunResult r = run_cli({"edge-ideal", "--graph", f.path});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(parse_out(r)["ideal"]["text"] == "(a*b)");
}

TEST_CASE("graph json round-trips through the io helpers") {
  WeightedOrientedGraph g({"x1", "x2", "x3"}, {1, 2, 1},
                          {{"x1", "x2"}, {"x3", "x2"}});
  WeightedOrientedGraph back = graph_from_json(graph_to_json(g));
  CHECK(back.weights() == g.weights());
  CHECK(back.edges() == g.edges());
  CHECK(back.universe()->names() == g.universe()->names());

  MonomialIdeal ideal = edge_ideal(g);
  CHECK(ideal_from_json(ideal_to_json(ideal)) == ideal);
}
