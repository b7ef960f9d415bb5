#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gkm/cli.hpp"
#include "gkm/json_io.hpp"
#include "gkm/moment_graphs.hpp"
#include "gkm/schubert.hpp"
#include "support.hpp"

using namespace gkm;
namespace fs = std::filesystem;
using json_io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gkm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

/// A scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gkm_cli_test_" + std::to_string(test::seed()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

const char* kK4 = R"J({
  "ring": {"kind": "integers"},
  "vertices": ["a", "b", "c", "d"],
  "edges": [
    {"u": "a", "v": "c", "label": "4"}, {"u": "a", "v": "b", "label": "8"},
    {"u": "a", "v": "d", "label": "6"}, {"u": "b", "v": "c", "label": "6"},
    {"u": "b", "v": "d", "label": "7"}, {"u": "c", "v": "d", "label": "3"}
  ]
})J";

const char* kPath = R"J({
  "ring": {"kind": "integers"},
  "vertices": ["a", "x", "a'"],
  "edges": [{"u": "a", "v": "x", "label": "2"}, {"u": "x", "v": "a'", "label": "3"}]
})J";

std::vector<long> leading_values(const Json& basis) {
  std::vector<long> out;
  for (const auto& e : basis.at("elements"))
    out.push_back(std::stol(e.at("values").at(e.at("leading").get<std::string>()).get<std::string>()));
  return out;
}

}  // namespace

TEST_CASE("gen emits graphs that re-parse") {
  struct Case {
    std::vector<std::string> args;
    Graph expected;
  };
  std::vector<Case> cases = {
      {{"gen", "pn", "--n", "3"}, projective_space(3)},
      {{"gen", "alfeld", "--n", "2"}, alfeld_dual(2)},
      {{"gen", "bruhat", "--n", "3"}, bruhat_graph(3)},
      {{"gen", "hessenberg", "--h", "2,3,3"}, hessenberg_graph({2, 3, 3})},
      {{"gen", "grassmann", "--k", "2", "--n", "4"}, johnson_grassmannian(2, 4)},
      {{"gen", "pn", "--n", "3", "--power", "1"}, power_labels(projective_space(3), 1)},
  };
  for (const auto& c : cases) {
    auto r = run_cli(c.args);
    REQUIRE(r.code == 0);
    CHECK(*json_io::graph_from_json(json_io::parse(r.out)) == c.expected);
  }
  auto p = json_io::graph_from_json(json_io::parse(run_cli({"gen", "pn", "--n", "3"}).out));
  CHECK(p->edge(*p->find_edge(0, 2)).label.to_string() == "t3 - t1");

  auto truncated = run_cli({"gen", "pn", "--n", "3", "--degree", "2"});
  REQUIRE(truncated.code == 0);
  CHECK(json_io::graph_from_json(json_io::parse(truncated.out))->ring()->kind() == Ring::Kind::truncated);
}

TEST_CASE("gen random is reproducible from its seed") {
  auto a = run_cli({"gen", "random", "--vertices", "6", "--seed", "7"});
  auto b = run_cli({"gen", "random", "--vertices", "6", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto g = json_io::graph_from_json(json_io::parse(a.out));
  CHECK(g->num_vertices() == 6);
  CHECK(g->is_connected());
  auto m = run_cli({"gen", "random", "--vertices", "4", "--modulus", "6", "--max-label", "5", "--seed", "1"});
  REQUIRE(m.code == 0);
  CHECK(json_io::graph_from_json(json_io::parse(m.out))->ring()->kind() == Ring::Kind::integers_mod);
}

TEST_CASE("gen writes atomically to --out") {
  TempDir dir;
  auto path = dir.file("g.json");
  auto r = run_cli({"gen", "bruhat", "--n", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(*json_io::graph_from_json(json_io::load(path)) == bruhat_graph(3));
  CHECK_FALSE(fs::exists(path + ".tmp"));
}

TEST_CASE("verify") {
  TempDir dir;
  auto graph = dir.write("p2.json", run_cli({"gen", "pn", "--n", "3"}).out);
  auto good = dir.write("good.json", R"J({"graph": "p2.json", "values": {"1": "0", "2": "0", "3": "(t3-t2)(t3-t1)"}})J");
  auto bad = dir.write("bad.json", R"J({"graph": "p2.json", "values": {"1": "0", "2": "t3-t1", "3": "t2-t1"}})J");
  auto missing = dir.write("missing.json", R"J({"values": {"1": "0", "2": "0"}})J");
  auto r = run_cli({"verify", graph, good});
  CHECK(r.code == 0);
  CHECK(r.out.find("spline") == 0);
  auto f = run_cli({"verify", graph, bad});
  CHECK(f.code == 1);
  CHECK(f.out.find("not a spline") != std::string::npos);
  CHECK(f.out.find("(1, 3)") != std::string::npos);
  CHECK(run_cli({"verify", graph, missing}).code == 2);
}

TEST_CASE("basis over Z with a trace") {
  TempDir dir;
  auto graph = dir.write("k4.json", kK4);
  auto r = run_cli({"basis", graph, "--trace"});
  REQUIRE(r.code == 0);
  auto doc = json_io::parse(r.out);
  CHECK(leading_values(doc) == std::vector<long>{1, 24, 12, 42});
  const auto& trace = doc.at("trace");
  REQUIRE(trace.size() == 3);
  CHECK(trace[0].at("eliminated") == "d");
  std::set<std::string> sums;
  for (const auto& e : trace[0].at("multigraph"))
    if (e.contains("sum_of"))
      sums.insert(e.at("sum_of")[0].get<std::string>() + "+" + e.at("sum_of")[1].get<std::string>() + "=" +
                  e.at("label").get<std::string>());
  CHECK(sums == std::set<std::string>{"6+7=1", "6+3=3", "7+3=1"});
  std::multiset<std::string> collapsed;
  for (const auto& e : trace[0].at("collapsed")) collapsed.insert(e.at("label").get<std::string>());
  CHECK(collapsed == std::multiset<std::string>{"12", "8", "6"});
  CHECK(trace[1].at("eliminated") == "c");
  CHECK(trace[2].at("tree")[0].at("label") == "24");

  // The basis document feeds straight into mult.
  auto basis = dir.write("basis.json", r.out);
  auto table = run_cli({"mult", graph, basis});
  REQUIRE(table.code == 0);
  CHECK(json_io::parse(table.out).at("pairs").size() == 10);
}

TEST_CASE("basis orientations") {
  TempDir dir;
  auto graph = dir.write("k4.json", kK4);
  auto reversed = run_cli({"basis", graph, "--ranks", "3,2,1,0"});
  REQUIRE(reversed.code == 0);
  auto doc = json_io::parse(reversed.out);
  CHECK(doc.at("elements")[0].at("leading") == "d");
  CHECK(run_cli({"basis", graph, "--ranks", "1,2"}).code == 2);
  CHECK(run_cli({"basis", graph, "--orientation", "sideways"}).code == 2);

  auto bruhat = dir.write("b3.json", run_cli({"gen", "bruhat", "--n", "3"}).out);
  auto b = run_cli({"basis", bruhat});
  REQUIRE(b.code == 0);
  auto bd = json_io::parse(b.out);
  auto g = json_io::graph_from_json(bd.at("graph"));
  auto fb = json_io::basis_from_json(bd, g);
  for (std::size_t k = 0; k < fb.size(); ++k) CHECK(fb.elements[k] == schubert_class(g, g->permutation(fb.leading[k])));

  auto pn = dir.write("p2.json", run_cli({"gen", "pn", "--n", "3"}).out);
  CHECK(run_cli({"basis", pn}).code == 2);
}

TEST_CASE("billey") {
  auto r = run_cli({"billey", "--n", "3", "--w", "(13)", "--v", "(23)"});
  CHECK(r.code == 0);
  CHECK(r.out == "t3 - t1\n");
  CHECK(run_cli({"billey", "--n", "3", "--w", "(13)", "--v", "(23)", "--word", "2,1,2"}).out == "t3 - t1\n");
  CHECK(run_cli({"billey", "--n", "3", "--w", "(13)", "--v", "(23)", "--word", "1,2"}).code == 2);
  CHECK(run_cli({"billey", "--n", "3", "--w", "(14)", "--v", "e"}).code == 2);
}

TEST_CASE("act") {
  TempDir dir;
  dir.write("b3.json", run_cli({"gen", "bruhat", "--n", "3"}).out);
  auto spline = dir.write("s23.json", R"J({"graph": "b3.json", "values": {
      "123": "0", "213": "0", "132": "t3-t2", "231": "t3-t1", "312": "t3-t2", "321": "t3-t1"}})J");
  auto r = run_cli({"act", "right", "--perm", "(23)", spline});
  REQUIRE(r.code == 0);
  auto doc = json_io::parse(r.out);
  auto g = json_io::graph_from_json(json_io::load(dir.file("b3.json")));
  auto moved = json_io::spline_from_json(doc.at("values"), g);
  CHECK(moved.values() == test::parse_all(g->ring(), {"t3-t2", "t3-t1", "0", "0", "t3-t1", "t3-t2"}));
  auto l = run_cli({"act", "left", "--perm", "(23)", spline});
  REQUIRE(l.code == 0);
  CHECK(json_io::spline_from_json(json_io::parse(l.out).at("values"), g).values() ==
        test::parse_all(g->ring(), {"t2-t3", "t2-t3", "0", "t2-t1", "0", "t2-t1"}));
  CHECK(run_cli({"act", "up", "--perm", "(23)", spline}).code == 2);
}

TEST_CASE("extend") {
  TempDir dir;
  auto graph = dir.write("path.json", kPath);
  auto ok = dir.write("ok.json", R"J({"values": {"a": "0", "a'": "1"}})J");
  auto r = run_cli({"extend", graph, ok});
  REQUIRE(r.code == 0);
  CHECK(json_io::parse(r.out).at("values").at("x") == "4");

  auto parity = dir.write("parity.json", R"J({
    "ring": {"kind": "integers"}, "vertices": ["a", "x", "b"],
    "edges": [{"u": "a", "v": "x", "label": "2"}, {"u": "x", "v": "b", "label": "2"}]})J");
  auto conflict = dir.write("conflict.json", R"J({"values": {"a": "0", "x": null, "b": "1"}})J");
  auto f = run_cli({"extend", parity, conflict});
  CHECK(f.code == 1);
  CHECK(f.out.find("no extension") == 0);
  CHECK(f.out.find("conflict") != std::string::npos);
}

TEST_CASE("oracles") {
  TempDir dir;
  auto graph = dir.write("k4.json", kK4);
  auto h = run_cli({"oracle", "hnf", graph});
  REQUIRE(h.code == 0);
  CHECK(leading_values(json_io::parse(h.out)) == std::vector<long>{1, 24, 12, 42});

  auto zm = dir.write("zm.json", R"J({"ring": {"kind": "integers-mod", "modulus": "4"}, "vertices": ["a", "b"],
    "edges": [{"u": "a", "v": "b", "label": "2"}]})J");
  auto z = run_cli({"oracle", "zmod-rank", zm});
  REQUIRE(z.code == 0);
  CHECK(json_io::parse(z.out).at("rank") == 2);
  CHECK(run_cli({"oracle", "zmod-rank", zm, "--max-size", "3"}).code == 2);
  CHECK(run_cli({"oracle", "zmod-rank", graph}).code == 2);
}

TEST_CASE("exit codes for usage and input errors") {
  TempDir dir;
  auto broken = dir.write("broken.json", "{\"ring\": ");
  auto loop = dir.write("loop.json", R"J({"ring": {"kind": "integers"}, "vertices": ["a"],
    "edges": [{"u": "a", "v": "a", "label": "2"}]})J");
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"gen", "pn"}).code == 2);
  CHECK(run_cli({"gen", "pn", "--n", "1"}).code == 2);
  CHECK(run_cli({"gen", "bruhat", "--n", "5", "--max-size", "100"}).code == 2);
  CHECK(run_cli({"gen", "hessenberg", "--h", "3,2,3"}).code == 2);
  CHECK(run_cli({"verify", dir.file("absent.json"), dir.file("absent.json")}).code == 2);
  auto parse = run_cli({"basis", broken});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line") != std::string::npos);
  auto invalid = run_cli({"basis", loop});
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("loop") != std::string::npos);
  auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("basis") != std::string::npos);
  CHECK(run_cli({"gen", "hessenberg", "--help"}).code == 0);
}
