#include "gkm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <random>

#include "gkm/basis_algebra.hpp"
#include "gkm/errors.hpp"
#include "gkm/json_io.hpp"
#include "gkm/moment_graphs.hpp"
#include "gkm/pid_basis.hpp"
#include "gkm/schubert.hpp"

namespace gkm::cli {

namespace {

namespace fs = std::filesystem;
using json_io::Json;

struct GenOptions {
  std::size_t n = 3;
  std::size_t k = 2;
  std::vector<std::size_t> h;
  unsigned power = 0;
  std::optional<unsigned> degree;
  std::size_t max_size = kDefaultMaxVertices;
  std::string out;
  // random graphs
  std::size_t vertices = 5;
  double edge_probability = 0.5;
  unsigned max_label = 12;
  std::optional<std::string> modulus;
  std::uint64_t seed = 1;
};

struct Options {
  std::string kind;
  GenOptions gen;
  std::string graph_path;
  std::string doc_path;
  std::string orientation = "auto";
  std::vector<long long> ranks;
  bool trace = false;
  std::string out;
  std::size_t n = 3;
  std::string w, v, perm, side;
  std::vector<std::size_t> word;
  std::size_t max_size = 1'000'000;
};

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << doc.dump(2) << '\n';
  else
    json_io::save_atomic(path, doc);
}

Graph over_truncated(const Graph& g, unsigned degree) {
  if (g.ring()->kind() != Ring::Kind::polynomial) throw UnsupportedRing("--degree needs a polynomial ring");
  const RingPtr ring = Ring::truncated(g.ring()->variables(), degree);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, ring->from_polynomial(e.label.polynomial())});
  std::optional<std::vector<Permutation>> perms;
  if (g.has_permutations()) perms = g.permutations();
  return Graph::build(ring, g.vertices(), std::move(edges), std::move(perms));
}

Graph random_graph(const GenOptions& o) {
  if (o.vertices < 1) throw ValidationError({"--vertices must be positive"});
  if (o.max_label < 1) throw ValidationError({"--max-label must be positive"});
  std::mt19937_64 rng(o.seed);
  const RingPtr ring = o.modulus ? Ring::integers_mod(Integer(*o.modulus)) : Ring::integers();
  std::uniform_int_distribution<unsigned> label(1, o.max_label);
  std::bernoulli_distribution extra(o.edge_probability);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < o.vertices; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(o.vertices, std::vector<bool>(o.vertices, false));
  // A random spanning tree keeps the graph connected.
  for (std::size_t i = 1; i < o.vertices; ++i) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    edges.push_back({j, i, ring->from_integer(label(rng))});
    used[j][i] = true;
  }
  for (std::size_t i = 0; i < o.vertices; ++i)
    for (std::size_t j = i + 1; j < o.vertices; ++j)
      if (!used[i][j] && extra(rng)) edges.push_back({i, j, ring->from_integer(label(rng))});
  return Graph::build(ring, std::move(names), std::move(edges));
}

int run_gen(const Options& o, std::ostream& out) {
  const GenOptions& g = o.gen;
  Graph graph = [&]() {
    if (o.kind == "pn") return projective_space(g.n);
    if (o.kind == "alfeld") return alfeld_dual(g.n);
    if (o.kind == "bruhat") return bruhat_graph(g.n, g.max_size);
    if (o.kind == "hessenberg") return hessenberg_graph(g.h, g.max_size);
    if (o.kind == "grassmann") return johnson_grassmannian(g.k, g.n, g.max_size);
    return random_graph(g);
  }();
  if (g.power > 0) graph = power_labels(graph, g.power);
  if (g.degree) graph = over_truncated(graph, *g.degree);
  emit(json_io::graph_to_json(graph), g.out, out);
  return kSuccess;
}

/// Longest-path depth in a DAG, which separates the ends of every edge.
std::vector<long long> depth_ranks(const DirectedGraph& d) {
  const std::size_t n = d.graph().num_vertices();
  std::vector<long long> depth(n, 0);
  for (std::size_t round = 0; round < n; ++round)
    for (std::size_t e = 0; e < d.graph().num_edges(); ++e)
      depth[d.head(e)] = std::max(depth[d.head(e)], depth[d.tail(e)] + 1);
  return depth;
}

std::vector<long long> choose_ranks(const Options& o, const Json& doc, const GraphPtr& g) {
  if (!o.ranks.empty()) {
    if (o.ranks.size() != g->num_vertices()) throw ValidationError({"--ranks must give one rank per vertex"});
    return o.ranks;
  }
  std::string how = o.orientation;
  if (how == "auto") {
    if (auto d = json_io::direction_from_json(doc, g)) return depth_ranks(*d);
    how = g->has_permutations() ? "length" : "index";
  }
  if (how == "length") return length_ranks(*g);
  if (how == "index") return index_ranks(*g);
  throw ValidationError({"unknown orientation '" + how + "' (use index, length or --ranks)"});
}

bool is_full_bruhat_graph(const Graph& g) {
  if (!g.has_permutations() || g.num_vertices() == 0) return false;
  const std::size_t n = g.permutation(0).size();
  const Graph reference = bruhat_graph(n, g.num_vertices());
  if (reference.num_vertices() != g.num_vertices() || reference.num_edges() != g.num_edges()) return false;
  for (const Edge& e : reference.edges()) {
    const auto a = g.vertex_of(reference.permutation(e.u));
    const auto b = g.vertex_of(reference.permutation(e.v));
    if (!a || !b) return false;
    const auto mine = g.find_edge(*a, *b);
    if (!mine || !(g.edge(*mine).label == e.label)) return false;
  }
  return true;
}

FlowUpBasis schubert_flow_up(const GraphPtr& g) {
  std::vector<VertexId> order(g->num_vertices());
  for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g->permutation(a).length() < g->permutation(b).length(); });
  std::vector<Spline> elements;
  for (VertexId v : order) elements.push_back(schubert_class(g, g->permutation(v)));
  return make_flow_up_basis(g, std::move(order), std::move(elements));
}

int run_basis(const Options& o, std::ostream& out) {
  const Json doc = json_io::load(o.graph_path);
  const GraphPtr g = json_io::graph_from_json(doc);
  Json graph_doc = json_io::graph_to_json(*g);
  Json result;
  if (g->ring()->kind() == Ring::Kind::polynomial && !g->ring()->is_univariate()) {
    if (!is_full_bruhat_graph(*g))
      throw UnsupportedRing("bases over multivariate rings are offered for Bruhat graphs only");
    result = json_io::basis_to_json(schubert_flow_up(g), graph_doc);
    if (o.trace) result["trace"] = Json::array();
  } else {
    const FlowUpResult r = flow_up_basis(g, choose_ranks(o, doc, g));
    result = json_io::basis_to_json(r.basis, graph_doc);
    if (o.trace) result["trace"] = json_io::trace_to_json(r.trace);
  }
  emit(result, o.out, out);
  return kSuccess;
}

int run_verify(const Options& o, std::ostream& out) {
  const GraphPtr g = json_io::graph_from_json(json_io::load(o.graph_path));
  const Json doc = json_io::load(o.doc_path);
  const PartialAssignment partial = json_io::partial_from_json(doc.at("values"), *g);
  std::vector<Element> values;
  for (VertexId v = 0; v < g->num_vertices(); ++v) {
    if (!partial[v]) throw ParseError("field 'values." + g->name(v) + "': missing vertex value");
    values.push_back(*partial[v]);
  }
  const Verification check = verify(*g, values);
  if (check.ok) {
    out << "spline: all " << g->num_edges() << " edge conditions hold\n";
    return kSuccess;
  }
  out << "not a spline: " << check.violations.size() << " edge condition(s) fail\n";
  for (const auto& bad : check.violations) {
    const Edge& e = g->edge(bad.edge);
    out << "  edge " << bad.edge << " (" << g->name(e.u) << ", " << g->name(e.v) << "): difference "
        << bad.difference.to_string() << " is not in <" << e.label.to_string() << ">\n";
  }
  return kNegative;
}

int run_billey(const Options& o, std::ostream& out) {
  const RingPtr ring = Ring::polynomial("t", o.n);
  const Permutation w = Permutation::parse(o.w, o.n);
  const Permutation v = Permutation::parse(o.v, o.n);
  ReducedWord word = o.word.empty() ? reduced_word(w) : ReducedWord(o.word);
  if (word_product(o.n, word) != w) throw ValidationError({"--word does not multiply to w"});
  out << billey(ring, o.n, word, v).to_string() << '\n';
  return kSuccess;
}

int run_act(const Options& o, std::ostream& out) {
  const Json doc = json_io::load(o.doc_path);
  const GraphPtr g = json_io::graph_reference(doc, fs::path(o.doc_path).parent_path());
  const Spline p = json_io::spline_from_json(doc.at("values"), g);
  const std::size_t n = g->has_permutations() && g->num_vertices() ? g->permutation(0).size() : 0;
  const Permutation perm = Permutation::parse(o.perm, n);
  const Spline moved = o.side == "left" ? left_action(perm, p) : right_action(perm, p);
  emit(json_io::spline_to_json(moved, doc.at("graph")), o.out, out);
  return kSuccess;
}

std::string describe(const Graph& g, const ExtensionConstraint& c) {
  return "x(" + g.name(c.unknown) + ") = " + c.residue.to_string() + " mod <" + c.modulus.to_string() + "> from '" +
         g.name(c.neighbor) + "'";
}

int run_extend(const Options& o, std::ostream& out) {
  const GraphPtr g = json_io::graph_from_json(json_io::load(o.graph_path));
  const Json doc = json_io::load(o.doc_path);
  const ExtensionResult r = extend(g, json_io::partial_from_json(doc.at("values"), *g));
  if (r.spline) {
    emit(json_io::spline_to_json(*r.spline, json_io::graph_to_json(*g)), o.out, out);
    return kSuccess;
  }
  out << "no extension: " << r.failure->reason << '\n';
  if (r.failure->conflict) {
    out << "  conflict: " << describe(*g, r.failure->conflict->first) << '\n';
    out << "       and: " << describe(*g, r.failure->conflict->second) << '\n';
  }
  return kNegative;
}

int run_mult(const Options& o, std::ostream& out) {
  const GraphPtr g = json_io::graph_from_json(json_io::load(o.graph_path));
  const FlowUpBasis b = json_io::basis_from_json(json_io::load(o.doc_path), g);
  emit(json_io::table_to_json(structure_table(b)), o.out, out);
  return kSuccess;
}

int run_oracle(const Options& o, std::ostream& out) {
  const Json doc = json_io::load(o.graph_path);
  const GraphPtr g = json_io::graph_from_json(doc);
  if (o.kind == "hnf") {
    const FlowUpBasis b = hnf_spline_lattice(g, choose_ranks(o, doc, g));
    emit(json_io::basis_to_json(b, json_io::graph_to_json(*g)), o.out, out);
  } else {
    emit(Json{{"rank", zmod_rank(*g, o.max_size)}, {"vertices", g->num_vertices()}}, o.out, out);
  }
  return kSuccess;
}

void add_orientation(CLI::App* app, Options& o) {
  app->add_option("--orientation", o.orientation, "index, length, or auto (direction member, else length/index)")
      ->check(CLI::IsMember({"auto", "index", "length"}));
  app->add_option("--ranks", o.ranks, "Explicit vertex ranks, one per vertex")->delimiter(',');
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized splines on edge-labeled graphs"};
  app.name("gkm");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Emit a graph document");
  gen->require_subcommand(1);
  auto gen_common = [&](CLI::App* sub) {
    sub->add_option("--power", o.gen.power, "Raise every label to the power r+1");
    sub->add_option("--degree", o.gen.degree, "Work modulo monomials of degree above d");
    sub->add_option("--max-size", o.gen.max_size, "Vertex bound for the generator");
    sub->add_option("--out", o.gen.out, "Write to a file instead of stdout");
    sub->callback([&o, sub] { o.kind = sub->get_name(); });
  };
  auto* pn = gen->add_subcommand("pn", "Moment graph of projective space P^{n-1}");
  pn->add_option("--n", o.gen.n)->required();
  auto* alfeld = gen->add_subcommand("alfeld", "Dual graph of the Alfeld split of an n-simplex");
  alfeld->add_option("--n", o.gen.n)->required();
  auto* bruhat = gen->add_subcommand("bruhat", "Bruhat graph of S_n");
  bruhat->add_option("--n", o.gen.n)->required();
  auto* hess = gen->add_subcommand("hessenberg", "Regular semisimple Hessenberg moment graph");
  hess->set_help_flag("--help", "Print this help message and exit");
  hess->add_option("--h", o.gen.h, "Hessenberg function, e.g. 2,3,3")->required()->delimiter(',');
  auto* grass = gen->add_subcommand("grassmann", "Johnson graph of k-subsets of {1..n}");
  grass->add_option("--k", o.gen.k)->required();
  grass->add_option("--n", o.gen.n)->required();
  auto* rnd = gen->add_subcommand("random", "Random connected graph over Z or Z/m");
  rnd->add_option("--vertices", o.gen.vertices);
  rnd->add_option("--edge-prob", o.gen.edge_probability)->check(CLI::Range(0.0, 1.0));
  rnd->add_option("--max-label", o.gen.max_label);
  rnd->add_option("--modulus", o.gen.modulus, "Work over Z/m");
  rnd->add_option("--seed", o.gen.seed);
  for (auto* sub : {pn, alfeld, bruhat, hess, grass, rnd}) gen_common(sub);

  auto* verify_cmd = app.add_subcommand("verify", "Check the edge conditions of an assignment");
  verify_cmd->add_option("graph", o.graph_path)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("spline", o.doc_path)->required()->check(CLI::ExistingFile);

  auto* basis_cmd = app.add_subcommand("basis", "Compute a flow-up basis");
  basis_cmd->add_option("graph", o.graph_path)->required()->check(CLI::ExistingFile);
  add_orientation(basis_cmd, o);
  basis_cmd->add_flag("--trace", o.trace, "Include the elimination steps");
  basis_cmd->add_option("--out", o.out);

  auto* billey_cmd = app.add_subcommand("billey", "Evaluate Billey's formula");
  billey_cmd->add_option("--n", o.n)->required();
  billey_cmd->add_option("--w", o.w, "Fixed point, e.g. (13) or [3,2,1]")->required();
  billey_cmd->add_option("--v", o.v, "Schubert class index")->required();
  billey_cmd->add_option("--word", o.word, "Reduced word for w, e.g. 2,1,2")->delimiter(',');

  auto* act = app.add_subcommand("act", "Act on a spline by a permutation");
  act->add_option("side", o.side)->required()->check(CLI::IsMember({"left", "right"}));
  act->add_option("--perm", o.perm)->required();
  act->add_option("spline", o.doc_path)->required()->check(CLI::ExistingFile);
  act->add_option("--out", o.out);

  auto* extend_cmd = app.add_subcommand("extend", "Complete a partial assignment to a spline");
  extend_cmd->add_option("graph", o.graph_path)->required()->check(CLI::ExistingFile);
  extend_cmd->add_option("partial", o.doc_path)->required()->check(CLI::ExistingFile);
  extend_cmd->add_option("--out", o.out);

  auto* mult = app.add_subcommand("mult", "Structure constants of a basis");
  mult->add_option("graph", o.graph_path)->required()->check(CLI::ExistingFile);
  mult->add_option("basis", o.doc_path)->required()->check(CLI::ExistingFile);
  mult->add_option("--out", o.out);

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle->add_option("kind", o.kind)->required()->check(CLI::IsMember({"hnf", "zmod-rank"}));
  oracle->add_option("graph", o.graph_path)->required()->check(CLI::ExistingFile);
  add_orientation(oracle, o);
  oracle->add_option("--max-size", o.max_size, "Enumeration bound for zmod-rank");
  oracle->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) return run_gen(o, out);
    if (verify_cmd->parsed()) return run_verify(o, out);
    if (basis_cmd->parsed()) return run_basis(o, out);
    if (billey_cmd->parsed()) return run_billey(o, out);
    if (act->parsed()) return run_act(o, out);
    if (extend_cmd->parsed()) return run_extend(o, out);
    if (mult->parsed()) return run_mult(o, out);
    if (oracle->parsed()) return run_oracle(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gkm::cli
