#include "gkm/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm::json_io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string text_of(const Json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(field, "expected a string or an integer");
}

Element element_from(const Json& j, const RingPtr& ring, const std::string& field) {
  try {
    return ring->parse(text_of(j, field));
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_atomic(const std::filesystem::path& path, const Json& doc) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << doc.dump(2) << '\n';
    if (!out) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

Json ring_to_json(const Ring& ring) {
  Json j;
  switch (ring.kind()) {
    case Ring::Kind::integers: j["kind"] = "integers"; break;
    case Ring::Kind::integers_mod:
      j["kind"] = "integers-mod";
      j["modulus"] = ring.modulus().get_str();
      break;
    case Ring::Kind::polynomial:
      j["kind"] = "polynomial";
      j["variables"] = ring.variables();
      break;
    case Ring::Kind::truncated:
      j["kind"] = "truncated-polynomial";
      j["variables"] = ring.variables();
      j["max_degree"] = ring.max_degree();
      break;
  }
  return j;
}

RingPtr ring_from_json(const Json& j) {
  const std::string kind = text_of(member(j, "kind", "ring"), "ring.kind");
  auto variables = [&]() {
    const Json& v = member(j, "variables", "ring");
    if (!v.is_array()) fail("ring.variables", "expected an array of names");
    std::vector<std::string> names;
    for (const auto& x : v) {
      if (!x.is_string()) fail("ring.variables", "expected variable names");
      names.push_back(x.get<std::string>());
    }
    return names;
  };
  try {
    if (kind == "integers") return Ring::integers();
    if (kind == "integers-mod") {
      Integer m;
      if (m.set_str(text_of(member(j, "modulus", "ring"), "ring.modulus"), 10) != 0) fail("ring.modulus", "not an integer");
      return Ring::integers_mod(m);
    }
    if (kind == "polynomial") return Ring::polynomial(variables());
    if (kind == "truncated-polynomial") {
      const Json& d = member(j, "max_degree", "ring");
      if (!d.is_number_unsigned()) fail("ring.max_degree", "expected a nonnegative integer");
      return Ring::truncated(variables(), d.get<unsigned>());
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail("ring", e.what());
  }
  fail("ring.kind", "unknown ring kind '" + kind + "'");
}

Json graph_to_json(const Graph& g, const DirectedGraph* direction) {
  Json j;
  j["ring"] = ring_to_json(*g.ring());
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"label", e.label.to_string()}});
  j["edges"] = std::move(edges);
  if (g.has_permutations()) {
    Json perms = Json::object();
    for (VertexId v = 0; v < g.num_vertices(); ++v) perms[g.name(v)] = g.permutation(v).one_line();
    j["perm_labels"] = std::move(perms);
  }
  if (direction) {
    Json dir = Json::object();
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      dir[std::to_string(e)] = direction->tail(e) == g.edge(e).u ? "uv" : "vu";
    j["direction"] = std::move(dir);
  }
  return j;
}

GraphPtr graph_from_json(const Json& j) {
  const RingPtr ring = ring_from_json(member(j, "ring", ""));
  const Json& vs = member(j, "vertices", "");
  if (!vs.is_array()) fail("vertices", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i) names.push_back(text_of(vs[i], "vertices[" + std::to_string(i) + "]"));
  const Json& es = member(j, "edges", "");
  if (!es.is_array()) fail("edges", "expected an array");
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < es.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    edges.push_back({text_of(member(es[e], "u", where), where + ".u"), text_of(member(es[e], "v", where), where + ".v"),
                     element_from(member(es[e], "label", where), ring, where + ".label")});
  }
  std::optional<std::vector<Permutation>> perms;
  if (const auto it = j.find("perm_labels"); it != j.end()) {
    if (!it->is_object()) fail("perm_labels", "expected an object");
    perms.emplace();
    for (const std::string& name : names) {
      const auto p = it->find(name);
      if (p == it->end()) fail("perm_labels." + name, "missing");
      try {
        perms->push_back(Permutation::from_one_line(p->get<std::vector<int>>()));
      } catch (const nlohmann::json::exception&) {
        fail("perm_labels." + name, "expected one-line notation");
      } catch (const ParseError& e) {
        fail("perm_labels." + name, e.what());
      }
    }
  }
  return share(Graph::build(ring, std::move(names), edges, std::move(perms)));
}

std::optional<DirectedGraph> direction_from_json(const Json& j, const GraphPtr& g) {
  const auto it = j.find("direction");
  if (it == j.end()) return std::nullopt;
  if (!it->is_object()) fail("direction", "expected an object");
  std::vector<bool> forward(g->num_edges(), true);
  std::vector<bool> given(g->num_edges(), false);
  for (const auto& [key, value] : it->items()) {
    std::size_t e = 0;
    try {
      e = std::stoul(key);
    } catch (const std::exception&) {
      fail("direction." + key, "expected an edge index");
    }
    if (e >= g->num_edges()) fail("direction." + key, "no such edge");
    const std::string d = text_of(value, "direction." + key);
    if (d != "uv" && d != "vu") fail("direction." + key, "expected \"uv\" or \"vu\"");
    forward[e] = d == "uv";
    given[e] = true;
  }
  for (std::size_t e = 0; e < given.size(); ++e)
    if (!given[e]) fail("direction", "edge " + std::to_string(e) + " has no direction");
  return DirectedGraph(g, std::move(forward));
}

GraphPtr graph_reference(const Json& j, const std::filesystem::path& base) {
  const Json& ref = member(j, "graph", "");
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    if (p.is_relative()) p = base / p;
    return graph_from_json(load(p));
  }
  return graph_from_json(ref);
}

Json values_to_json(const Graph& g, const std::vector<Element>& values) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) j[g.name(v)] = values.at(v).to_string();
  return j;
}

Json spline_to_json(const Spline& p, const Json& graph_doc) {
  return Json{{"graph", graph_doc}, {"values", values_to_json(p.graph_ref(), p.values())}};
}

PartialAssignment partial_from_json(const Json& values, const Graph& g) {
  if (!values.is_object()) fail("values", "expected an object");
  for (const auto& [key, value] : values.items())
    if (!g.find_vertex(key)) fail("values." + key, "not a vertex of the graph");
  PartialAssignment out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto it = values.find(g.name(v));
    if (it == values.end() || it->is_null()) continue;
    out[v] = element_from(*it, g.ring(), "values." + g.name(v));
  }
  return out;
}

Spline spline_from_json(const Json& values, const GraphPtr& g) {
  const PartialAssignment partial = partial_from_json(values, *g);
  std::vector<Element> full;
  for (VertexId v = 0; v < g->num_vertices(); ++v) {
    if (!partial[v]) fail("values." + g->name(v), "missing vertex value");
    full.push_back(*partial[v]);
  }
  return Spline(g, std::move(full));
}

Json basis_to_json(const FlowUpBasis& b, const Json& graph_doc) {
  Json elements = Json::array();
  for (std::size_t k = 0; k < b.size(); ++k)
    elements.push_back({{"leading", b.graph->name(b.leading[k])},
                        {"values", values_to_json(*b.graph, b.elements[k].values())}});
  return Json{{"graph", graph_doc}, {"elements", std::move(elements)}};
}

FlowUpBasis basis_from_json(const Json& j, const GraphPtr& g) {
  const Json& es = member(j, "elements", "");
  if (!es.is_array()) fail("elements", "expected an array");
  std::vector<VertexId> leading;
  std::vector<Spline> elements;
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::string where = "elements[" + std::to_string(k) + "]";
    const std::string name = text_of(member(es[k], "leading", where), where + ".leading");
    const auto v = g->find_vertex(name);
    if (!v) fail(where + ".leading", "unknown vertex '" + name + "'");
    leading.push_back(*v);
    try {
      elements.push_back(spline_from_json(member(es[k], "values", where), g));
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  return make_flow_up_basis(g, std::move(leading), std::move(elements));
}

Json table_to_json(const StructureTable& t) {
  const FlowUpBasis& b = t.basis;
  Json pairs = Json::array();
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a; c < b.size(); ++c) {
      Json terms = Json::array();
      const auto& coeffs = t.coefficients[a][c];
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero())
          terms.push_back({{"c", b.graph->name(b.leading[k])}, {"coeff", coeffs[k].to_string()}});
      pairs.push_back({{"a", b.graph->name(b.leading[a])}, {"b", b.graph->name(b.leading[c])}, {"terms", std::move(terms)}});
    }
  return Json{{"pairs", std::move(pairs)}};
}

Json trace_to_json(const EliminationTrace& trace) {
  Json steps = Json::array();
  for (const EliminationStep& s : trace.steps) {
    Json multi = Json::array();
    const auto& names = s.multigraph.vertices();
    for (const auto& e : s.multigraph.edges()) {
      Json edge{{"u", names[e.u]}, {"v", names[e.v]}, {"label", e.label.to_string()}};
      if (e.sum_of) edge["sum_of"] = {e.sum_of->first.to_string(), e.sum_of->second.to_string()};
      multi.push_back(std::move(edge));
    }
    Json collapsed = graph_to_json(s.collapsed);
    Json lifted = Json::array();
    for (const auto& values : s.lifted) {
      Json row = Json::object();
      for (std::size_t v = 0; v < values.size(); ++v) row[s.vertices.at(v)] = values[v].to_string();
      lifted.push_back(std::move(row));
    }
    steps.push_back({{"eliminated", s.vertex},
                     {"multigraph", std::move(multi)},
                     {"collapsed", collapsed["edges"]},
                     {"kernel_generator", s.kernel_generator.to_string()},
                     {"lifted", std::move(lifted)}});
  }
  Json base_basis = Json::array();
  for (const auto& values : trace.base_basis) base_basis.push_back(values_to_json(trace.base, values));
  steps.push_back({{"tree", graph_to_json(trace.base)["edges"]}, {"tree_basis", std::move(base_basis)}});
  return steps;
}

}  // namespace gkm::json_io
