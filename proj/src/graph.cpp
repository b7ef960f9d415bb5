#include "gkm/graph.hpp"

#include <algorithm>
#include <functional>

#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"

namespace gkm {

namespace {

std::pair<VertexId, VertexId> key(VertexId a, VertexId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

Graph Graph::build(RingPtr ring, std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                   std::optional<std::vector<Permutation>> permutations) {
  std::map<std::string, VertexId, std::less<>> index;
  for (VertexId i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<std::string> problems;
  std::vector<Edge> resolved;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto u = index.find(edges[e].u);
    const auto v = index.find(edges[e].v);
    if (u == index.end()) problems.push_back("edge " + std::to_string(e) + ": unknown vertex '" + edges[e].u + "'");
    if (v == index.end()) problems.push_back("edge " + std::to_string(e) + ": unknown vertex '" + edges[e].v + "'");
    if (u != index.end() && v != index.end()) resolved.push_back(Edge{u->second, v->second, edges[e].label});
  }
  if (!problems.empty()) {
    // Report the structural problems of the resolvable edges as well.
    try {
      build(ring, vertices, resolved, permutations);
    } catch (const ValidationError& err) {
      problems.insert(problems.end(), err.problems().begin(), err.problems().end());
    }
    throw ValidationError(std::move(problems));
  }
  return build(std::move(ring), std::move(vertices), std::move(resolved), std::move(permutations));
}

Graph Graph::build(RingPtr ring, std::vector<std::string> vertices, std::vector<Edge> edges,
                   std::optional<std::vector<Permutation>> permutations) {
  if (!ring) throw Error("graph needs a ring");
  std::vector<std::string> problems;
  Graph g;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) problems.push_back("vertex " + std::to_string(i) + ": empty name");
    if (!g.index_.emplace(vertices[i], i).second) problems.push_back("duplicate vertex '" + vertices[i] + "'");
  }
  if (permutations && permutations->size() != vertices.size())
    problems.push_back("permutation labels must cover every vertex");
  g.adjacency_.resize(vertices.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    const std::string where = "edge " + std::to_string(e);
    if (edge.u >= vertices.size() || edge.v >= vertices.size()) {
      problems.push_back(where + ": unknown vertex");
      continue;
    }
    const std::string ends = " (" + vertices[edge.u] + ", " + vertices[edge.v] + ")";
    if (edge.u == edge.v) {
      problems.push_back(where + ends + ": loop");
      continue;
    }
    if (!edge.label.ring() || !same_ring(edge.label.ring(), ring)) {
      problems.push_back(where + ends + ": label is not in the graph's ring");
      continue;
    }
    if (edge.label.is_zero()) {
      problems.push_back(where + ends + ": zero label");
      continue;
    }
    if (!g.edge_index_.emplace(key(edge.u, edge.v), g.edges_.size()).second) {
      problems.push_back(where + ends + ": duplicate edge");
      continue;
    }
    g.edges_.push_back(edge);
    g.adjacency_[edge.u].push_back(edge.v);
    g.adjacency_[edge.v].push_back(edge.u);
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  g.ring_ = std::move(ring);
  g.vertices_ = std::move(vertices);
  g.permutations_ = std::move(permutations);
  return g;
}

VertexId Graph::index_of(std::string_view name) const {
  const auto v = find_vertex(name);
  if (!v) throw ValidationError({"unknown vertex '" + std::string(name) + "'"});
  return *v;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::find_edge(VertexId a, VertexId b) const {
  const auto it = edge_index_.find(key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Graph::incident_edges(VertexId v) const {
  std::vector<std::size_t> out;
  for (VertexId u : adjacency_.at(v)) out.push_back(*find_edge(u, v));
  return out;
}

const Permutation& Graph::permutation(VertexId v) const { return permutations().at(v); }

const std::vector<Permutation>& Graph::permutations() const {
  if (!permutations_) throw ValidationError({"graph has no permutation labels"});
  return *permutations_;
}

std::optional<VertexId> Graph::vertex_of(const Permutation& w) const {
  const auto& perms = permutations();
  const auto it = std::find(perms.begin(), perms.end(), w);
  if (it == perms.end()) return std::nullopt;
  return static_cast<VertexId>(it - perms.begin());
}

bool Graph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : adjacency_[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == vertices_.size();
}

bool Graph::is_tree() const { return !vertices_.empty() && edges_.size() + 1 == vertices_.size() && is_connected(); }

bool operator==(const Graph& a, const Graph& b) {
  if (!same_ring(a.ring_, b.ring_) || a.vertices_ != b.vertices_ || a.permutations_ != b.permutations_ ||
      a.edges_.size() != b.edges_.size())
    return false;
  for (const Edge& e : a.edges_) {
    const auto other = b.find_edge(e.u, e.v);
    if (!other || !(b.edges_[*other].label == e.label)) return false;
  }
  return true;
}

Multigraph::Multigraph(RingPtr ring, std::vector<std::string> vertices, std::vector<MultiEdge> edges)
    : ring_(std::move(ring)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::vector<std::string> problems;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u >= vertices_.size() || edges_[e].v >= vertices_.size())
      problems.push_back("edge " + std::to_string(e) + ": unknown vertex");
    else if (edges_[e].u == edges_[e].v)
      problems.push_back("edge " + std::to_string(e) + ": loop");
    if (edges_[e].label.is_zero()) problems.push_back("edge " + std::to_string(e) + ": zero label");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

Graph collapse_multiedges(const Multigraph& m) {
  require_pid(m.ring(), "collapsing multiedges");
  std::map<std::pair<VertexId, VertexId>, Element> bundles;
  std::vector<std::pair<VertexId, VertexId>> order;
  for (const auto& e : m.edges()) {
    const auto k = key(e.u, e.v);
    const auto it = bundles.find(k);
    if (it == bundles.end()) {
      bundles.emplace(k, PrincipalIdeal(e.label).generator());
      order.push_back(k);
    } else {
      it->second = lcm(it->second, e.label);
    }
  }
  std::vector<Edge> edges;
  for (const auto& k : order) edges.push_back(Edge{k.first, k.second, bundles.at(k)});
  return Graph::build(m.ring(), m.vertices(), std::move(edges));
}

DirectedGraph::DirectedGraph(GraphPtr graph, std::vector<bool> forward)
    : graph_(std::move(graph)), forward_(std::move(forward)) {
  const std::size_t n = graph_->num_vertices();
  if (forward_.size() != graph_->num_edges()) throw Error("direction must be given for every edge");
  out_.resize(n);
  for (std::size_t e = 0; e < forward_.size(); ++e) out_[tail(e)].push_back(head(e));
  for (auto& s : out_) std::sort(s.begin(), s.end());

  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& s : out_)
    for (VertexId v : s) ++indegree[v];
  std::vector<VertexId> ready, topo;
  for (VertexId v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (VertexId u : out_[v])
      if (--indegree[u] == 0) ready.push_back(u);
  }
  if (topo.size() != n) throw ValidationError({"edge directions contain a directed cycle"});

  reach_.assign(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const VertexId v = *it;
    reach_[v][v] = true;
    for (VertexId u : out_[v])
      for (VertexId w = 0; w < n; ++w)
        if (reach_[u][w]) reach_[v][w] = true;
  }
}

VertexId DirectedGraph::tail(std::size_t edge) const {
  const Edge& e = graph_->edge(edge);
  return forward_.at(edge) ? e.u : e.v;
}

VertexId DirectedGraph::head(std::size_t edge) const {
  const Edge& e = graph_->edge(edge);
  return forward_.at(edge) ? e.v : e.u;
}

std::size_t DirectedGraph::out_degree(VertexId v) const { return out_.at(v).size(); }

bool DirectedGraph::reaches(VertexId from, VertexId to) const { return reach_.at(from).at(to); }

DirectedGraph orient(GraphPtr graph, const std::vector<long long>& ranks) {
  if (ranks.size() != graph->num_vertices()) throw ValidationError({"ranking must cover every vertex"});
  std::vector<std::string> problems;
  std::vector<bool> forward;
  for (const Edge& e : graph->edges()) {
    if (ranks[e.u] == ranks[e.v])
      problems.push_back("adjacent vertices '" + graph->name(e.u) + "' and '" + graph->name(e.v) +
                         "' have equal rank");
    forward.push_back(ranks[e.u] < ranks[e.v]);
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return DirectedGraph(std::move(graph), std::move(forward));
}

PalaisSmale is_palais_smale(const DirectedGraph& g) {
  for (std::size_t e = 0; e < g.graph().num_edges(); ++e)
    if (g.out_degree(g.tail(e)) <= g.out_degree(g.head(e))) return {false, e};
  return {};
}

Graph power_labels(const Graph& g, unsigned r) {
  if (!g.ring()->is_polynomial_kind()) throw UnsupportedRing("label powers need a polynomial ring");
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.label = e.label.pow(r + 1);
  std::optional<std::vector<Permutation>> perms;
  if (g.has_permutations()) perms = g.permutations();
  return Graph::build(g.ring(), g.vertices(), std::move(edges), std::move(perms));
}

Graph delete_edges(const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& remove) {
  std::vector<bool> drop(g.num_edges(), false);
  std::vector<std::string> problems;
  for (const auto& [a, b] : remove) {
    const auto e = (a < g.num_vertices() && b < g.num_vertices()) ? g.find_edge(a, b) : std::nullopt;
    if (!e)
      problems.push_back("no edge between vertices " + std::to_string(a) + " and " + std::to_string(b));
    else
      drop[*e] = true;
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!drop[e]) edges.push_back(g.edge(e));
  std::optional<std::vector<Permutation>> perms;
  if (g.has_permutations()) perms = g.permutations();
  return Graph::build(g.ring(), g.vertices(), std::move(edges), std::move(perms));
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
  if (keep.empty()) throw ValidationError({"induced subgraph needs at least one vertex"});
  std::vector<std::optional<VertexId>> position(g.num_vertices());
  std::vector<std::string> names;
  std::optional<std::vector<Permutation>> perms;
  if (g.has_permutations()) perms.emplace();
  for (VertexId v : keep) {
    if (v >= g.num_vertices()) throw ValidationError({"unknown vertex " + std::to_string(v)});
    if (position[v]) throw ValidationError({"vertex '" + g.name(v) + "' listed twice"});
    position[v] = names.size();
    names.push_back(g.name(v));
    if (perms) perms->push_back(g.permutation(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (position[e.u] && position[e.v]) edges.push_back(Edge{*position[e.u], *position[e.v], e.label});
  return Graph::build(g.ring(), std::move(names), std::move(edges), std::move(perms));
}

}  // namespace gkm
