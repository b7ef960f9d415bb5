#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/permutation.hpp"
#include "gkm/ring.hpp"

namespace gkm {

using VertexId = std::size_t;

struct Edge {
  VertexId u;
  VertexId v;
  Element label;
};

/// Edge given by vertex names, as read from user input.
struct EdgeSpec {
  std::string u;
  std::string v;
  Element label;
};

/// A finite simple graph whose edges carry nonzero ring elements; the
/// element generates the principal ideal attached to the edge. Bruhat-type
/// graphs additionally record the permutation at each vertex.
///
/// Edges are identified by their unordered vertex pair.
class Graph {
 public:
  /// Validates and builds; throws ValidationError listing every problem
  /// (loop, duplicate edge, zero label, unknown vertex, duplicate name).
  static Graph build(RingPtr ring, std::vector<std::string> vertices,
                     const std::vector<EdgeSpec>& edges,
                     std::optional<std::vector<Permutation>> permutations = std::nullopt);
  static Graph build(RingPtr ring, std::vector<std::string> vertices, std::vector<Edge> edges,
                     std::optional<std::vector<Permutation>> permutations = std::nullopt);

  const RingPtr& ring() const { return ring_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& name(VertexId v) const { return vertices_.at(v); }
  /// Throws ValidationError for unknown names.
  VertexId index_of(std::string_view name) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;
  /// Neighbors in increasing id order.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::vector<std::size_t> incident_edges(VertexId v) const;

  bool has_permutations() const { return permutations_.has_value(); }
  const Permutation& permutation(VertexId v) const;
  const std::vector<Permutation>& permutations() const;
  std::optional<VertexId> vertex_of(const Permutation& w) const;

  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph() = default;

  RingPtr ring_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::optional<std::vector<Permutation>> permutations_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_index_;
  std::vector<std::vector<VertexId>> adjacency_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// A labeled graph that may carry several edges per vertex pair; only exists
/// transiently during vertex elimination.
class Multigraph {
 public:
  struct MultiEdge {
    VertexId u;
    VertexId v;
    Element label;
    /// For edges created by elimination: the two labels whose ideal sum this is.
    std::optional<std::pair<Element, Element>> sum_of;
  };

  Multigraph(RingPtr ring, std::vector<std::string> vertices, std::vector<MultiEdge> edges);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }

 private:
  RingPtr ring_;
  std::vector<std::string> vertices_;
  std::vector<MultiEdge> edges_;
};

/// Replaces each bundle of parallel edges by one edge labeled with the
/// intersection (lcm) of their ideals. Requires a PID ring.
Graph collapse_multiedges(const Multigraph& m);

/// A graph with every edge directed; the direction must be acyclic.
class DirectedGraph {
 public:
  /// `forward[i]` directs edge i from its `u` to its `v`. Throws
  /// ValidationError if the directions contain a cycle.
  DirectedGraph(GraphPtr graph, std::vector<bool> forward);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  VertexId tail(std::size_t edge) const;
  VertexId head(std::size_t edge) const;
  std::size_t out_degree(VertexId v) const;
  const std::vector<VertexId>& successors(VertexId v) const { return out_.at(v); }
  /// True iff a directed path leads from `from` to `to` (reflexive).
  bool reaches(VertexId from, VertexId to) const;

 private:
  GraphPtr graph_;
  std::vector<bool> forward_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<bool>> reach_;
};

/// Directs every edge from the lower-ranked endpoint to the higher one.
/// Throws ValidationError when adjacent vertices tie.
DirectedGraph orient(GraphPtr graph, const std::vector<long long>& ranks);

struct PalaisSmale {
  bool holds = true;
  std::optional<std::size_t> witness_edge;  // some edge u -> v with outdeg(u) <= outdeg(v)
};

/// Combinatorial Palais-Smale: outdeg(u) > outdeg(v) along every edge u -> v.
PalaisSmale is_palais_smale(const DirectedGraph& g);

/// Replaces every label l by l^(r+1); needs a polynomial-kind ring.
Graph power_labels(const Graph& g, unsigned r);

/// Removes the listed edges (given by endpoints); vertices are unchanged.
Graph delete_edges(const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Keeps the listed vertices (in the given order) and the edges among them.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

}  // namespace gkm
