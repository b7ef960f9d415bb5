#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/spline.hpp"

namespace gkm {

/// Splines indexed by leading vertices, listed bottom-up: element k is nonzero
/// at its leading vertex and vanishes at the leading vertices of elements
/// 0..k-1. This is what triangular solves (express) rely on.
struct FlowUpBasis {
  GraphPtr graph;
  std::vector<VertexId> leading;
  std::vector<Spline> elements;

  std::size_t size() const { return elements.size(); }
};

/// Wraps splines whose leading vertices are given explicitly. Throws
/// ValidationError unless the triangularity above holds and every vertex
/// leads exactly one element.
FlowUpBasis make_flow_up_basis(GraphPtr graph, std::vector<VertexId> leading, std::vector<Spline> elements);

/// Flow-up check against an orientation (edges from lower to higher rank):
/// each element is nonzero at its leading vertex and zero at every vertex
/// that cannot be reached from it by an upward directed path.
bool is_poset_upper_triangular(const FlowUpBasis& basis, const DirectedGraph& orientation);

/// Basis of a tree: the root gets the all-ones spline, any other vertex v
/// the canonical generator of its parent edge on v's subtree and 0 elsewhere.
/// Elements are in depth-first preorder from the root.
FlowUpBasis tree_basis(GraphPtr tree, VertexId root);

/// The two halves of eliminating a vertex: every pair of neighbors u, u' is
/// joined by an edge labeled with the gcd of their labels to v, then
/// parallel edges are merged by lcm.
struct Elimination {
  Multigraph multigraph;
  Graph collapsed;
};
Elimination eliminate_vertex(const Graph& g, VertexId v);

/// Extends a spline on g minus v (vertex order preserved) to g. The value at
/// v solves the congruences from v's neighbors; of all solutions, the one
/// taken is q + r where q is the value at v's highest-ranked neighbor and r
/// the canonical residue (see reduce_mod) of the difference.
Spline lift(const Spline& p, GraphPtr g, VertexId v, const std::vector<long long>& ranks);

struct EliminationStep {
  std::string vertex;
  /// Vertices of the graph before this elimination.
  std::vector<std::string> vertices;
  Multigraph multigraph;
  Graph collapsed;
  Element kernel_generator;
  /// Basis of the graph before this elimination, after lifting.
  std::vector<std::vector<Element>> lifted;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  /// The tree the elimination stopped at, and its basis.
  Graph base;
  std::vector<std::vector<Element>> base_basis;
};

struct FlowUpResult {
  FlowUpBasis basis;
  EliminationTrace trace;
};

/// Flow-up basis of a connected graph over Z or Q[x] by vertex elimination.
/// The highest-ranked vertex goes first (ties broken by name) until the
/// graph is a tree whose parents are ranked below their children. Throws
/// UnsupportedRing outside those PIDs and ValidationError if disconnected.
FlowUpResult flow_up_basis(GraphPtr g, const std::vector<long long>& ranks);

/// Ranks by vertex index.
std::vector<long long> index_ranks(const Graph& g);

/// Independent oracle over Z: Hermite normal form of the lattice of all
/// splines with coordinates ordered by rank (ties by name).
FlowUpBasis hnf_spline_lattice(GraphPtr g, const std::vector<long long>& ranks, std::size_t max_vertices = 16);

/// True iff each basis expresses every element of the other.
bool same_span(const FlowUpBasis& a, const FlowUpBasis& b);

/// Minimum number of generators of the group of splines over Z/m, found by
/// enumerating (Z/m)^V. Throws BoundExceeded if m^|V| > max_assignments.
std::size_t zmod_rank(const Graph& g, std::size_t max_assignments = 1'000'000);

}  // namespace gkm
