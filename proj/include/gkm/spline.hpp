#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/graph.hpp"

namespace gkm {

struct EdgeViolation {
  std::size_t edge;
  Element difference;  // value(u) - value(v), not in the edge ideal
};

struct Verification {
  bool ok = true;
  std::vector<EdgeViolation> violations;
};

/// Checks every edge condition; throws ValidationError if `values` does not
/// have one entry per vertex in the graph's ring.
Verification verify(const Graph& g, const std::vector<Element>& values);

/// A vertex assignment that satisfies every edge condition of its graph.
/// Construction always verifies.
class Spline {
 public:
  /// Throws ValidationError naming the failing edges.
  Spline(GraphPtr graph, std::vector<Element> values);

  /// The constant spline with value `c` everywhere.
  static Spline constant(GraphPtr graph, const Element& c);
  static Spline zero(GraphPtr graph);

  const GraphPtr& graph() const { return graph_; }
  const Graph& graph_ref() const { return *graph_; }
  const std::vector<Element>& values() const { return values_; }
  const Element& operator[](VertexId v) const { return values_.at(v); }
  bool is_zero() const;

  friend Spline operator+(const Spline& p, const Spline& q);
  friend Spline operator-(const Spline& p, const Spline& q);
  friend Spline operator*(const Spline& p, const Spline& q);
  Spline operator-() const;
  /// c * p for a ring element c.
  Spline scaled(const Element& c) const;

  friend bool operator==(const Spline& a, const Spline& b);

 private:
  struct Trusted {};
  Spline(Trusted, GraphPtr graph, std::vector<Element> values);

  GraphPtr graph_;
  std::vector<Element> values_;
};

/// Throws RingMismatch unless both splines live on equal graphs.
void require_same_graph(const Spline& p, const Spline& q);

/// Restricts to an induced subgraph whose vertex names all occur in p's graph.
Spline restrict(const Spline& p, GraphPtr sub);

/// Generator of { x : x at v, 0 elsewhere, is a spline }, i.e. the lcm of the
/// labels incident to v (1 for an isolated vertex). Requires a PID ring.
Element vertex_kernel_generator(const Graph& g, VertexId v);

/// A value on some vertices; the rest are unknown.
using PartialAssignment = std::vector<std::optional<Element>>;

/// One congruence imposed on an unknown vertex by a known neighbor.
struct ExtensionConstraint {
  VertexId unknown;
  VertexId neighbor;
  Element residue;
  Element modulus;
};

struct NoExtension {
  std::string reason;
  /// Two constraints that cannot hold together, when such a pair exists.
  std::optional<std::pair<ExtensionConstraint, ExtensionConstraint>> conflict;
};

struct ExtensionResult {
  std::optional<Spline> spline;
  std::optional<NoExtension> failure;
};

/// Completes a partial assignment to a spline.
///
/// Over Z and Z/m any number of unknowns is allowed and the completion is the
/// lexicographically least one with entries in [0, lcm) (least nonnegative).
/// Over Q[x] exactly one unknown is allowed, solved by CRT; over multivariate
/// polynomial rings the single unknown's labels must be pairwise coprime
/// linear forms. Throws ValidationError if the known values already violate
/// an edge between them.
ExtensionResult extend(GraphPtr g, const PartialAssignment& partial);

}  // namespace gkm
