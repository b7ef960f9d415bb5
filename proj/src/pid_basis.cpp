#include "gkm/pid_basis.hpp"

#include <algorithm>
#include <numeric>

#include "gkm/basis_algebra.hpp"
#include "gkm/crt.hpp"
#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"
#include "gkm/lattice.hpp"

namespace gkm {

FlowUpBasis make_flow_up_basis(GraphPtr graph, std::vector<VertexId> leading, std::vector<Spline> elements) {
  std::vector<std::string> problems;
  const std::size_t n = graph->num_vertices();
  if (leading.size() != n || elements.size() != n)
    problems.push_back("a flow-up basis needs one element per vertex");
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < std::min(leading.size(), elements.size()); ++k) {
    const VertexId v = leading[k];
    if (v >= n || seen[v]) {
      problems.push_back("leading vertices must be distinct vertices of the graph");
      continue;
    }
    seen[v] = true;
    const Spline& p = elements[k];
    if (p.graph() != graph && !(*p.graph() == *graph)) problems.push_back("element " + std::to_string(k) + " lives on another graph");
    if (p[v].is_zero()) problems.push_back("element " + std::to_string(k) + " vanishes at its leading vertex '" + graph->name(v) + "'");
    for (std::size_t j = 0; j < k; ++j)
      if (leading[j] < n && !p[leading[j]].is_zero())
        problems.push_back("element " + std::to_string(k) + " is nonzero at '" + graph->name(leading[j]) +
                           "', which leads an earlier element");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return FlowUpBasis{std::move(graph), std::move(leading), std::move(elements)};
}

bool is_poset_upper_triangular(const FlowUpBasis& basis, const DirectedGraph& orientation) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const VertexId v = basis.leading[k];
    const Spline& p = basis.elements[k];
    if (p[v].is_zero()) return false;
    for (VertexId u = 0; u < p.values().size(); ++u)
      if (!orientation.reaches(v, u) && !p[u].is_zero()) return false;
  }
  return true;
}

FlowUpBasis tree_basis(GraphPtr tree, VertexId root) {
  const Graph& t = *tree;
  require_pid(t.ring(), "tree basis");
  if (!t.is_tree()) throw ValidationError({"graph is not a tree"});
  if (root >= t.num_vertices()) throw ValidationError({"root is not a vertex"});
  const std::size_t n = t.num_vertices();
  std::vector<VertexId> preorder, parent(n, n);
  std::vector<VertexId> stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    const auto& nb = t.neighbors(v);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = true;
        parent[*it] = v;
        stack.push_back(*it);
      }
  }
  const RingPtr& ring = t.ring();
  std::vector<Spline> elements;
  for (VertexId v : preorder) {
    if (v == root) {
      elements.push_back(Spline::constant(tree, ring->one()));
      continue;
    }
    const Element label = PrincipalIdeal(t.edge(*t.find_edge(v, parent[v])).label).generator();
    std::vector<Element> values(n, ring->zero());
    for (VertexId u = 0; u < n; ++u) {
      VertexId a = u;
      while (a != v && a != root) a = parent[a];
      if (a == v) values[u] = label;
    }
    elements.emplace_back(tree, std::move(values));
  }
  return make_flow_up_basis(std::move(tree), std::move(preorder), std::move(elements));
}

Elimination eliminate_vertex(const Graph& g, VertexId v) {
  require_pid(g.ring(), "vertex elimination");
  if (v >= g.num_vertices()) throw ValidationError({"unknown vertex " + std::to_string(v)});
  auto shift = [v](VertexId u) { return u > v ? u - 1 : u; };
  std::vector<std::string> names;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    if (u != v) names.push_back(g.name(u));
  std::vector<Multigraph::MultiEdge> edges;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back({shift(e.u), shift(e.v), e.label, std::nullopt});
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      const Element& a = g.edge(*g.find_edge(nb[i], v)).label;
      const Element& b = g.edge(*g.find_edge(nb[j], v)).label;
      edges.push_back({shift(nb[i]), shift(nb[j]), gcd(a, b), std::pair{a, b}});
    }
  Multigraph m(g.ring(), names, std::move(edges));
  Graph collapsed = collapse_multiedges(m);
  return {std::move(m), std::move(collapsed)};
}

namespace {

/// Strict order on vertices: by rank, then by name.
struct RankOrder {
  const Graph& g;
  const std::vector<long long>& ranks;
  bool operator()(VertexId a, VertexId b) const {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return g.name(a) < g.name(b);
  }
};

std::vector<VertexId> sorted_by_rank(const Graph& g, const std::vector<long long>& ranks) {
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), RankOrder{g, ranks});
  return order;
}

/// A tree rooted at its lowest vertex in which every parent is ranked below
/// its children.
bool is_rank_compatible_tree(const Graph& g, const std::vector<long long>& ranks) {
  if (!g.is_tree()) return false;
  const RankOrder less{g, ranks};
  // Equivalently, every vertex but the root has exactly one lower neighbor.
  const VertexId root = sorted_by_rank(g, ranks).front();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == root) continue;
    std::size_t lower = 0;
    for (VertexId u : g.neighbors(v))
      if (less(u, v)) ++lower;
    if (lower != 1) return false;
  }
  return true;
}

void require_basis_ring(const RingPtr& ring) {
  if (ring->kind() != Ring::Kind::integers && !ring->is_univariate())
    throw UnsupportedRing("flow-up bases by elimination need Z or a univariate polynomial ring, got " +
                          ring->describe());
}

std::vector<std::vector<Element>> values_of(const std::vector<Spline>& splines) {
  std::vector<std::vector<Element>> out;
  for (const Spline& s : splines) out.push_back(s.values());
  return out;
}

}  // namespace

Spline lift(const Spline& p, GraphPtr g, VertexId v, const std::vector<long long>& ranks) {
  const Graph& graph = *g;
  if (p.values().size() + 1 != graph.num_vertices()) throw ValidationError({"spline does not fit g minus v"});
  const RingPtr& ring = graph.ring();
  auto value_at = [&](VertexId u) -> const Element& { return p[u > v ? u - 1 : u]; };
  std::vector<Congruence> system;
  std::optional<VertexId> top;
  for (VertexId u : graph.neighbors(v)) {
    system.push_back({value_at(u), graph.edge(*graph.find_edge(u, v)).label});
    if (!top || RankOrder{graph, ranks}(*top, u)) top = u;
  }
  Element x = ring->zero();
  if (top) {
    const CrtOutcome solved = solve_congruences(system);
    if (!solved.solution) throw Error("internal: lift congruences at '" + graph.name(v) + "' are inconsistent");
    const Element& anchor = value_at(*top);
    x = anchor + reduce_mod(solved.solution->residue - anchor, solved.solution->modulus);
  }
  std::vector<Element> values;
  for (VertexId u = 0; u < graph.num_vertices(); ++u) values.push_back(u == v ? x : value_at(u));
  return Spline(std::move(g), std::move(values));
}

std::vector<long long> index_ranks(const Graph& g) {
  std::vector<long long> ranks(g.num_vertices());
  std::iota(ranks.begin(), ranks.end(), 0);
  return ranks;
}

FlowUpResult flow_up_basis(GraphPtr g, const std::vector<long long>& ranks) {
  require_basis_ring(g->ring());
  if (ranks.size() != g->num_vertices()) throw ValidationError({"ranking must cover every vertex"});
  if (g->num_vertices() == 0) throw ValidationError({"graph has no vertices"});
  if (!g->is_connected()) throw ValidationError({"graph is disconnected; compute a basis per component"});

  struct Stage {
    GraphPtr graph;
    std::vector<long long> ranks;
    VertexId eliminated;
    std::optional<Elimination> elimination;
    Element kernel;
  };
  std::vector<Stage> stages;
  GraphPtr cur = g;
  std::vector<long long> cur_ranks = ranks;
  while (!is_rank_compatible_tree(*cur, cur_ranks)) {
    const VertexId v = sorted_by_rank(*cur, cur_ranks).back();
    Element kernel = vertex_kernel_generator(*cur, v);
    Elimination elim = eliminate_vertex(*cur, v);
    GraphPtr next = share(elim.collapsed);
    std::vector<long long> next_ranks = cur_ranks;
    next_ranks.erase(next_ranks.begin() + static_cast<long>(v));
    stages.push_back({cur, cur_ranks, v, std::move(elim), std::move(kernel)});
    cur = std::move(next);
    cur_ranks = std::move(next_ranks);
  }

  // Base case, ordered bottom-up.
  const FlowUpBasis tree = tree_basis(cur, sorted_by_rank(*cur, cur_ranks).front());
  std::vector<std::size_t> perm(tree.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return RankOrder{*cur, cur_ranks}(tree.leading[a], tree.leading[b]); });
  std::vector<Spline> elements;
  std::vector<std::string> leading_names;
  for (std::size_t k : perm) {
    elements.push_back(tree.elements[k]);
    leading_names.push_back(cur->name(tree.leading[k]));
  }

  FlowUpResult result{FlowUpBasis{}, EliminationTrace{{}, *cur, values_of(elements)}};
  std::vector<EliminationStep> steps;
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    std::vector<Spline> lifted;
    for (const Spline& s : elements) lifted.push_back(lift(s, it->graph, it->eliminated, it->ranks));
    std::vector<Element> kernel_values(it->graph->num_vertices(), it->graph->ring()->zero());
    kernel_values[it->eliminated] = it->kernel;
    lifted.emplace_back(it->graph, std::move(kernel_values));
    leading_names.push_back(it->graph->name(it->eliminated));
    elements = std::move(lifted);
    steps.push_back({it->graph->name(it->eliminated), it->graph->vertices(), it->elimination->multigraph, it->elimination->collapsed,
                     it->kernel, values_of(elements)});
  }
  std::reverse(steps.begin(), steps.end());
  result.trace.steps = std::move(steps);

  std::vector<VertexId> leading;
  for (const std::string& name : leading_names) leading.push_back(g->index_of(name));
  result.basis = make_flow_up_basis(g, std::move(leading), std::move(elements));
  return result;
}

FlowUpBasis hnf_spline_lattice(GraphPtr g, const std::vector<long long>& ranks, std::size_t max_vertices) {
  const Graph& graph = *g;
  if (graph.ring()->kind() != Ring::Kind::integers) throw UnsupportedRing("the HNF oracle works over Z only");
  if (ranks.size() != graph.num_vertices()) throw ValidationError({"ranking must cover every vertex"});
  const std::size_t n = graph.num_vertices();
  if (n > max_vertices) throw BoundExceeded("HNF oracle bound of " + std::to_string(max_vertices) + " vertices exceeded");
  const std::vector<VertexId> order = sorted_by_rank(graph, ranks);
  std::vector<std::size_t> column(n);
  for (std::size_t c = 0; c < n; ++c) column[order[c]] = c;

  // p_u - p_v - label * k_e = 0 in the unknowns (p, k).
  const std::size_t cols = n + graph.num_edges();
  lattice::Matrix a;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    lattice::Vector row(cols, 0);
    row[column[edge.u]] = 1;
    row[column[edge.v]] = -1;
    row[n + e] = -edge.label.integer();
    a.push_back(std::move(row));
  }
  lattice::Matrix projected;
  for (const auto& k : lattice::integer_kernel(a, cols)) projected.emplace_back(k.begin(), k.begin() + static_cast<long>(n));
  const lattice::Matrix h = lattice::hermite_basis(std::move(projected), n);
  if (h.size() != n) throw Error("internal: spline lattice is not of full rank");

  std::vector<Spline> elements;
  std::vector<VertexId> leading;
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i][i] == 0) throw Error("internal: Hermite basis is not square triangular");
    std::vector<Element> values(n);
    for (std::size_t c = 0; c < n; ++c) values[order[c]] = graph.ring()->from_integer(h[i][c]);
    elements.emplace_back(g, std::move(values));
    leading.push_back(order[i]);
  }
  return make_flow_up_basis(std::move(g), std::move(leading), std::move(elements));
}

bool same_span(const FlowUpBasis& a, const FlowUpBasis& b) {
  if (!(*a.graph == *b.graph)) throw RingMismatch("bases live on different graphs");
  for (const Spline& p : b.elements)
    if (!try_express(p, a)) return false;
  for (const Spline& p : a.elements)
    if (!try_express(p, b)) return false;
  return true;
}

std::size_t zmod_rank(const Graph& g, std::size_t max_assignments) {
  const RingPtr& ring = g.ring();
  if (ring->kind() != Ring::Kind::integers_mod) throw UnsupportedRing("zmod_rank needs a Z/m graph");
  const std::size_t n = g.num_vertices();
  const Integer& m = ring->modulus();
  Integer total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= m;
    if (total > max_assignments)
      throw BoundExceeded("enumeration of " + ring->describe() + "^" + std::to_string(n) + " exceeds " +
                          std::to_string(max_assignments) + " assignments");
  }
  const unsigned long mod = m.get_ui();
  std::vector<unsigned long> divisor;
  for (const Edge& e : g.edges()) {
    Integer d;
    mpz_gcd(d.get_mpz_t(), e.label.integer().get_mpz_t(), m.get_mpz_t());
    divisor.push_back(d.get_ui());
  }

  lattice::Matrix h;
  for (std::size_t i = 0; i < n; ++i) {
    lattice::Vector row(n, 0);
    row[i] = m;
    h.push_back(std::move(row));
  }
  std::vector<unsigned long> x(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t e = 0; e < g.num_edges() && ok; ++e)
      ok = x[g.edge(e).u] % divisor[e] == x[g.edge(e).v] % divisor[e];
    if (ok) {
      lattice::Vector v(x.begin(), x.end());
      if (!lattice::hermite_contains(h, v)) {
        h.push_back(std::move(v));
        h = lattice::hermite_basis(std::move(h), n);
      }
    }
    std::size_t i = 0;
    while (i < n && ++x[i] == mod) x[i++] = 0;
    if (i == n) break;
  }
  // The group is L / mZ^n; with Smith invariants d_i of L it is the sum of Z/(m/d_i).
  std::size_t rank = 0;
  for (const Integer& d : lattice::smith_invariants(h))
    if (d < m) ++rank;
  return rank;
}

}  // namespace gkm
