#include "gkm/spline.hpp"

#include <algorithm>

#include "gkm/crt.hpp"
#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"
#include "gkm/lattice.hpp"

namespace gkm {

Verification verify(const Graph& g, const std::vector<Element>& values) {
  if (values.size() != g.num_vertices())
    throw ValidationError({"expected " + std::to_string(g.num_vertices()) + " vertex values, got " +
                           std::to_string(values.size())});
  std::vector<std::string> problems;
  for (VertexId v = 0; v < values.size(); ++v)
    if (!values[v].ring() || !same_ring(values[v].ring(), g.ring()))
      problems.push_back("value at '" + g.name(v) + "' is not in " + g.ring()->describe());
  if (!problems.empty()) throw ValidationError(std::move(problems));
  Verification out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    Element diff = values[edge.u] - values[edge.v];
    if (!PrincipalIdeal(edge.label).contains(diff)) {
      out.ok = false;
      out.violations.push_back({e, std::move(diff)});
    }
  }
  return out;
}

Spline::Spline(GraphPtr graph, std::vector<Element> values) : graph_(std::move(graph)), values_(std::move(values)) {
  const Verification check = verify(*graph_, values_);
  if (check.ok) return;
  std::vector<std::string> problems;
  for (const auto& bad : check.violations) {
    const Edge& e = graph_->edge(bad.edge);
    problems.push_back("edge (" + graph_->name(e.u) + ", " + graph_->name(e.v) + "): difference " +
                       bad.difference.to_string() + " is not in <" + e.label.to_string() + ">");
  }
  throw ValidationError(std::move(problems));
}

Spline::Spline(Trusted, GraphPtr graph, std::vector<Element> values)
    : graph_(std::move(graph)), values_(std::move(values)) {}

Spline Spline::constant(GraphPtr graph, const Element& c) {
  const std::size_t n = graph->num_vertices();
  return Spline(std::move(graph), std::vector<Element>(n, c));
}

Spline Spline::zero(GraphPtr graph) {
  const Element z = graph->ring()->zero();
  return constant(std::move(graph), z);
}

bool Spline::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Element& x) { return x.is_zero(); });
}

void require_same_graph(const Spline& p, const Spline& q) {
  if (p.graph() != q.graph() && !(*p.graph() == *q.graph()))
    throw RingMismatch("splines live on different graphs");
}

namespace {

template <typename Op>
std::vector<Element> pointwise(const Spline& p, const Spline& q, Op op) {
  require_same_graph(p, q);
  std::vector<Element> out;
  out.reserve(p.values().size());
  for (std::size_t v = 0; v < p.values().size(); ++v) out.push_back(op(p[v], q[v]));
  return out;
}

}  // namespace

// Sums, differences and products of splines are splines; the checked
// constructor doubles as an assertion of that.
Spline operator+(const Spline& p, const Spline& q) {
  return Spline(p.graph_, pointwise(p, q, [](const Element& a, const Element& b) { return a + b; }));
}

Spline operator-(const Spline& p, const Spline& q) {
  return Spline(p.graph_, pointwise(p, q, [](const Element& a, const Element& b) { return a - b; }));
}

Spline operator*(const Spline& p, const Spline& q) {
  return Spline(p.graph_, pointwise(p, q, [](const Element& a, const Element& b) { return a * b; }));
}

Spline Spline::operator-() const {
  std::vector<Element> out;
  for (const Element& x : values_) out.push_back(-x);
  return Spline(Trusted{}, graph_, std::move(out));
}

Spline Spline::scaled(const Element& c) const {
  if (!same_ring(c.ring(), graph_->ring())) throw RingMismatch("scalar is not in the spline's ring");
  std::vector<Element> out;
  for (const Element& x : values_) out.push_back(c * x);
  return Spline(graph_, std::move(out));
}

bool operator==(const Spline& a, const Spline& b) {
  if (a.graph_ != b.graph_ && !(*a.graph_ == *b.graph_)) return false;
  return a.values_ == b.values_;
}

Spline restrict(const Spline& p, GraphPtr sub) {
  const Graph& g = p.graph_ref();
  if (!same_ring(g.ring(), sub->ring())) throw ValidationError({"subgraph has a different ring"});
  std::vector<std::string> problems;
  std::vector<Element> values;
  std::vector<VertexId> origin;
  for (const std::string& name : sub->vertices()) {
    const auto v = g.find_vertex(name);
    if (!v) {
      problems.push_back("vertex '" + name + "' is not in the original graph");
      continue;
    }
    origin.push_back(*v);
    values.push_back(p[*v]);
  }
  if (problems.empty()) {
    for (const Edge& e : sub->edges()) {
      const auto orig = g.find_edge(origin[e.u], origin[e.v]);
      if (!orig || !(PrincipalIdeal(g.edge(*orig).label) == PrincipalIdeal(e.label)))
        problems.push_back("edge (" + sub->name(e.u) + ", " + sub->name(e.v) + ") is not an edge of the original graph");
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return Spline(std::move(sub), std::move(values));
}

Element vertex_kernel_generator(const Graph& g, VertexId v) {
  require_pid(g.ring(), "vertex kernel generator");
  Element acc = g.ring()->one();
  for (std::size_t e : g.incident_edges(v)) acc = lcm(acc, g.edge(e).label);
  return acc;
}

// --- extension ---------------------------------------------------------------

namespace {

using lattice::Matrix;
using lattice::Vector;

/// Label of an edge as a positive integer modulus: |l| over Z, gcd(l, m) over Z/m.
Integer integer_modulus(const Element& label) {
  if (label.ring()->kind() == Ring::Kind::integers) return abs(label.integer());
  Integer g;
  mpz_gcd(g.get_mpz_t(), label.integer().get_mpz_t(), label.ring()->modulus().get_mpz_t());
  return g;
}

std::vector<ExtensionConstraint> constraints_at(const Graph& g, VertexId v, const PartialAssignment& known) {
  std::vector<ExtensionConstraint> out;
  for (std::size_t e : g.incident_edges(v)) {
    const Edge& edge = g.edge(e);
    const VertexId u = edge.u == v ? edge.v : edge.u;
    if (known[u]) out.push_back({v, u, *known[u], edge.label});
  }
  return out;
}

std::optional<std::pair<ExtensionConstraint, ExtensionConstraint>> integer_conflict(
    const std::vector<ExtensionConstraint>& cs) {
  const RingPtr z = Ring::integers();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].unknown != cs[j].unknown) continue;
      const Congruence a{z->from_integer(cs[i].residue.integer()), z->from_integer(integer_modulus(cs[i].modulus))};
      const Congruence b{z->from_integer(cs[j].residue.integer()), z->from_integer(integer_modulus(cs[j].modulus))};
      if (!crt_merge(a, b)) return std::pair{cs[i], cs[j]};
    }
  return std::nullopt;
}

ExtensionResult extend_integral(const GraphPtr& gp, PartialAssignment known) {
  const Graph& g = *gp;
  const RingPtr& ring = g.ring();
  const RingPtr z = Ring::integers();

  // Propagation: a vertex whose neighbors are all known is a plain CRT problem.
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (known[v]) continue;
      const auto& nb = g.neighbors(v);
      if (!std::all_of(nb.begin(), nb.end(), [&](VertexId u) { return known[u].has_value(); })) continue;
      const auto cs = constraints_at(g, v, known);
      if (cs.empty()) {
        known[v] = ring->zero();
        changed = true;
        continue;
      }
      std::vector<Congruence> system;
      for (const auto& c : cs)
        system.push_back({z->from_integer(c.residue.integer()), z->from_integer(integer_modulus(c.modulus))});
      const CrtOutcome solved = solve_congruences(system);
      if (!solved.solution) {
        const auto [i, j] = *solved.conflict;
        return {std::nullopt, NoExtension{"congruences at '" + g.name(v) + "' are incompatible", std::pair{cs[i], cs[j]}}};
      }
      known[v] = ring->from_integer(solved.solution->residue.integer());
      changed = true;
    }
  }

  std::vector<VertexId> unknowns;
  std::vector<std::optional<std::size_t>> slot(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!known[v]) {
      slot[v] = unknowns.size();
      unknowns.push_back(v);
    }
  if (!unknowns.empty()) {
    // Variables: x (one per unknown) then one multiplier k per constraining edge.
    const std::size_t k = unknowns.size();
    std::vector<std::size_t> active;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (slot[g.edge(e).u] || slot[g.edge(e).v]) active.push_back(e);
    const std::size_t cols = k + active.size();
    Matrix a;
    Vector b;
    std::vector<ExtensionConstraint> single;
    for (std::size_t r = 0; r < active.size(); ++r) {
      const Edge& edge = g.edge(active[r]);
      Vector row(cols, 0);
      row[k + r] = -integer_modulus(edge.label);
      Integer rhs = 0;
      for (const auto& [end, sign] : {std::pair{edge.u, 1}, std::pair{edge.v, -1}}) {
        if (slot[end])
          row[*slot[end]] += sign;
        else
          rhs -= sign * known[end]->integer();
      }
      a.push_back(std::move(row));
      b.push_back(rhs);
      if (!slot[edge.u] || !slot[edge.v]) {
        const VertexId x = slot[edge.u] ? edge.u : edge.v;
        const VertexId kn = slot[edge.u] ? edge.v : edge.u;
        single.push_back({x, kn, *known[kn], edge.label});
      }
    }
    const auto solution = lattice::solve_linear_system(a, b, cols);
    if (!solution) {
      return {std::nullopt, NoExtension{"the congruences on the unknown vertices are inconsistent",
                                        integer_conflict(single)}};
    }
    Matrix projected;
    for (const Vector& kv : solution->kernel) projected.emplace_back(kv.begin(), kv.begin() + k);
    const Matrix h = lattice::hermite_basis(std::move(projected), k);
    Vector x(solution->particular.begin(), solution->particular.begin() + k);
    // The lattice contains lcm * e_i for each i, so h has a pivot in every column.
    for (const Vector& row : h) {
      const auto pivot = std::find_if(row.begin(), row.end(), [](const Integer& c) { return c != 0; });
      const std::size_t c = static_cast<std::size_t>(pivot - row.begin());
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), x[c].get_mpz_t(), row[c].get_mpz_t());
      for (std::size_t j = 0; j < k; ++j) x[j] -= q * row[j];
    }
    for (std::size_t i = 0; i < k; ++i) known[unknowns[i]] = ring->from_integer(x[i]);
  }
  std::vector<Element> values;
  for (auto& v : known) values.push_back(std::move(*v));
  return {Spline(gp, std::move(values)), std::nullopt};
}

ExtensionResult extend_polynomial(const GraphPtr& gp, const PartialAssignment& known) {
  const Graph& g = *gp;
  const RingPtr& ring = g.ring();
  if (ring->kind() != Ring::Kind::polynomial)
    throw UnsupportedRing("extension is not offered over " + ring->describe());
  std::optional<VertexId> target;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (known[v]) continue;
    if (target) throw UnsupportedRing("over polynomial rings only a single unknown vertex can be extended");
    target = v;
  }
  std::vector<Element> values;
  if (target) {
    const auto cs = constraints_at(g, *target, known);
    Element x = ring->zero();
    if (ring->is_univariate()) {
      if (!cs.empty()) {
        std::vector<Congruence> system;
        for (const auto& c : cs) system.push_back({c.residue, c.modulus});
        const CrtOutcome solved = solve_congruences(system);
        if (!solved.solution) {
          const auto [i, j] = *solved.conflict;
          return {std::nullopt, NoExtension{"congruences at '" + g.name(*target) + "' are incompatible",
                                            std::pair{cs[i], cs[j]}}};
        }
        x = solved.solution->residue;
      }
    } else {
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].modulus.degree() != 1)
          throw UnsupportedRing("multivariate extension needs linear-form labels");
        for (std::size_t j = 0; j < i; ++j)
          if (divide_exact(cs[i].modulus, cs[j].modulus))
            throw UnsupportedRing("multivariate extension needs pairwise coprime labels");
      }
      Element modulus = ring->one();
      for (const auto& c : cs) {
        // Solve x + modulus*q = residue on the hyperplane of c.modulus.
        const Polynomial want = restrict_to_hyperplane(c.modulus, (c.residue - x).polynomial());
        const Polynomial have = restrict_to_hyperplane(c.modulus, modulus.polynomial());
        const auto q = want.divide_exact(have);
        if (!q) {
          return {std::nullopt, NoExtension{"congruence from '" + g.name(c.neighbor) +
                                                "' cannot be met together with the earlier ones",
                                            std::nullopt}};
        }
        x += modulus * ring->from_polynomial(*q);
        modulus *= c.modulus;
      }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) values.push_back(v == *target ? x : *known[v]);
  } else {
    for (const auto& v : known) values.push_back(*v);
  }
  return {Spline(gp, std::move(values)), std::nullopt};
}

}  // namespace

ExtensionResult extend(GraphPtr g, const PartialAssignment& partial) {
  if (partial.size() != g->num_vertices())
    throw ValidationError({"partial assignment must list every vertex (unknowns as null)"});
  std::vector<std::string> problems;
  for (VertexId v = 0; v < partial.size(); ++v)
    if (partial[v] && !same_ring(partial[v]->ring(), g->ring()))
      problems.push_back("value at '" + g->name(v) + "' is not in " + g->ring()->describe());
  if (!problems.empty()) throw ValidationError(std::move(problems));
  for (const Edge& e : g->edges()) {
    if (partial[e.u] && partial[e.v] && !PrincipalIdeal(e.label).contains(*partial[e.u] - *partial[e.v]))
      problems.push_back("assigned values on edge (" + g->name(e.u) + ", " + g->name(e.v) + ") already conflict");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  if (g->ring()->is_integral()) return extend_integral(g, partial);
  return extend_polynomial(g, partial);
}

}  // namespace gkm
