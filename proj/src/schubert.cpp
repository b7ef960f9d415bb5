#include "gkm/schubert.hpp"

#include <algorithm>
#include <map>

#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"

namespace gkm {

ReducedWord reduced_word(const Permutation& w) {
  ReducedWord word;
  Permutation cur = w;
  const std::size_t n = w.size();
  for (;;) {
    std::size_t i = 1;
    while (i < n && cur(i) < cur(i + 1)) ++i;
    if (i >= n) break;
    word.insert(word.begin(), i);
    cur = cur * Permutation::simple(n, i);
  }
  return word;
}

namespace {

void collect_words(const Permutation& w, ReducedWord& suffix, std::vector<ReducedWord>& out) {
  const std::size_t n = w.size();
  bool any = false;
  for (std::size_t i = 1; i < n; ++i) {
    if (w(i) < w(i + 1)) continue;
    any = true;
    suffix.push_back(i);
    collect_words(w * Permutation::simple(n, i), suffix, out);
    suffix.pop_back();
  }
  if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}

void require_polynomial_ring(const RingPtr& ring, std::size_t n) {
  if (ring->kind() != Ring::Kind::polynomial || ring->num_variables() < n)
    throw RingMismatch("need a polynomial ring with at least " + std::to_string(n) + " variables, got " +
                       ring->describe());
}

}  // namespace

std::vector<ReducedWord> all_reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  ReducedWord suffix;
  collect_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation word_product(std::size_t n, const ReducedWord& word) {
  Permutation p(n);
  for (std::size_t i : word) {
    if (i < 1 || i >= n) throw ValidationError({"letter " + std::to_string(i) + " is not a simple reflection of S_" + std::to_string(n)});
    p = p * Permutation::simple(n, i);
  }
  return p;
}

Element billey(const RingPtr& ring, std::size_t n, const ReducedWord& word, const Permutation& v) {
  require_polynomial_ring(ring, n);
  if (v.size() != n) throw ValidationError({"v is not in S_" + std::to_string(n)});
  if (word_product(n, word).length() != word.size()) throw ValidationError({"word is not reduced"});
  // Subwords are processed left to right; a subword of length l(v) with
  // product v is reduced, so every partial product must grow in length.
  std::map<Permutation, Element> partial{{Permutation(n), ring->one()}};
  Permutation prefix(n);
  for (std::size_t i : word) {
    const Element root = poly_permute(prefix, ring->variable(i) - ring->variable(i - 1));
    const Permutation s = Permutation::simple(n, i);
    std::map<Permutation, Element> next = partial;
    for (const auto& [u, value] : partial) {
      Permutation us = u * s;
      if (us.length() != u.length() + 1) continue;
      auto [it, inserted] = next.try_emplace(std::move(us), value * root);
      if (!inserted) it->second += value * root;
    }
    partial = std::move(next);
    prefix = prefix * s;
  }
  const auto it = partial.find(v);
  return it == partial.end() ? ring->zero() : it->second;
}

Spline schubert_class(GraphPtr bruhat, const Permutation& v) {
  const std::size_t n = v.size();
  require_polynomial_ring(bruhat->ring(), n);
  std::vector<Element> values;
  for (const Permutation& w : bruhat->permutations()) {
    if (w.size() != n) throw ValidationError({"graph vertices are not in S_" + std::to_string(n)});
    values.push_back(billey(bruhat->ring(), n, reduced_word(w), v));
  }
  return Spline(std::move(bruhat), std::move(values));
}

std::vector<Spline> schubert_basis(GraphPtr bruhat) {
  std::vector<Spline> out;
  for (const Permutation& v : bruhat->permutations()) out.push_back(schubert_class(bruhat, v));
  return out;
}

namespace {

VertexId locate(const Graph& g, const Permutation& w, const char* action) {
  const auto v = g.vertex_of(w);
  if (!v) throw Error(std::string("graph is not stable under the ") + action + " action");
  return *v;
}

/// `source[x]` is the vertex whose value moves to x; `twist` permutes the
/// variables of the moved values. Checks that edges map to edges with
/// matching ideals.
Spline transport(const Spline& p, const std::vector<VertexId>& source, const Permutation& twist,
                 const char* action) {
  const Graph& g = p.graph_ref();
  for (const Edge& e : g.edges()) {
    const auto pre = g.find_edge(source[e.u], source[e.v]);
    if (!pre || !(PrincipalIdeal(poly_permute(twist, g.edge(*pre).label)) == PrincipalIdeal(e.label)))
      throw Error(std::string("graph is not stable under the ") + action + " action");
  }
  std::vector<Element> values;
  for (VertexId x = 0; x < g.num_vertices(); ++x) values.push_back(poly_permute(twist, p[source[x]]));
  return Spline(p.graph(), std::move(values));
}

}  // namespace

Spline right_action(const Permutation& v, const Spline& p) {
  const Graph& g = p.graph_ref();
  std::vector<VertexId> source;
  for (const Permutation& w : g.permutations()) source.push_back(locate(g, w * v, "right"));
  return transport(p, source, Permutation(v.size()), "right");
}

Spline left_action(const Permutation& v, const Spline& p) {
  const Graph& g = p.graph_ref();
  const Permutation inv = v.inverse();
  std::vector<VertexId> source;
  for (const Permutation& w : g.permutations()) source.push_back(locate(g, inv * w, "left"));
  return transport(p, source, v, "left");
}

Spline divided_difference(std::size_t i, const Spline& p) {
  const Graph& g = p.graph_ref();
  const std::size_t n = g.permutations().empty() ? 0 : g.permutation(0).size();
  if (i < 1 || i >= n) throw ValidationError({"no simple reflection s_" + std::to_string(i) + " in S_" + std::to_string(n)});
  const RingPtr& ring = g.ring();
  require_polynomial_ring(ring, n);
  const Spline moved = left_action(Permutation::simple(n, i), p);
  const Element root = ring->variable(i) - ring->variable(i - 1);
  std::vector<Element> values;
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    auto q = divide_exact(p[w] - moved[w], root);
    if (!q) throw Error("divided difference is not exact at vertex '" + g.name(w) + "'");
    values.push_back(std::move(*q));
  }
  return Spline(p.graph(), std::move(values));
}

OrbitClass orbit_class(GraphPtr g, const Element& seed) {
  if (!same_ring(seed.ring(), g->ring())) throw RingMismatch("seed is not in the graph's ring");
  OrbitClass out;
  for (const Permutation& w : g->permutations()) out.values.push_back(poly_permute(w, seed));
  out.check = verify(*g, out.values);
  if (out.check.ok) out.spline = Spline(std::move(g), out.values);
  return out;
}

bool is_invariant(const Spline& p) {
  const Graph& g = p.graph_ref();
  const std::size_t n = g.permutations().empty() ? 0 : g.permutation(0).size();
  for (std::size_t i = 1; i < n; ++i)
    if (!(left_action(Permutation::simple(n, i), p) == p)) return false;
  return true;
}

}  // namespace gkm
