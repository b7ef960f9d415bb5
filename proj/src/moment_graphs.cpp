#include "gkm/moment_graphs.hpp"

#include <algorithm>

#include "gkm/errors.hpp"
#include "gkm/schubert.hpp"

namespace gkm {

namespace {

Element difference(const RingPtr& ring, std::size_t j, std::size_t i) {
  return ring->variable(j - 1) - ring->variable(i - 1);
}

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f > cap) return cap + 1;
  }
  return f;
}

}  // namespace

Graph projective_space(std::size_t n) {
  if (n < 2) throw ValidationError({"projective space needs n >= 2"});
  const RingPtr ring = Ring::polynomial("t", n);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) edges.push_back({i - 1, j - 1, difference(ring, j, i)});
  return Graph::build(ring, std::move(names), std::move(edges));
}

Graph alfeld_dual(std::size_t n) {
  if (n < 1) throw ValidationError({"the Alfeld split needs n >= 1"});
  const RingPtr ring = Ring::polynomial("x", n);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n + 1; ++i) names.push_back("F" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n + 1; ++j) {
      const Element label = j <= n ? difference(ring, i, j) : ring->variable(i - 1);
      edges.push_back({i - 1, j - 1, label});
    }
  return Graph::build(ring, std::move(names), std::move(edges));
}

Element alfeld_map(const Element& p, const RingPtr& target) {
  const RingPtr& source = p.ring();
  const std::size_t n = target->num_variables();
  if (source->kind() != Ring::Kind::polynomial || target->kind() != Ring::Kind::polynomial ||
      source->num_variables() != n + 1)
    throw RingMismatch("the Alfeld map goes from n+1 to n variables");
  std::vector<Polynomial> images;
  const Polynomial x1 = Polynomial::variable(n, 0);
  for (std::size_t i = 0; i < n; ++i) images.push_back(x1 - Polynomial::variable(n, i));
  images.push_back(x1);
  return target->from_polynomial(p.polynomial().substitute_all(images));
}

Spline alfeld_transport(const Spline& p, GraphPtr target) {
  const Graph& src = p.graph_ref();
  if (src.num_vertices() != target->num_vertices())
    throw ValidationError({"Alfeld transport needs projective_space(n+1) and alfeld_dual(n)"});
  std::vector<Element> values;
  for (const Element& x : p.values()) values.push_back(alfeld_map(x, target->ring()));
  return Spline(std::move(target), std::move(values));
}

std::vector<Spline> projective_basis(GraphPtr pn) {
  const std::size_t n = pn->num_vertices();
  const RingPtr& ring = pn->ring();
  std::vector<Spline> out;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Element> values;
    for (std::size_t j = 1; j <= n; ++j) {
      Element value = j >= k ? ring->one() : ring->zero();
      if (j >= k)
        for (std::size_t i = 1; i < k; ++i) value *= difference(ring, j, i);
      values.push_back(value);
    }
    out.emplace_back(pn, std::move(values));
  }
  return out;
}

std::vector<Permutation> bruhat_vertex_order(std::size_t n) {
  std::vector<std::pair<ReducedWord, Permutation>> keyed;
  for (Permutation& w : Permutation::all(n)) keyed.emplace_back(reduced_word(w), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Permutation> out;
  for (auto& [word, w] : keyed) out.push_back(std::move(w));
  return out;
}

namespace {

std::vector<std::string> one_line_names(const std::vector<Permutation>& perms) {
  std::vector<std::string> names;
  for (const Permutation& w : perms) {
    std::string name;
    const bool wide = w.size() > 9;
    for (std::size_t i = 1; i <= w.size(); ++i) {
      if (wide && i > 1) name += ',';
      name += std::to_string(w(i));
    }
    names.push_back(name);
  }
  return names;
}

/// Builds the graph on S_n joining w to w*(ij) for the allowed (i, j).
Graph permutation_graph(std::size_t n, const std::vector<std::size_t>& h) {
  const RingPtr ring = Ring::polynomial("t", n);
  std::vector<Permutation> perms = bruhat_vertex_order(n);
  std::map<Permutation, VertexId> index;
  for (VertexId v = 0; v < perms.size(); ++v) index.emplace(perms[v], v);
  std::vector<Edge> edges;
  for (VertexId v = 0; v < perms.size(); ++v) {
    const Permutation& w = perms[v];
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= h[i - 1]; ++j) {
        const VertexId u = index.at(w * Permutation::transposition(n, i, j));
        if (u < v) continue;
        // w(ij) = (w(i) w(j)) w, so the label is the Bruhat one for that pair.
        const std::size_t a = std::min(w(i), w(j));
        const std::size_t b = std::max(w(i), w(j));
        edges.push_back({v, u, difference(ring, b, a)});
      }
  }
  std::vector<std::string> names = one_line_names(perms);
  return Graph::build(ring, std::move(names), std::move(edges), std::move(perms));
}

}  // namespace

Graph bruhat_graph(std::size_t n, std::size_t max_vertices) {
  if (n < 2) throw ValidationError({"the Bruhat graph needs n >= 2"});
  if (factorial_capped(n, max_vertices) > max_vertices)
    throw BoundExceeded("S_" + std::to_string(n) + " exceeds the vertex bound " + std::to_string(max_vertices));
  return permutation_graph(n, std::vector<std::size_t>(n, n));
}

Graph hessenberg_graph(const std::vector<std::size_t>& h, std::size_t max_vertices) {
  const std::size_t n = h.size();
  std::vector<std::string> problems;
  if (n < 1) problems.push_back("Hessenberg function must be nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i] < i + 1 || h[i] > n)
      problems.push_back("h(" + std::to_string(i + 1) + ") = " + std::to_string(h[i]) + " is outside [" +
                         std::to_string(i + 1) + ", " + std::to_string(n) + "]");
    if (i > 0 && h[i] < h[i - 1]) problems.push_back("Hessenberg function must be nondecreasing");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  if (factorial_capped(n, max_vertices) > max_vertices)
    throw BoundExceeded("S_" + std::to_string(n) + " exceeds the vertex bound " + std::to_string(max_vertices));
  return permutation_graph(n, h);
}

Graph johnson_grassmannian(std::size_t k, std::size_t n, std::size_t max_vertices) {
  if (k < 1 || k >= n) throw ValidationError({"Grassmannian needs 1 <= k < n"});
  // Subsets in lexicographic order, as bitmasks over {1..n}.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i + 1);
    subsets.push_back(std::move(s));
    if (subsets.size() > max_vertices)
      throw BoundExceeded("G(" + std::to_string(k) + "," + std::to_string(n) + ") exceeds the vertex bound " +
                          std::to_string(max_vertices));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  const RingPtr ring = Ring::polynomial("t", n);
  std::vector<std::string> names;
  for (const auto& s : subsets) {
    std::string name;
    for (std::size_t x : s) name += (name.empty() ? "" : ",") + std::to_string(x);
    names.push_back(name);
  }
  std::vector<Edge> edges;
  for (VertexId a = 0; a < subsets.size(); ++a)
    for (VertexId b = a + 1; b < subsets.size(); ++b) {
      std::vector<std::size_t> only_a, only_b;
      std::set_difference(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                          std::back_inserter(only_a));
      std::set_difference(subsets[b].begin(), subsets[b].end(), subsets[a].begin(), subsets[a].end(),
                          std::back_inserter(only_b));
      if (only_a.size() != 1) continue;
      const std::size_t i = std::min(only_a[0], only_b[0]);
      const std::size_t j = std::max(only_a[0], only_b[0]);
      edges.push_back({a, b, difference(ring, j, i)});
    }
  return Graph::build(ring, std::move(names), std::move(edges));
}

std::vector<long long> length_ranks(const Graph& g) {
  std::vector<long long> ranks;
  for (const Permutation& w : g.permutations()) ranks.push_back(static_cast<long long>(w.length()));
  return ranks;
}

}  // namespace gkm
