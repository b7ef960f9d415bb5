#pragma once

#include <cstddef>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/spline.hpp"

namespace gkm {

/// Default cap on generated vertex counts (7! for Bruhat-type graphs).
inline constexpr std::size_t kDefaultMaxVertices = 5040;

/// Complete graph on vertices "1".."n" over Q[t1..tn]; edge (i, j), i < j,
/// is labeled tj - ti.
Graph projective_space(std::size_t n);

/// Dual graph of the Alfeld split of an n-simplex: K_{n+1} on F1..F{n+1} over
/// Q[x1..xn], with F_iF_j labeled xi - xj for j <= n and xi for j = n + 1.
Graph alfeld_dual(std::size_t n);

/// The substitution t_i -> x1 - x_i (i <= n), t_{n+1} -> x1, which sends
/// t_{i+1} - t_i to x_i - x_{i+1} and t_{n+1} - t_n to x_n. Applied to a
/// spline on projective_space(n + 1) it yields a spline on alfeld_dual(n),
/// vertex i going to F_i. It is a ring isomorphism on translation-invariant
/// polynomials (those generated by the differences t_j - t_i).
Element alfeld_map(const Element& p, const RingPtr& target);
Spline alfeld_transport(const Spline& p, GraphPtr target);

/// The flow-up basis of projective_space(n) for the order 1 < 2 < ... < n:
/// element k is prod_{i<k} (tj - ti) at every vertex j >= k and 0 below.
std::vector<Spline> projective_basis(GraphPtr pn);

/// S_n in the vertex order used by Bruhat-type graphs: by length, then by
/// reduced word (lexicographically).
std::vector<Permutation> bruhat_vertex_order(std::size_t n);

/// Bruhat graph of S_n over Q[t1..tn]: w and (ij)w are joined by an edge
/// labeled tj - ti. Vertices are named by one-line notation ("213").
Graph bruhat_graph(std::size_t n, std::size_t max_vertices = kDefaultMaxVertices);

/// Moment graph of the regular semisimple Hessenberg variety for h: w and
/// w(ij) are joined whenever i < j <= h(i), with the Bruhat label of that pair.
Graph hessenberg_graph(const std::vector<std::size_t>& h, std::size_t max_vertices = kDefaultMaxVertices);

/// Johnson graph of k-subsets of {1..n} (names like "1,3"): A and B are joined
/// when they share k - 1 elements, labeled tj - ti for A\B = {i}, B\A = {j}
/// ordered so that i < j. For k = 1 this is projective_space(n).
Graph johnson_grassmannian(std::size_t k, std::size_t n, std::size_t max_vertices = kDefaultMaxVertices);

/// Vertex ranks by Coxeter length, for orienting Bruhat-type graphs.
std::vector<long long> length_ranks(const Graph& g);

}  // namespace gkm
