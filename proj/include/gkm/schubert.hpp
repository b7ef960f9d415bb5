#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/spline.hpp"

namespace gkm {

/// Word of simple reflections: letter i stands for (i, i+1).
using ReducedWord = std::vector<std::size_t>;

/// Deterministic reduced word: repeatedly strip the smallest right descent.
ReducedWord reduced_word(const Permutation& w);

/// Every reduced word of w, in lexicographic order.
std::vector<ReducedWord> all_reduced_words(const Permutation& w);

/// s_{i1} s_{i2} ... s_{ik} in S_n.
Permutation word_product(std::size_t n, const ReducedWord& word);

/// Billey's formula for the restriction of the Schubert class of v to the
/// fixed point w = word_product(n, word): a sum over subwords of minimal size
/// multiplying to v. The letter i at position j contributes the root
/// t_{i+1} - t_i acted on by the product of the letters before j.
/// Throws ValidationError for a non-reduced word.
Element billey(const RingPtr& ring, std::size_t n, const ReducedWord& word, const Permutation& v);

/// The Schubert class of v on a Bruhat graph: the value at w is Billey's
/// formula for w's reduced word.
Spline schubert_class(GraphPtr bruhat, const Permutation& v);

/// Schubert classes for every vertex, in vertex order.
std::vector<Spline> schubert_basis(GraphPtr bruhat);

/// (v * p)_w = p_{wv}.
Spline right_action(const Permutation& v, const Spline& p);
/// (v . p)_w = v(p_{v^-1 w}), with v permuting the variables as well.
Spline left_action(const Permutation& v, const Spline& p);

/// d_i p = (p - s_i . p) / (t_{i+1} - t_i), using the left action. With this
/// sign, d_i of the Schubert class of v is the class of s_i v when s_i v is
/// shorter than v and zero otherwise. Throws Error when some vertex is not
/// divisible.
Spline divided_difference(std::size_t i, const Spline& p);

struct OrbitClass {
  std::vector<Element> values;  // w(seed) at each vertex w
  Verification check;
  std::optional<Spline> spline;  // present iff the values form a spline
};

/// Transports a polynomial around a permutation-labeled graph.
OrbitClass orbit_class(GraphPtr g, const Element& seed);

/// True iff the left action of every simple reflection fixes p.
bool is_invariant(const Spline& p);

}  // namespace gkm
