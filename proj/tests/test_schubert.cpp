#include <doctest.h>

#include <algorithm>

#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"
#include "gkm/moment_graphs.hpp"
#include "gkm/schubert.hpp"
#include "support.hpp"

using namespace gkm;
using gkm::test::make_rng;
using gkm::test::uniform;

namespace {

GraphPtr bruhat3() {
  static const GraphPtr g = share(bruhat_graph(3));
  return g;
}

Permutation perm(const char* text, std::size_t n = 3) { return Permutation::parse(text, n); }

std::vector<Element> values(const std::vector<std::string>& xs) { return test::parse_all(bruhat3()->ring(), xs); }

/// Bruhat order by the tableau criterion: v <= w iff for every k the sorted
/// first k entries of v are entrywise at most those of w.
bool bruhat_le(const Permutation& v, const Permutation& w) {
  auto a = v.one_line();
  auto b = w.one_line();
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<int> x(a.begin(), a.begin() + static_cast<long>(k));
    std::vector<int> y(b.begin(), b.begin() + static_cast<long>(k));
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] > y[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("permutation notation and composition") {
  auto s12 = perm("(12)");
  auto s23 = perm("(23)");
  CHECK((s12 * s23).one_line_string() == "[2,3,1]");
  CHECK((s23 * s12).one_line_string() == "[3,1,2]");
  CHECK(perm("(13)") == s12 * s23 * s12);
  CHECK(perm("[3,1,2]") == s23 * s12);
  CHECK(perm("(1 3)").one_line_string() == "[3,2,1]");
  CHECK(perm("e").is_identity());
  CHECK((s12 * s23).cycle_string() == "(123)");
  CHECK(perm("(13)").length() == 3);
  CHECK((s12 * s23).inverse() == s23 * s12);
  CHECK(Permutation::all(4).size() == 24);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 2}), ParseError);
  CHECK_THROWS_AS(perm("(14)"), ParseError);
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation(3)).empty());
  CHECK(reduced_word(perm("(13)")) == ReducedWord{1, 2, 1});
  CHECK(reduced_word(perm("(12)")) == ReducedWord{1});
  CHECK(all_reduced_words(perm("(13)")) == std::vector<ReducedWord>{{1, 2, 1}, {2, 1, 2}});
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& w : Permutation::all(n)) {
      auto word = reduced_word(w);
      CHECK(word.size() == w.length());
      CHECK(word_product(n, word) == w);
      for (const auto& other : all_reduced_words(w)) {
        CHECK(other.size() == w.length());
        CHECK(word_product(n, other) == w);
      }
    }
  // S_4's longest element has 16 reduced words.
  CHECK(all_reduced_words(Permutation::from_one_line({4, 3, 2, 1})).size() == 16);
}

TEST_CASE("Billey's formula") {
  auto r = Ring::polynomial("t", 3);
  CHECK(billey(r, 3, {1, 2, 1}, perm("(23)")) == r->parse("t3 - t1"));
  CHECK(billey(r, 3, {2, 1, 2}, perm("(23)")) == r->parse("t3 - t1"));
  CHECK(billey(r, 3, {2, 1, 2}, Permutation(3)).is_one());
  CHECK(billey(r, 3, {1}, perm("(23)")).is_zero());
  CHECK_THROWS_AS(billey(r, 3, {1, 1}, Permutation(3)), ValidationError);
}

TEST_CASE("property: Billey's formula does not depend on the reduced word") {
  for (std::size_t n = 3; n <= 4; ++n) {
    auto r = Ring::polynomial("t", n);
    auto perms = Permutation::all(n);
    for (const auto& w : perms) {
      auto words = all_reduced_words(w);
      for (const auto& v : perms) {
        auto first = billey(r, n, words.front(), v);
        for (const auto& word : words) CHECK(billey(r, n, word, v) == first);
      }
    }
  }
}

TEST_CASE("Schubert classes of S3") {
  auto g = bruhat3();
  CHECK(schubert_class(g, Permutation(3)).values() == values({"1", "1", "1", "1", "1", "1"}));
  CHECK(schubert_class(g, perm("(12)")).values() == values({"0", "t2-t1", "0", "t2-t1", "t3-t1", "t3-t1"}));
  CHECK(schubert_class(g, perm("(23)")).values() == values({"0", "0", "t3-t2", "t3-t1", "t3-t2", "t3-t1"}));
  CHECK(schubert_class(g, perm("(13)")).values() == values({"0", "0", "0", "0", "0", "(t2-t1)(t3-t2)(t3-t1)"}));
  CHECK(schubert_class(g, perm("(12)(23)")).values() ==
        values({"0", "0", "0", "(t2-t1)(t3-t1)", "0", "(t2-t1)(t3-t1)"}));
  CHECK(schubert_class(g, perm("(23)(12)")).values() ==
        values({"0", "0", "0", "0", "(t3-t2)(t3-t1)", "(t3-t2)(t3-t1)"}));
}

TEST_CASE("property: Schubert classes flow up with product leading values") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto g = share(bruhat_graph(n));
    auto basis = schubert_basis(g);
    REQUIRE(basis.size() == g->num_vertices());
    for (VertexId vi = 0; vi < g->num_vertices(); ++vi) {
      const auto& v = g->permutation(vi);
      const auto& sigma = basis[vi];
      for (VertexId wi = 0; wi < g->num_vertices(); ++wi)
        CHECK(sigma[wi].is_zero() == !bruhat_le(v, g->permutation(wi)));
      // The leading value is the product of the labels on edges down from v.
      Element down = g->ring()->one();
      for (auto e : g->incident_edges(vi)) {
        const auto& edge = g->edge(e);
        VertexId other = edge.u == vi ? edge.v : edge.u;
        if (g->permutation(other).length() < v.length()) down *= edge.label;
      }
      CHECK(PrincipalIdeal(sigma[vi]) == PrincipalIdeal(down));
    }
  }
}

TEST_CASE("right and left actions") {
  auto g = bruhat3();
  auto sigma23 = schubert_class(g, perm("(23)"));
  CHECK(right_action(perm("(23)"), sigma23).values() ==
        values({"t3-t2", "t3-t1", "0", "0", "t3-t1", "t3-t2"}));
  CHECK(left_action(perm("(23)"), sigma23).values() == values({"t2-t3", "t2-t3", "0", "t2-t1", "0", "t2-t1"}));
  CHECK(right_action(Permutation(3), sigma23) == sigma23);
  CHECK(left_action(Permutation(3), sigma23) == sigma23);

  auto h = share(hessenberg_graph({2, 2, 3}));
  auto one = Spline::constant(h, h->ring()->one());
  CHECK_THROWS_AS(right_action(perm("(23)"), one), Error);
  CHECK_NOTHROW(left_action(perm("(23)"), one));
  auto p2 = share(projective_space(3));
  CHECK_THROWS(left_action(perm("(12)"), Spline::constant(p2, p2->ring()->one())));
}

TEST_CASE("property: actions are compatible with the module structure") {
  auto rng = make_rng(41);
  auto g = share(bruhat_graph(3));
  auto r = g->ring();
  auto basis = schubert_basis(g);
  auto perms = Permutation::all(3);
  std::vector<Element> invariants = {r->parse("t1 + t2 + t3"), r->parse("t1*t2 + t1*t3 + t2*t3"), r->parse("t1*t2*t3")};
  for (int trial = 0; trial < 40; ++trial) {
    auto pick = [&] { return basis[static_cast<std::size_t>(uniform(rng, 0, 5))]; };
    Spline p = pick().scaled(test::random_polynomial(rng, r, 1)) + pick();
    Spline q = pick();
    const auto& u = perms[static_cast<std::size_t>(uniform(rng, 0, 5))];
    const auto& v = perms[static_cast<std::size_t>(uniform(rng, 0, 5))];
    const auto& f = invariants[static_cast<std::size_t>(uniform(rng, 0, 2))];
    CHECK(right_action(v, p + q) == right_action(v, p) + right_action(v, q));
    CHECK(left_action(v, p + q) == left_action(v, p) + left_action(v, q));
    CHECK(right_action(v, p.scaled(f)) == right_action(v, p).scaled(f));
    CHECK(left_action(v, p.scaled(f)) == left_action(v, p).scaled(f));
    CHECK(left_action(u, left_action(v, p)) == left_action(u * v, p));
    CHECK(right_action(u, right_action(v, p)) == right_action(u * v, p));
    CHECK(left_action(u, right_action(v, p)) == right_action(v, left_action(u, p)));
  }
}

TEST_CASE("divided differences") {
  auto g = bruhat3();
  auto ones = Spline::constant(g, g->ring()->one());
  CHECK(divided_difference(1, schubert_class(g, perm("(12)"))) == ones);
  CHECK(divided_difference(1, schubert_class(g, perm("(23)"))).is_zero());
  CHECK(divided_difference(1, ones).is_zero());
  CHECK(divided_difference(2, ones).is_zero());
}

TEST_CASE("property: divided differences lower Schubert classes") {
  for (std::size_t n = 3; n <= 4; ++n) {
    auto g = share(bruhat_graph(n));
    auto basis = schubert_basis(g);
    for (std::size_t i = 1; i < n; ++i) {
      auto s = Permutation::simple(n, i);
      for (VertexId vi = 0; vi < g->num_vertices(); ++vi) {
        const auto& v = g->permutation(vi);
        auto d = divided_difference(i, basis[vi]);
        if ((s * v).length() < v.length()) {
          CHECK(d == basis[*g->vertex_of(s * v)]);
        } else {
          CHECK(d.is_zero());
        }
        CHECK(divided_difference(i, d).is_zero());
      }
    }
  }
}

TEST_CASE("orbit classes") {
  auto g = bruhat3();
  auto r = g->ring();
  struct Panel {
    const char* seed;
    std::vector<std::string> printed;
  };
  std::vector<Panel> panels = {
      {"1", {"1", "1", "1", "1", "1", "1"}},
      {"t1", {"t1", "t2", "t1", "t2", "t3", "t3"}},
      {"t2", {"t2", "t1", "t3", "t3", "t1", "t2"}},
      {"t1^2*t2", {"t1^2*t2", "t1*t2^2", "t1^2*t3", "t2^2*t3", "t1*t3^2", "t2*t3^2"}},
      {"t1*t2", {"t1*t2", "t1*t2", "t1*t3", "t2*t3", "t1*t3", "t2*t3"}},
      {"t2*t3", {"t2*t3", "t1*t3", "t2*t3", "t1*t3", "t1*t2", "t1*t2"}},
  };
  for (const auto& panel : panels) {
    auto oc = orbit_class(g, r->parse(panel.seed));
    CHECK(oc.values == values(panel.printed));
    CHECK(oc.check.ok);
    REQUIRE(oc.spline);
    CHECK(is_invariant(*oc.spline));
  }
  // The other convention, seed t1*t2^2, does not reproduce the fourth panel.
  CHECK(orbit_class(g, r->parse("t1*t2^2")).values != values(panels[3].printed));

  CHECK(is_invariant(Spline::constant(g, r->one())));
  CHECK_FALSE(is_invariant(schubert_class(g, perm("(12)"))));

  auto squared = share(power_labels(*g, 1));
  auto bad = orbit_class(squared, r->parse("t1"));
  CHECK_FALSE(bad.check.ok);
  CHECK_FALSE(bad.spline);
}

TEST_CASE("symmetric classes on the projective plane") {
  auto g = share(projective_space(3));
  auto r = g->ring();
  for (const auto& vals : std::vector<std::vector<std::string>>{
           {"1", "1", "1"}, {"t1", "t2", "t3"}, {"t1^2", "t2^2", "t3^2"}})
    CHECK(verify(*g, test::parse_all(r, vals)).ok);
}
