#include <doctest.h>

#include <numeric>

#include "gkm/basis_algebra.hpp"
#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"
#include "gkm/moment_graphs.hpp"
#include "gkm/schubert.hpp"
#include "support.hpp"

using namespace gkm;
using gkm::test::make_rng;
using gkm::test::uniform;

namespace {

FlowUpBasis schubert3() {
  auto g = share(bruhat_graph(3));
  std::vector<VertexId> leading(6);
  std::iota(leading.begin(), leading.end(), 0);
  return make_flow_up_basis(g, leading, schubert_basis(g));
}

/// The n = 3 classes as printed, vertices in the order e, (12), (23), (12)(23), (23)(12), (13).
std::vector<std::vector<Element>> printed_classes(const RingPtr& r) {
  const std::vector<std::vector<std::string>> text = {
      {"1", "1", "1", "1", "1", "1"},
      {"0", "t2-t1", "0", "t2-t1", "t3-t1", "t3-t1"},
      {"0", "0", "t3-t2", "t3-t1", "t3-t2", "t3-t1"},
      {"0", "0", "0", "(t2-t1)(t3-t1)", "0", "(t2-t1)(t3-t1)"},
      {"0", "0", "0", "0", "(t3-t2)(t3-t1)", "(t3-t2)(t3-t1)"},
      {"0", "0", "0", "0", "0", "(t2-t1)(t3-t2)(t3-t1)"},
  };
  std::vector<std::vector<Element>> out;
  for (const auto& row : text) out.push_back(test::parse_all(r, row));
  return out;
}

/// Triangular solve written out by hand against the printed classes: class k
/// is led by vertex k, so peel off coefficients in vertex order.
std::vector<Element> hand_solve(std::vector<Element> target, const std::vector<std::vector<Element>>& classes) {
  std::vector<Element> coeffs;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto q = classes[k][k].polynomial();
    auto c = target[k].polynomial().divide_exact(q);
    REQUIRE(c);
    Element ce = target[k].ring()->from_polynomial(*c);
    for (std::size_t w = 0; w < target.size(); ++w) target[w] -= ce * classes[k][w];
    coeffs.push_back(ce);
  }
  for (const auto& x : target) REQUIRE(x.is_zero());
  return coeffs;
}

}  // namespace

TEST_CASE("express basis elements") {
  auto b = schubert3();
  auto r = b.graph->ring();
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto c = express(b.elements[k], b);
    for (std::size_t j = 0; j < b.size(); ++j) CHECK(c[j] == (j == k ? r->one() : r->zero()));
  }
}

TEST_CASE("express over Z") {
  auto z = Ring::integers();
  auto edge = test::labeled_graph(z, 2, {{0, 1, 24}});
  auto b = make_flow_up_basis(edge, {0, 1}, {Spline(edge, test::ints(z, {1, 1})), Spline(edge, test::ints(z, {0, 24}))});
  CHECK(express(Spline(edge, test::ints(z, {1, 25})), b) == test::ints(z, {1, 1}));
  auto coarse = make_flow_up_basis(edge, {0, 1}, {Spline(edge, test::ints(z, {1, 1})), Spline(edge, test::ints(z, {0, 48}))});
  CHECK_FALSE(try_express(Spline(edge, test::ints(z, {0, 24})), coarse));
  CHECK_THROWS_AS(express(Spline(edge, test::ints(z, {0, 24})), coarse), Error);

  auto t = structure_table(b);
  CHECK(t.coefficients[1][1] == test::ints(z, {0, 24}));
}

TEST_CASE("the square of the class of (12)") {
  auto b = schubert3();
  auto r = b.graph->ring();
  const auto& s12 = b.elements[1];
  auto c = express(s12 * s12, b);
  CHECK(c[1] == r->parse("t2 - t1"));
  CHECK(c[4].is_one());
  for (std::size_t k : {0, 2, 3, 5}) CHECK(c[k].is_zero());

  auto printed = printed_classes(r);
  std::vector<Element> square;
  for (const auto& x : printed[1]) square.push_back(x * x);
  CHECK(hand_solve(square, printed) == c);
  CHECK(structure_table(b).coefficients[1][1] == c);
}

TEST_CASE("structure table of the n = 3 Schubert basis") {
  auto b = schubert3();
  auto r = b.graph->ring();
  auto t = structure_table(b);
  const std::size_t n = b.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) CHECK(t.coefficients[0][a][c] == (c == a ? r->one() : r->zero()));
    for (std::size_t d = 0; d < n; ++d) {
      CHECK(t.coefficients[a][d] == t.coefficients[d][a]);
      CHECK(combine(b, t.coefficients[a][d]) == b.elements[a] * b.elements[d]);
      // Graded: coefficient of c has degree deg(a) + deg(d) - deg(c) or vanishes.
      for (std::size_t c = 0; c < n; ++c) {
        const auto& coeff = t.coefficients[a][d][c];
        if (coeff.is_zero()) continue;
        int expected = b.elements[a][a].degree() + b.elements[d][d].degree() - b.elements[c][c].degree();
        CHECK(coeff.degree() == expected);
        CHECK(coeff.polynomial().is_homogeneous());
      }
    }
  }
}

TEST_CASE("property: expansion recovers random coefficients") {
  auto rng = make_rng(61);
  auto b = schubert3();
  auto r = b.graph->ring();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Element> coeffs;
    for (std::size_t k = 0; k < b.size(); ++k) coeffs.push_back(test::random_polynomial(rng, r, 2));
    CHECK(express(combine(b, coeffs), b) == coeffs);
  }
}

TEST_CASE("property: products associate through the table") {
  auto rng = make_rng(62);
  auto b = schubert3();
  auto t = structure_table(b);
  auto r = b.graph->ring();
  const std::size_t n = b.size();
  // Expand (x y) z with the table and compare with the direct product.
  for (int trial = 0; trial < 30; ++trial) {
    auto x = static_cast<std::size_t>(uniform(rng, 0, 5));
    auto y = static_cast<std::size_t>(uniform(rng, 0, 5));
    auto z = static_cast<std::size_t>(uniform(rng, 0, 5));
    std::vector<Element> left(n, r->zero()), right(n, r->zero());
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d) {
        left[d] += t.coefficients[x][y][c] * t.coefficients[c][z][d];
        right[d] += t.coefficients[y][z][c] * t.coefficients[x][c][d];
      }
    CHECK(left == right);
    CHECK(combine(b, left) == b.elements[x] * b.elements[y] * b.elements[z]);
  }
}

TEST_CASE("property: tables over Z reconstruct products") {
  auto rng = make_rng(63);
  auto z = Ring::integers();
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto g = test::random_graph(rng, z, n, 0.5, 20);
    auto b = flow_up_basis(g, index_ranks(*g)).basis;
    auto t = structure_table(b);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t d = 0; d < n; ++d) {
        CHECK(combine(b, t.coefficients[a][d]) == b.elements[a] * b.elements[d]);
        CHECK(t.coefficients[a][d] == t.coefficients[d][a]);
      }
  }
}
