#include "gkm/ideal.hpp"

#include <map>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer int_lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// gcd(a, m) for a residue a in Z/m; the zero residue gives m.
Integer mod_ideal_divisor(const Element& a) { return int_gcd(a.integer(), a.ring()->modulus()); }

void enumerate_monomials(std::size_t nvars, unsigned max_degree, Monomial& current, std::size_t k,
                         unsigned budget, std::vector<Monomial>& out) {
  if (k == nvars) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= budget; ++e) {
    current[k] = e;
    enumerate_monomials(nvars, max_degree, current, k + 1, budget - e, out);
  }
  current[k] = 0;
}

/// Solves q*g == a in Q[x]/(monomials of degree > d) by linear algebra on
/// the coefficients of q.
std::optional<Polynomial> truncated_divide(const Polynomial& a, const Polynomial& g, unsigned d) {
  const std::size_t n = a.num_variables();
  std::vector<Monomial> monos;
  Monomial scratch(n, 0);
  enumerate_monomials(n, d, scratch, 0, d, monos);
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < monos.size(); ++i) row_of[monos[i]] = i;

  const std::size_t rows = monos.size();
  const std::size_t cols = monos.size();
  // Augmented matrix [A | b], A[mu][m] = coefficient of mu in m*g.
  std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols + 1, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [gm, gc] : g.terms()) {
      Monomial prod(n);
      for (std::size_t k = 0; k < n; ++k) prod[k] = monos[j][k] + gm[k];
      if (total_degree(prod) > d) continue;
      mat[row_of.at(prod)][j] += gc;
    }
  }
  for (const auto& [am, ac] : a.terms()) mat[row_of.at(am)][cols] = ac;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && mat[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(mat[p], mat[r]);
    const Rational inv = 1 / mat[r][c];
    for (auto& x : mat[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || mat[i][c] == 0) continue;
      const Rational f = mat[i][c];
      for (std::size_t k = c; k <= cols; ++k) mat[i][k] -= f * mat[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (mat[i][cols] != 0) return std::nullopt;
  Polynomial q(n);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) q.add_term(monos[pivot_col[i]], mat[i][cols]);
  return q;
}

}  // namespace

void require_pid(const RingPtr& ring, std::string_view operation) {
  if (!ring->is_pid()) {
    throw UnsupportedRing(std::string(operation) + " needs a principal ideal domain, got " +
                          ring->describe());
  }
}

// --- exact division --------------------------------------------------------

std::optional<Element> divide_exact(const Element& a, const Element& b) {
  require_same_ring(a, b, "division");
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case Ring::Kind::integers: {
      if (b.is_zero()) return a.is_zero() ? std::optional<Element>(ring->zero()) : std::nullopt;
      if (!mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
      return ring->from_integer(q);
    }
    case Ring::Kind::integers_mod: {
      const Integer& m = ring->modulus();
      const Integer g = int_gcd(b.integer(), m);
      if (!mpz_divisible_p(a.integer().get_mpz_t(), g.get_mpz_t())) return std::nullopt;
      const Integer mg = m / g;
      if (mg == 1) return ring->zero();
      Integer inv;
      const Integer bg = b.integer() / g;
      mpz_invert(inv.get_mpz_t(), bg.get_mpz_t(), mg.get_mpz_t());
      return ring->from_integer(Integer((a.integer() / g) * inv));
    }
    case Ring::Kind::polynomial: {
      auto q = a.polynomial().divide_exact(b.polynomial());
      if (!q) return std::nullopt;
      return ring->from_polynomial(*q);
    }
    case Ring::Kind::truncated: {
      auto q = truncated_divide(a.polynomial(), b.polynomial(), ring->max_degree());
      if (!q) return std::nullopt;
      return ring->from_polynomial(*q);
    }
  }
  return std::nullopt;
}

Polynomial restrict_to_hyperplane(const Element& g, const Polynomial& x) {
  if (g.ring()->kind() != Ring::Kind::polynomial || g.degree() != 1) {
    throw UnsupportedRing("hyperplane substitution needs a linear form in a polynomial ring");
  }
  const Polynomial& form = g.polynomial();
  const std::size_t n = form.num_variables();
  // Highest variable present in the form.
  std::size_t var = n;
  Rational coeff;
  for (std::size_t k = n; k-- > 0 && var == n;) {
    for (const auto& [m, c] : form.terms()) {
      if (m[k] == 1) {
        var = k;
        coeff = c;
        break;
      }
    }
  }
  // On g = 0: var = -(g - coeff*var)/coeff.
  Polynomial rest = form - Polynomial::variable(n, var).scaled(coeff);
  const Polynomial value = (-rest).scaled(1 / coeff);
  return x.substitute(var, value);
}

bool linear_form_divides(const Element& g, const Element& x) {
  require_same_ring(g, x, "ideal membership");
  return restrict_to_hyperplane(g, x.polynomial()).is_zero();
}

// --- ideals ----------------------------------------------------------------

namespace {

Element canonical_generator(const Element& g) {
  const RingPtr& ring = g.ring();
  switch (ring->kind()) {
    case Ring::Kind::integers: return ring->from_integer(Integer(abs(g.integer())));
    case Ring::Kind::integers_mod: return ring->from_integer(mod_ideal_divisor(g));
    case Ring::Kind::polynomial:
    case Ring::Kind::truncated: return ring->from_polynomial(g.polynomial().monic());
  }
  return g;
}

}  // namespace

PrincipalIdeal::PrincipalIdeal(Element generator) : generator_(canonical_generator(generator)) {}

bool PrincipalIdeal::is_unit() const { return contains(generator_.ring()->one()); }

bool PrincipalIdeal::contains(const Element& x) const {
  require_same_ring(x, generator_, "ideal membership");
  if (x.is_zero()) return true;
  if (generator_.is_zero()) return false;
  if (x.ring()->kind() == Ring::Kind::polynomial && generator_.degree() == 1) {
    return linear_form_divides(generator_, x);
  }
  return divide_exact(x, generator_).has_value();
}

PrincipalIdeal ideal_sum(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(gcd(a.generator(), b.generator()));
}

PrincipalIdeal ideal_intersect(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(lcm(a.generator(), b.generator()));
}

// --- PID arithmetic --------------------------------------------------------

namespace {

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divide_univariate(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace

Element gcd(const Element& a, const Element& b) {
  require_same_ring(a, b, "gcd");
  const RingPtr& ring = a.ring();
  require_pid(ring, "gcd");
  switch (ring->kind()) {
    case Ring::Kind::integers: return ring->from_integer(int_gcd(a.integer(), b.integer()));
    case Ring::Kind::integers_mod:
      return ring->from_integer(int_gcd(int_gcd(a.integer(), b.integer()), ring->modulus()));
    default: return ring->from_polynomial(poly_gcd(a.polynomial(), b.polynomial()));
  }
}

Element lcm(const Element& a, const Element& b) {
  require_same_ring(a, b, "lcm");
  const RingPtr& ring = a.ring();
  require_pid(ring, "lcm");
  switch (ring->kind()) {
    case Ring::Kind::integers: return ring->from_integer(int_lcm(a.integer(), b.integer()));
    case Ring::Kind::integers_mod:
      return ring->from_integer(int_lcm(mod_ideal_divisor(a), mod_ideal_divisor(b)));
    default: {
      if (a.is_zero() || b.is_zero()) return ring->zero();
      const Polynomial g = poly_gcd(a.polynomial(), b.polynomial());
      return ring->from_polynomial((a.polynomial() * b.polynomial()).divide_exact(g)->monic());
    }
  }
}

Bezout extended_gcd(const Element& a, const Element& b) {
  require_same_ring(a, b, "extended gcd");
  const RingPtr& ring = a.ring();
  if (ring->kind() == Ring::Kind::integers) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.integer().get_mpz_t(),
               b.integer().get_mpz_t());
    return {ring->from_integer(g), ring->from_integer(s), ring->from_integer(t)};
  }
  if (!ring->is_univariate()) {
    throw UnsupportedRing("extended gcd needs Z or a univariate polynomial ring, got " +
                          ring->describe());
  }
  Polynomial r0 = a.polynomial(), r1 = b.polynomial();
  Polynomial s0 = Polynomial::constant(1, 1), s1(1);
  Polynomial t0(1), t1 = Polynomial::constant(1, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divide_univariate(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (!r0.is_zero()) {
    const Rational inv = 1 / r0.leading_term().second;
    r0 = r0.scaled(inv);
    s0 = s0.scaled(inv);
    t0 = t0.scaled(inv);
  }
  return {ring->from_polynomial(r0), ring->from_polynomial(s0), ring->from_polynomial(t0)};
}

Element reduce_mod(const Element& a, const Element& m) {
  require_same_ring(a, m, "reduction");
  if (m.is_zero()) return a;
  const RingPtr& ring = a.ring();
  if (ring->kind() == Ring::Kind::integers) {
    Integer r;
    const Integer mm = abs(m.integer());
    mpz_fdiv_r(r.get_mpz_t(), a.integer().get_mpz_t(), mm.get_mpz_t());
    return ring->from_integer(r);
  }
  if (ring->is_univariate()) return ring->from_polynomial(a.polynomial().divide_univariate(m.polynomial()).second);
  throw UnsupportedRing("canonical residues need Z or a univariate polynomial ring, got " +
                        ring->describe());
}

Element poly_permute(const Permutation& w, const Element& p) {
  const RingPtr& ring = p.ring();
  if (!ring->is_polynomial_kind()) {
    throw UnsupportedRing("permuting variables needs a polynomial ring, got " + ring->describe());
  }
  const std::size_t n = ring->num_variables();
  if (w.size() > n) {
    throw RingMismatch("permutation of S_" + std::to_string(w.size()) + " acting on " +
                       std::to_string(n) + " variables");
  }
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t target = k < w.size() ? w(k + 1) - 1 : k;
    images.push_back(Polynomial::variable(n, target));
  }
  return ring->from_polynomial(p.polynomial().substitute_all(images));
}

}  // namespace gkm
