#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a monomial in a fixed number of variables.
using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic comparison with the last variable weighted highest,
/// so that for variables t1, t2, t3 the leading term of `t3 - t1` is `t3`.
std::strong_ordering graded_compare(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_compare(a, b) > 0; }
};

/// A multivariate polynomial with rational coefficients in canonical form:
/// terms sorted by decreasing graded order, no zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_variables) : nvars_(num_variables) {}

  static Polynomial constant(std::size_t num_variables, const Rational& c);
  static Polynomial variable(std::size_t num_variables, std::size_t index);

  std::size_t num_variables() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  const std::pair<const Monomial, Rational>& leading_term() const { return *terms_.begin(); }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;

  /// Drops every monomial of total degree above `max_degree`.
  Polynomial truncated(unsigned max_degree) const;
  Polynomial pow(unsigned e) const;

  /// Exact quotient by `g`, or nullopt when `g` does not divide this.
  /// Division by a single polynomial leaves remainder zero iff it divides,
  /// so the multivariate division algorithm decides membership exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  /// Euclidean division for univariate polynomials: returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divide_univariate(const Polynomial& g) const;

  /// Ring homomorphism sending variable i to `images[i]`; all images must
  /// share a variable count, which becomes the result's.
  Polynomial substitute_all(const std::vector<Polynomial>& images) const;

  /// Replaces one variable by a polynomial in the same variables.
  Polynomial substitute(std::size_t index, const Polynomial& value) const;

  /// Divides through by the leading coefficient.
  Polynomial monic() const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Decimal or `p/q` rendering of a rational.
std::string rational_string(const Rational& q);

}  // namespace gkm
