#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

class Element;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Descriptor for one of the four supported commutative rings:
/// the integers, the integers mod m, Q[vars], and Q[vars] modulo all
/// monomials of degree above `max_degree`.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind { integers, integers_mod, polynomial, truncated };

  static RingPtr integers();
  static RingPtr integers_mod(const Integer& modulus);
  static RingPtr polynomial(std::vector<std::string> variables);
  static RingPtr truncated(std::vector<std::string> variables, unsigned max_degree);
  /// Polynomial ring in `prefix`1 .. `prefix`n.
  static RingPtr polynomial(std::string_view prefix, std::size_t n);

  Kind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  unsigned max_degree() const { return max_degree_; }

  bool is_polynomial_kind() const { return kind_ == Kind::polynomial || kind_ == Kind::truncated; }
  bool is_integral() const { return kind_ == Kind::integers || kind_ == Kind::integers_mod; }
  /// The principal ideal domains this library handles effectively:
  /// Z, Z/m (as a quotient of Z), and univariate polynomials over Q.
  bool is_pid() const;
  bool is_univariate() const { return kind_ == Kind::polynomial && variables_.size() == 1; }

  Element zero() const;
  Element one() const;
  Element from_integer(const Integer& n) const;
  /// Throws ParseError for a non-integral rational in Z or Z/m.
  Element from_rational(const Rational& q) const;
  Element from_polynomial(const Polynomial& p) const;
  Element variable(std::size_t index) const;
  Element variable(std::string_view name) const;
  std::size_t variable_index(std::string_view name) const;

  /// Parses expressions such as `3/2*t1^2*t3 - t2 + 4` or `(t2-t1)(t3-t1)`.
  Element parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring() = default;

  Kind kind_ = Kind::integers;
  Integer modulus_ = 0;
  std::vector<std::string> variables_;
  unsigned max_degree_ = 0;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/// An exact element of a Ring, always stored in canonical form so that
/// structural equality is mathematical equality.
class Element {
 public:
  /// The integer 0; exists so containers of elements are default constructible.
  Element();

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  /// Integer value (Z) or least nonnegative residue (Z/m).
  const Integer& integer() const;
  const Polynomial& polynomial() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  Element pow(unsigned e) const;

  /// Degree for polynomial kinds (-1 for zero); 0 for nonzero integers.
  int degree() const;

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  friend class Ring;
  Element(RingPtr ring, Integer value);
  Element(RingPtr ring, Polynomial value);

  RingPtr ring_;
  std::variant<Integer, Polynomial> value_;
};

/// Throws RingMismatch unless both elements live in the same ring.
void require_same_ring(const Element& a, const Element& b, std::string_view what);

}  // namespace gkm
