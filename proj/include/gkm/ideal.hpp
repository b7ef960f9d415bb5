#pragma once

#include <optional>

#include "gkm/permutation.hpp"
#include "gkm/ring.hpp"

namespace gkm {

/// A principal ideal <g>. The zero generator denotes the zero ideal.
///
/// Over PIDs the generator is canonical (nonnegative over Z, a divisor of m
/// over Z/m, monic over Q[x]); elsewhere it is normalized to leading
/// coefficient 1.
class PrincipalIdeal {
 public:
  explicit PrincipalIdeal(Element generator);

  const Element& generator() const { return generator_; }
  bool is_zero() const { return generator_.is_zero(); }
  bool is_unit() const;

  /// x is in <g> iff x = q*g for some q in the ring.
  bool contains(const Element& x) const;

  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;

 private:
  Element generator_;
};

/// <a> + <b>; requires a PID ring.
PrincipalIdeal ideal_sum(const PrincipalIdeal& a, const PrincipalIdeal& b);
/// <a> ∩ <b>; requires a PID ring.
PrincipalIdeal ideal_intersect(const PrincipalIdeal& a, const PrincipalIdeal& b);

/// Some q with a = q*b, or nullopt. Works in every supported ring; over Z/m
/// and truncated rings the quotient need not be unique.
std::optional<Element> divide_exact(const Element& a, const Element& b);

/// True iff the linear form `g` divides `x` in a polynomial ring, decided by
/// substituting the hyperplane g = 0 (solved for its highest variable).
bool linear_form_divides(const Element& g, const Element& x);

/// Restriction of x to the hyperplane g = 0 for a linear form g: the highest
/// variable of g is eliminated, so the result no longer involves it.
Polynomial restrict_to_hyperplane(const Element& g, const Polynomial& x);

/// Canonical gcd and lcm over a PID (see PrincipalIdeal for canonical forms).
Element gcd(const Element& a, const Element& b);
Element lcm(const Element& a, const Element& b);

struct Bezout {
  Element g, s, t;  // s*a + t*b == g
};
/// Extended Euclid over Z or Q[x]; `g` is canonical.
Bezout extended_gcd(const Element& a, const Element& b);

/// Canonical representative of a modulo <m> over Z or Q[x]: the least
/// nonnegative residue over Z, the remainder of degree < deg m over Q[x].
/// For m == 0 returns a.
Element reduce_mod(const Element& a, const Element& m);

/// Substitutes t_i -> t_{w(i)} for i <= n; the ring needs at least n variables.
Element poly_permute(const Permutation& w, const Element& p);

/// Throws UnsupportedRing unless the ring is one of the supported PIDs.
void require_pid(const RingPtr& ring, std::string_view operation);

}  // namespace gkm
