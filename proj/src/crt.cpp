#include "gkm/crt.hpp"

#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"

namespace gkm {

namespace {

bool congruent(const Element& a, const Element& b, const Element& m) {
  return PrincipalIdeal(m).contains(a - b);
}

}  // namespace

std::optional<Congruence> crt_merge(const Congruence& a, const Congruence& b) {
  require_same_ring(a.residue, b.residue, "congruence system");
  require_same_ring(a.modulus, b.modulus, "congruence system");
  if (a.modulus.is_zero()) {
    if (!congruent(a.residue, b.residue, b.modulus)) return std::nullopt;
    return a;
  }
  if (b.modulus.is_zero()) {
    if (!congruent(b.residue, a.residue, a.modulus)) return std::nullopt;
    return b;
  }
  const Bezout bz = extended_gcd(a.modulus, b.modulus);
  const Element diff = b.residue - a.residue;
  const auto k = divide_exact(diff, bz.g);
  if (!k) return std::nullopt;
  const Element modulus = lcm(a.modulus, b.modulus);
  // a.modulus*s ≡ g (mod b.modulus), so a.residue + a.modulus*s*k hits b.residue.
  const Element x = a.residue + a.modulus * bz.s * *k;
  return Congruence{reduce_mod(x, modulus), modulus};
}

CrtOutcome solve_congruences(const std::vector<Congruence>& system) {
  if (system.empty()) throw Error("empty congruence system");
  Congruence acc = system.front();
  for (std::size_t k = 1; k < system.size(); ++k) {
    auto merged = crt_merge(acc, system[k]);
    if (merged) {
      acc = std::move(*merged);
      continue;
    }
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j)
        if (!crt_merge(system[i], system[j])) return {std::nullopt, std::pair{i, j}};
    throw Error("congruence system inconsistent without a conflicting pair");
  }
  acc.residue = reduce_mod(acc.residue, acc.modulus);
  return {acc, std::nullopt};
}

}  // namespace gkm
