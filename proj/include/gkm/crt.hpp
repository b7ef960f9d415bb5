#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gkm/ring.hpp"

namespace gkm {

/// x ≡ residue (mod modulus). A zero modulus pins x to the residue exactly.
struct Congruence {
  Element residue;
  Element modulus;
};

/// Combines two congruences over Z or Q[x] with moduli that need not be
/// coprime. Returns nullopt when they are incompatible. The residue of the
/// result is canonical (see reduce_mod).
std::optional<Congruence> crt_merge(const Congruence& a, const Congruence& b);

struct CrtOutcome {
  std::optional<Congruence> solution;
  /// Indices of two mutually incompatible input congruences when unsolvable.
  std::optional<std::pair<std::size_t, std::size_t>> conflict;
};

/// Solves a system of congruences. Over a PID pairwise compatibility implies
/// global compatibility, so an unsolvable system always has a conflicting pair.
CrtOutcome solve_congruences(const std::vector<Congruence>& system);

}  // namespace gkm
