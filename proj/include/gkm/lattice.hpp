#pragma once

#include <optional>
#include <vector>

#include "gkm/polynomial.hpp"

/// Integer linear algebra over Z with arbitrary precision: Hermite and Smith
/// forms, integer kernels, and linear Diophantine systems.
namespace gkm::lattice {

using Vector = std::vector<Integer>;
using Matrix = std::vector<Vector>;  // row-major

/// Hermite normal form of the row lattice spanned by `rows` in Z^dim.
/// Output rows are sorted by pivot column, pivots are positive, and every
/// entry above a pivot lies in [0, pivot). Zero rows are dropped.
Matrix hermite_basis(Matrix rows, std::size_t dim);

/// True iff `v` lies in the row lattice of a Hermite basis.
bool hermite_contains(const Matrix& hermite, Vector v);

/// Basis of {y in Z^cols : A y = 0}.
Matrix integer_kernel(const Matrix& a, std::size_t cols);

struct DiophantineSolution {
  Vector particular;
  Matrix kernel;
};

/// All integer solutions of A y = b, or nullopt if there are none.
std::optional<DiophantineSolution> solve_linear_system(const Matrix& a, const Vector& b,
                                                       std::size_t cols);

/// Nonzero invariant factors (Smith normal form diagonal) of `a`, ascending
/// under divisibility.
std::vector<Integer> smith_invariants(Matrix a);

}  // namespace gkm::lattice
