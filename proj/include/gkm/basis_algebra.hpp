#pragma once

#include <optional>
#include <vector>

#include "gkm/pid_basis.hpp"

namespace gkm {

/// Coefficients of p in the basis (one per element), found by a triangular
/// solve from the bottom element up. Returns nullopt when p is not in the
/// span of the basis.
std::optional<std::vector<Element>> try_express(const Spline& p, const FlowUpBasis& basis);

/// As try_express, but throws Error when p is not in the span.
std::vector<Element> express(const Spline& p, const FlowUpBasis& basis);

/// Structure constants: coefficients[a][b][c] is the coefficient of element c
/// in the product of elements a and b.
struct StructureTable {
  FlowUpBasis basis;
  std::vector<std::vector<std::vector<Element>>> coefficients;
};

StructureTable structure_table(const FlowUpBasis& basis);

/// Sum of coeffs[c] * basis[c].
Spline combine(const FlowUpBasis& basis, const std::vector<Element>& coeffs);

}  // namespace gkm
