#include "gkm/basis_algebra.hpp"

#include "gkm/errors.hpp"
#include "gkm/ideal.hpp"

namespace gkm {

std::optional<std::vector<Element>> try_express(const Spline& p, const FlowUpBasis& basis) {
  if (!(*p.graph() == *basis.graph)) throw RingMismatch("spline and basis live on different graphs");
  std::vector<Element> residual = p.values();
  std::vector<Element> coeffs;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const VertexId v = basis.leading[k];
    const Spline& element = basis.elements[k];
    auto c = divide_exact(residual[v], element[v]);
    if (!c) return std::nullopt;
    if (!c->is_zero())
      for (std::size_t u = 0; u < residual.size(); ++u) residual[u] -= *c * element[u];
    coeffs.push_back(std::move(*c));
  }
  for (const Element& r : residual)
    if (!r.is_zero()) return std::nullopt;
  return coeffs;
}

std::vector<Element> express(const Spline& p, const FlowUpBasis& basis) {
  auto coeffs = try_express(p, basis);
  if (!coeffs) throw Error("spline is not in the span of the basis");
  return std::move(*coeffs);
}

StructureTable structure_table(const FlowUpBasis& basis) {
  const std::size_t n = basis.size();
  StructureTable table{basis, std::vector<std::vector<std::vector<Element>>>(n, std::vector<std::vector<Element>>(n))};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      table.coefficients[a][b] = express(basis.elements[a] * basis.elements[b], basis);
      table.coefficients[b][a] = table.coefficients[a][b];
    }
  return table;
}

Spline combine(const FlowUpBasis& basis, const std::vector<Element>& coeffs) {
  if (coeffs.size() != basis.size()) throw ValidationError({"need one coefficient per basis element"});
  Spline out = Spline::zero(basis.graph);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) out = out + basis.elements[k].scaled(coeffs[k]);
  return out;
}

}  // namespace gkm
