#include <stdexcept>

#include "afflog/exactfield/hnf.hpp"

namespace afflog {

mpq_class ideal_norm(const std::vector<FieldElement>& gens) {
  std::vector<const FieldElement*> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(&g);
  if (nonzero.empty()) throw std::invalid_argument("ideal norm of the zero ideal");
  const FieldPtr& field = nonzero.front()->field();
  for (const auto* g : nonzero) require_same_field(*nonzero.front(), *g);
  const std::size_t n = field->degree();

  // The ideal is the Z-span of g_i * omega_j; write these in integral coordinates.
  std::vector<std::vector<mpq_class>> rows;
  mpz_class den = 1;
  for (const auto* g : nonzero)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = (*g * field->basis_element(j)).integral_coordinates();
      for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
      rows.push_back(std::move(coords));
    }

  LatticeBuilder lattice(n);
  for (const auto& r : rows) {
    std::vector<mpz_class> scaled(n);
    for (std::size_t k = 0; k < n; ++k) {
      const mpq_class v = r[k] * den;
      scaled[k] = v.get_num();
    }
    lattice.add(scaled);
  }
  mpz_class scale_norm;
  mpz_pow_ui(scale_norm.get_mpz_t(), den.get_mpz_t(), n);
  mpq_class out(lattice.index(), scale_norm);
  out.canonicalize();
  return out;
}

}  // namespace afflog
