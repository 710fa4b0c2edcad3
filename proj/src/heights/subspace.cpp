#include "afflog/heights/subspace.hpp"

#include <stdexcept>

#include "afflog/exactfield/linalg.hpp"

namespace afflog {

SubspaceSpec::SubspaceSpec(FieldPtr field, std::size_t ambient)
    : field_(std::move(field)), basis_(ambient, 0, field_->zero()) {}

SubspaceSpec::SubspaceSpec(FieldPtr field, Matrix<FieldElement> basis)
    : field_(std::move(field)), basis_(std::move(basis)) {
  if (!field_) throw std::invalid_argument("subspace needs a field");
  for (const auto& x : basis_.flat()) {
    if (!x.field() || !(x.field() == field_ || x.field()->same_as(*field_)))
      throw std::invalid_argument("subspace basis entries belong to a different field");
  }
  if (basis_.cols() > basis_.rows()) throw std::invalid_argument("subspace dimension exceeds the ambient dimension");
  if (rank(basis_) != basis_.cols()) throw std::invalid_argument("subspace basis columns are linearly dependent");
}

SubspaceSpec SubspaceSpec::zero_space(FieldPtr field, std::size_t ambient) { return SubspaceSpec(std::move(field), ambient); }

bool SubspaceSpec::contains(const std::vector<FieldElement>& v) const {
  if (v.size() != ambient()) throw std::invalid_argument("vector length does not match the ambient dimension");
  Matrix<FieldElement> m(ambient(), dim() + 1, field_->zero());
  for (std::size_t i = 0; i < ambient(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) = basis_(i, j);
    m(i, dim()) = v[i];
  }
  return rank(m) == dim();
}

bool SubspaceSpec::same_span(const SubspaceSpec& other) const {
  if (other.ambient() != ambient() || other.dim() != dim()) return false;
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis().col(j))) return false;
  return true;
}

std::vector<FieldElement> pluecker(const SubspaceSpec& w) {
  std::vector<FieldElement> out;
  const std::size_t d = w.dim();
  if (d == 0) return out;
  std::vector<std::size_t> all_cols(d);
  for (std::size_t j = 0; j < d; ++j) all_cols[j] = j;
  for (const auto& rows : combinations(w.ambient(), d)) out.push_back(det(w.basis().select(rows, all_cols)));
  return out;
}

RealEnclosure subspace_height(const SubspaceSpec& w, HeightVariant variant, Precision prec) {
  if (variant == HeightVariant::hprime) throw std::invalid_argument("subspace heights use the h or hhat variant");
  if (w.dim() == 0) return RealEnclosure(prec);
  return height_projective(ProjectivePoint(pluecker(w)), variant, prec);
}

SubspaceSpec orthogonal_complement(const SubspaceSpec& w) {
  const FieldPtr& k = w.field();
  if (!k->conj_stable())
    throw std::domain_error("orthogonal complement needs a field automorphism inducing complex conjugation");
  const std::size_t n = w.ambient(), d = w.dim();
  if (d == 0) return SubspaceSpec(k, Matrix<FieldElement>::identity(n, k->zero(), k->one()));
  Matrix<FieldElement> a(d, n, k->zero());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) a(j, i) = w.basis()(i, j).conj();
  if (d == n) return SubspaceSpec::zero_space(k, n);
  return SubspaceSpec(k, kernel(a));
}

Matrix<FieldElement> gamma_minors(const Matrix<FieldElement>& z, std::size_t d) {
  if (d == 0 || d > z.cols() || d > z.rows()) throw std::invalid_argument("minor size out of range");
  if (rank(z) != z.cols()) throw std::invalid_argument("structure matrix does not have full column rank");
  const auto row_sets = combinations(z.rows(), d);
  const auto col_sets = combinations(z.cols(), d);
  Matrix<FieldElement> g(row_sets.size(), col_sets.size(), z.zero());
  for (std::size_t r = 0; r < row_sets.size(); ++r)
    for (std::size_t c = 0; c < col_sets.size(); ++c) g(r, c) = det(z.select(row_sets[r], col_sets[c]));
  return g;
}

ProjectivePoint gamma_matrix(const Matrix<FieldElement>& z, std::size_t d) {
  const Matrix<FieldElement> g = gamma_minors(z, d);
  std::vector<FieldElement> flat;
  for (std::size_t c = 0; c < g.cols(); ++c)
    for (std::size_t r = 0; r < g.rows(); ++r) flat.push_back(g(r, c));
  return ProjectivePoint(std::move(flat));
}

}  // namespace afflog
