#pragma once

#include <vector>

#include "afflog/balls/real_enclosure.hpp"
#include "afflog/exactfield/field_element.hpp"
#include "afflog/heights/projective.hpp"

namespace afflog {

/// d-dimensional subspace of K^n given by the n x d matrix of its basis
/// columns. The zero subspace (d = 0) is allowed and has an empty basis.
class SubspaceSpec {
 public:
  /// Throws std::invalid_argument when the columns are dependent.
  SubspaceSpec(FieldPtr field, Matrix<FieldElement> basis);
  static SubspaceSpec zero_space(FieldPtr field, std::size_t ambient);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix<FieldElement>& basis() const noexcept { return basis_; }

  bool contains(const std::vector<FieldElement>& v) const;
  /// Same subspace of K^n.
  bool same_span(const SubspaceSpec& other) const;

 private:
  SubspaceSpec(FieldPtr field, std::size_t ambient);
  FieldPtr field_;
  Matrix<FieldElement> basis_;
};

/// All d x d minors of a matrix with d columns, rows taken in lexicographic order.
std::vector<FieldElement> pluecker(const SubspaceSpec& w);

/// Height of the Pluecker vector (variant h or hhat); 0 for the zero subspace.
RealEnclosure subspace_height(const SubspaceSpec& w, HeightVariant variant = HeightVariant::h,
                              Precision prec = kDefaultPrecision);

/// {y : sum_k y_k conj(z_k) = 0 for all z in W}. Needs a conjugation automorphism.
SubspaceSpec orthogonal_complement(const SubspaceSpec& w);

/// Minors gamma(r, c) = det(z[rows_r, cols_c]) for the r-th d-subset of rows
/// and the c-th d-subset of columns of z, both in lexicographic order.
Matrix<FieldElement> gamma_minors(const Matrix<FieldElement>& z, std::size_t d);

/// The minors flattened column-subset outer, row-subset inner.
ProjectivePoint gamma_matrix(const Matrix<FieldElement>& z, std::size_t d);

}  // namespace afflog
