#include "afflog/liematrix/matrix_ops.hpp"

#include <stdexcept>

#include "afflog/balls/embed.hpp"
#include "afflog/exactfield/linalg.hpp"
#include "afflog/heights/projective.hpp"

namespace afflog {

GroupData::GroupData(FieldPtr field, std::size_t m, Matrix<FieldElement> z)
    : field_(std::move(field)), m_(m), z_(std::move(z)) {
  if (m_ == 0) throw std::invalid_argument("group dimension m must be positive");
  if (z_.rows() != m_ * m_) throw std::invalid_argument("structure matrix must have m^2 rows");
  if (z_.cols() == 0) throw std::invalid_argument("structure matrix needs at least one column");
  if (rank(z_) != z_.cols()) throw std::invalid_argument("structure matrix columns are linearly dependent");
  general_linear_ = z_.cols() == z_.rows() && equal(z_, identity_like(z_.rows(), field_->zero()));
}

GroupData GroupData::general_linear(FieldPtr field, std::size_t m) {
  MatrixK z = identity_matrix(field, m * m);
  return GroupData(std::move(field), m, std::move(z));
}

MatrixK identity_matrix(const FieldPtr& field, std::size_t m) {
  return MatrixK::identity(m, field->zero(), field->one());
}

MatrixK inverse_matrix(const MatrixK& v) {
  if (v.rows() != v.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  return inverse(v);
}

FieldElement det_matrix(const MatrixK& v) { return det(v); }

FieldElement trace_matrix(const MatrixK& v) { return trace(v); }

RealEnclosure mat_height(const MatrixK& g, Precision prec) { return hprime_vector(g.flat(), prec); }

RealEnclosure mat_norm(const BallMatrix& m) { return frobenius_norm(m); }

MatrixK conjugate(const MatrixK& v, const MatrixK& x, Orientation o) {
  const MatrixK vi = inverse_matrix(v);
  return o == Orientation::inverse_left ? MatrixK(vi * x * v) : MatrixK(v * x * vi);
}

BallMatrix conjugate(const MatrixK& v, const BallMatrix& x, Orientation o) {
  const Precision prec = x.empty() ? kDefaultPrecision : x(0, 0).precision();
  const BallMatrix vb = embed(v, 0, prec), vib = embed(inverse_matrix(v), 0, prec);
  return o == Orientation::inverse_left ? BallMatrix(vib * x * vb) : BallMatrix(vb * x * vib);
}

}  // namespace afflog
