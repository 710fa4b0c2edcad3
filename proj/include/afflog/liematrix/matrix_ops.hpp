#pragma once

#include "afflog/balls/ball_linalg.hpp"
#include "afflog/exactfield/field_element.hpp"

namespace afflog {

/// An affine group G in GL_m: column j of `z` holds the coordinates of the
/// j-th Lie algebra basis vector in the elementary basis of gl_m (row-major
/// entries, so index (i-1)m + j is the (i, j) entry).
class GroupData {
 public:
  /// Throws std::invalid_argument unless z is m^2 x n of full column rank.
  GroupData(FieldPtr field, std::size_t m, Matrix<FieldElement> z);
  static GroupData general_linear(FieldPtr field, std::size_t m);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return z_.cols(); }
  const Matrix<FieldElement>& z() const noexcept { return z_; }
  bool is_general_linear() const noexcept { return general_linear_; }

 private:
  FieldPtr field_;
  std::size_t m_;
  Matrix<FieldElement> z_;
  bool general_linear_ = false;
};

MatrixK identity_matrix(const FieldPtr& field, std::size_t m);
MatrixK inverse_matrix(const MatrixK& v);
FieldElement det_matrix(const MatrixK& v);
FieldElement trace_matrix(const MatrixK& v);

/// h of [1 : g_11 : g_12 : ... : g_mm].
RealEnclosure mat_height(const MatrixK& g, Precision prec = kDefaultPrecision);

/// Euclidean norm of the entry vector.
RealEnclosure mat_norm(const BallMatrix& m);

enum class Orientation { inverse_left, inverse_right };

/// v^-1 x v (inverse_left) or v x v^-1 (inverse_right). Throws on singular v.
MatrixK conjugate(const MatrixK& v, const MatrixK& x, Orientation o = Orientation::inverse_left);
BallMatrix conjugate(const MatrixK& v, const BallMatrix& x, Orientation o = Orientation::inverse_left);

/// The matrix whose row-major entry vector is `flat` (length m^2).
template <class T>
Matrix<T> unflatten(const std::vector<T>& flat, std::size_t m, const T& zero) {
  if (flat.size() != m * m) throw std::invalid_argument("entry vector length is not m^2");
  Matrix<T> out(m, m, zero);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = flat[i * m + j];
  return out;
}

}  // namespace afflog
