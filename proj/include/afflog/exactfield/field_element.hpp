#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "afflog/balls/complex_ball.hpp"
#include "afflog/exactfield/number_field.hpp"
#include "afflog/exactfield/poly.hpp"

namespace afflog {

/// Element of a number field in power-basis coordinates.
///
/// A default-constructed element has no field; it only serves as a
/// placeholder inside containers and must be assigned before use.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<mpq_class> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error when the element is not rational.
  mpq_class rational_value() const;

  FieldElement inverse() const;
  mpq_class norm() const;
  mpq_class trace() const;
  /// Column j holds the power coordinates of x * theta^j.
  Matrix<mpq_class> multiplication_matrix() const;
  Poly<mpq_class> charpoly() const;
  /// Monic minimal polynomial over Q.
  Poly<mpq_class> minimal_polynomial() const;
  /// Coordinates in the integral basis.
  std::vector<mpq_class> integral_coordinates() const;
  /// Image under the automorphism acting as complex conjugation. Throws when
  /// the field carries none.
  FieldElement conj() const;

  /// sigma_j(x) for the embedding theta -> roots[j].
  ComplexBall embed(std::size_t root_index, Precision prec) const;
  ComplexBall embed_at(const ComplexBall& root) const;

  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

 private:
  FieldPtr field_;
  std::vector<mpq_class> coeffs_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
/// Throws std::domain_error on division by zero.
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const mpq_class& q);
FieldElement operator*(const FieldElement& a, long q);
bool operator==(const FieldElement& a, const FieldElement& b);

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
FieldElement one_like(const FieldElement& x);

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Throws std::invalid_argument unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

using MatrixK = Matrix<FieldElement>;

}  // namespace afflog
