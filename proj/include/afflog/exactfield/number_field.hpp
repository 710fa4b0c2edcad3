#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "afflog/balls/complex_ball.hpp"
#include "afflog/exactfield/rational.hpp"
#include "afflog/matrix.hpp"

namespace afflog {

class FieldElement;
class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Archimedean place: a real root, or one root of a complex-conjugate pair.
struct Place {
  enum class Kind { real, complex };
  Kind kind;
  std::size_t root;  // index into Embeddings::roots
  int local_degree;  // 1 real, 2 complex
};

/// Certified roots of the defining polynomial. roots[0] is the distinguished
/// embedding (largest real part, then largest imaginary part).
struct Embeddings {
  Precision precision = kDefaultPrecision;
  std::vector<ComplexBall> roots;
  std::vector<Place> places;
};

/// K = Q[x]/(f) with f monic, integral and irreducible, degree at most 6.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// minpoly holds c_0..c_D. integral_basis rows are the basis elements in
  /// power-basis coordinates (absent: the power basis, asserted maximal).
  /// conjugation_image is sigma(theta) in power coordinates for the automorphism
  /// acting as complex conjugation on the distinguished embedding.
  static FieldPtr create(std::vector<mpz_class> minpoly, std::optional<Matrix<mpq_class>> integral_basis = std::nullopt,
                         std::optional<std::vector<mpq_class>> conjugation_image = std::nullopt);
  static FieldPtr rationals();

  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

  std::size_t degree() const noexcept { return minpoly_.size() - 1; }
  const std::vector<mpz_class>& minpoly() const noexcept { return minpoly_; }
  const Matrix<mpq_class>& integral_basis() const noexcept { return basis_; }
  const Matrix<mpq_class>& integral_basis_inverse() const noexcept { return basis_inv_; }
  bool has_explicit_basis() const noexcept { return explicit_basis_; }
  const mpz_class& discriminant() const noexcept { return discriminant_; }
  bool conj_stable() const noexcept { return conj_image_.has_value(); }
  /// sigma(theta) in power coordinates (identity when the distinguished root is real).
  const std::optional<std::vector<mpq_class>>& conjugation_image() const noexcept { return conj_image_; }
  bool explicit_conjugation() const noexcept { return explicit_conj_; }
  bool same_as(const NumberField& other) const;

  /// Certified embeddings; computed on demand and memoized per precision.
  const Embeddings& embeddings(Precision prec) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement theta() const;
  FieldElement from_rational(const mpq_class& q) const;
  FieldElement from_coeffs(std::vector<mpq_class> coeffs) const;
  FieldElement from_integral_coords(const std::vector<mpq_class>& coords) const;
  /// The integral basis element omega_i.
  FieldElement basis_element(std::size_t i) const;

  /// Power coordinates of theta^k for k < 2D-1, used for multiplication.
  const std::vector<std::vector<mpq_class>>& power_table() const noexcept { return powers_; }

 private:
  NumberField() = default;
  void validate_and_finish(std::optional<std::vector<mpq_class>> conjugation_image);

  std::vector<mpz_class> minpoly_;
  Matrix<mpq_class> basis_;
  Matrix<mpq_class> basis_inv_;
  bool explicit_basis_ = false;
  mpz_class discriminant_;
  std::optional<std::vector<mpq_class>> conj_image_;
  bool explicit_conj_ = false;
  std::vector<std::vector<mpq_class>> powers_;

  mutable std::mutex cache_mutex_;
  mutable std::map<Precision, std::unique_ptr<Embeddings>> cache_;
};

/// Computes certified embeddings of a monic integer polynomial (no caching).
Embeddings compute_embeddings(const std::vector<mpz_class>& minpoly, Precision prec);

/// Throws std::invalid_argument when f (monic, integer, degree <= 6) is reducible over Q.
void check_irreducible(const std::vector<mpz_class>& f);

}  // namespace afflog
