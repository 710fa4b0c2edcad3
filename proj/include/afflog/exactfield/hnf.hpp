#pragma once

#include <vector>

#include "afflog/exactfield/field_element.hpp"
#include "afflog/matrix.hpp"

namespace afflog {

using IntMatrix = Matrix<mpz_class>;

/// Row-style Hermite normal form: H = U * M with U unimodular, H upper
/// echelon with positive pivots and entries above each pivot reduced into
/// [0, pivot). The first `rank` rows of H are nonzero.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

HnfResult hnf(const IntMatrix& m);

/// Determinant of an integer matrix (fraction-free Bareiss elimination).
mpz_class int_det(const IntMatrix& m);

/// Incrementally maintained HNF basis of a Z-submodule of Z^dim.
class LatticeBuilder {
 public:
  explicit LatticeBuilder(std::size_t dim) : dim_(dim) {}
  void add(const std::vector<mpz_class>& row);
  std::size_t rank() const { return basis_.size(); }
  /// Basis rows in Hermite normal form.
  IntMatrix basis() const;
  /// |det| of the basis when it has full rank (the index in Z^dim), else 0.
  mpz_class index() const;

 private:
  std::size_t dim_;
  std::vector<std::vector<mpz_class>> basis_;  // echelon, pivots strictly increasing
};

/// Absolute norm of the fractional ideal generated by `gens` in the ring of
/// integers spanned by the field's integral basis. Throws on all-zero input.
mpq_class ideal_norm(const std::vector<FieldElement>& gens);

}  // namespace afflog
