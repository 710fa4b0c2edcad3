#pragma once

#include <optional>
#include <vector>

#include "afflog/liematrix/kpoint.hpp"

namespace afflog {

struct JordanOptions {
  /// Eigenvalue candidates; each is checked exactly against the characteristic polynomial.
  std::vector<FieldElement> eigen_hints;
  /// A conjugator to use instead of the computed one; v^-1 g v must be exp of a Jordan matrix.
  std::optional<MatrixK> basis_hint;
  /// Denominator bound for recognising eigenvalues from their embeddings.
  mpz_class max_denominator = mpz_class(1) << 40;
  Precision precision = kDefaultPrecision;
};

/// The distinct eigenvalues of g in K with algebraic multiplicities. Throws
/// std::domain_error naming the unsplit factor when the characteristic
/// polynomial does not split.
std::vector<std::pair<FieldElement, std::size_t>> eigenvalues_in_field(const MatrixK& g, const JordanOptions& opt = {});

/// Factors g = v exp(J) v^-1 and attaches one branch per Jordan block, in
/// block order. Throws std::invalid_argument when the branch count is wrong.
KPoint kpoint_from_matrix(const MatrixK& g, const std::vector<long>& branches, const GroupData& group,
                          const JordanOptions& opt = {});

/// Blocks (eigenvalue, size) of the Jordan matrix J with exp(J) similar to g,
/// with the conjugator, before branches are chosen.
struct JordanFactor {
  std::vector<std::pair<FieldElement, std::size_t>> blocks;
  MatrixK conjugator;
};
JordanFactor jordan_factor(const MatrixK& g, const JordanOptions& opt = {});

}  // namespace afflog
