#pragma once

#include <vector>

#include "afflog/balls/real_enclosure.hpp"
#include "afflog/exactfield/field_element.hpp"

namespace afflog {

enum class HeightVariant { h, hprime, hhat };

/// Point [p_0 : ... : p_N] of projective space over a number field.
class ProjectivePoint {
 public:
  /// Throws std::invalid_argument on an empty or all-zero coordinate list.
  explicit ProjectivePoint(std::vector<FieldElement> coords);

  const FieldPtr& field() const noexcept { return coords_.front().field(); }
  const std::vector<FieldElement>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

 private:
  std::vector<FieldElement> coords_;
};

/// Absolute logarithmic height of a projective point. The finite part is exact
/// (one ideal norm); the archimedean part is evaluated at `prec`, escalating
/// when an enclosure is too wide to take a logarithm.
RealEnclosure height_projective(const ProjectivePoint& p, HeightVariant variant, Precision prec = kDefaultPrecision);

/// h'(x) = h([x : 1]).
RealEnclosure hprime_scalar(const FieldElement& x, Precision prec = kDefaultPrecision);

/// h'(x_1, ..., x_N) = h([1 : x_1 : ... : x_N]); zero vectors give 0.
RealEnclosure hprime_vector(const std::vector<FieldElement>& xs, Precision prec = kDefaultPrecision);

/// h([x : 1]) through the Mahler measure of the minimal polynomial of x.
RealEnclosure mahler_height(const FieldElement& x, Precision prec = kDefaultPrecision);

}  // namespace afflog
