#pragma once

#include "afflog/balls/ball_linalg.hpp"
#include "afflog/exactfield/field_element.hpp"

namespace afflog {

/// Enclosure of x under the embedding theta -> roots[root_index].
ComplexBall embed(const FieldElement& x, std::size_t root_index = 0, Precision prec = kDefaultPrecision);
BallVector embed(const std::vector<FieldElement>& xs, std::size_t root_index = 0, Precision prec = kDefaultPrecision);
/// Entrywise image under the distinguished embedding (or another root).
BallMatrix embed(const Matrix<FieldElement>& m, std::size_t root_index = 0, Precision prec = kDefaultPrecision);

}  // namespace afflog
