#include "afflog/balls/embed.hpp"

namespace afflog {

ComplexBall embed(const FieldElement& x, std::size_t root_index, Precision prec) {
  if (x.is_rational()) return ComplexBall::from_rational(x.rational_value(), 0, prec);
  return x.embed(root_index, prec);
}

BallVector embed(const std::vector<FieldElement>& xs, std::size_t root_index, Precision prec) {
  BallVector out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(embed(x, root_index, prec));
  return out;
}

BallMatrix embed(const Matrix<FieldElement>& m, std::size_t root_index, Precision prec) {
  BallMatrix out(m.rows(), m.cols(), ComplexBall(prec));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = embed(m(i, j), root_index, prec);
  return out;
}

}  // namespace afflog
