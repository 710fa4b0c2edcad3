#include "afflog/balls/distance.hpp"

#include <stdexcept>

#include "afflog/balls/embed.hpp"
#include "afflog/exactfield/linalg.hpp"

namespace afflog {

namespace {

MatrixK conj_transpose_exact(const MatrixK& b) {
  MatrixK out(b.cols(), b.rows(), b.zero());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(j, i) = b(i, j).conj();
  return out;
}

}  // namespace

std::vector<FieldElement> hyperplane_normal(const SubspaceSpec& w) {
  if (w.dim() + 1 != w.ambient()) throw std::invalid_argument("subspace is not a hyperplane");
  std::vector<FieldElement> y = orthogonal_complement(w).basis().col(0);
  for (const auto& x : y) {
    if (x.is_zero()) continue;
    const FieldElement s = x.inverse();
    for (auto& c : y) c = c * s;
    break;
  }
  return y;
}

RealEnclosure distance_to_subspace(const BallVector& u, const SubspaceSpec& w, Precision prec) {
  if (u.size() != w.ambient()) throw std::invalid_argument("vector length does not match the ambient dimension");
  if (w.dim() == 0) return vector_norm(u);
  const MatrixK& b = w.basis();
  BallVector residual;
  if (w.field()->conj_stable()) {
    const MatrixK bh = conj_transpose_exact(b);
    const MatrixK proj = b * inverse(MatrixK(bh * b)) * bh;
    const BallVector pu = embed(proj, 0, prec) * u;
    for (std::size_t i = 0; i < u.size(); ++i) residual.push_back(u[i] - pu[i]);
  } else {
    const BallMatrix bb = embed(b, 0, prec);
    const BallMatrix bh = conj_transpose(bb);
    const BallVector c = solve(BallMatrix(bh * bb), BallVector(bh * u));
    const BallVector pu = bb * c;
    for (std::size_t i = 0; i < u.size(); ++i) residual.push_back(u[i] - pu[i]);
  }
  RealEnclosure dist = vector_norm(residual);
  if (w.dim() + 1 == w.ambient() && w.field()->conj_stable()) {
    const BallVector y = embed(hyperplane_normal(w), 0, prec);
    const RealEnclosure other = hermitian_inner(u, y).abs() / vector_norm(y);
    if (!dist.overlaps(other)) throw std::logic_error("distance formulas disagree; enclosure arithmetic is broken");
    dist = intersect(dist, other);
  }
  return dist;
}

}  // namespace afflog
