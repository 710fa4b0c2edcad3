#include "afflog/liematrix/kpoint.hpp"

#include <stdexcept>

#include "afflog/balls/embed.hpp"
#include "afflog/exactfield/linalg.hpp"

namespace afflog {

ComplexBall LogEigenvalue::value(Precision prec) const {
  if (alpha.is_zero()) throw std::invalid_argument("eigenvalue alpha must be nonzero");
  ComplexBall out = log_principal(embed(alpha, 0, prec));
  if (branch != 0) out = out + ComplexBall::i_pi(prec) * ComplexBall::from_long(2 * branch, prec);
  return out;
}

std::size_t JordanData::m() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size;
  return total;
}

std::vector<LogEigenvalue> JordanData::diagonal() const {
  std::vector<LogEigenvalue> out;
  for (const auto& b : blocks)
    for (std::size_t k = 0; k < b.size; ++k) out.push_back(b.eigen);
  return out;
}

std::vector<int> JordanData::superdiagonal() const {
  std::vector<int> out;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k + 1 < b.size; ++k) out.push_back(1);
    out.push_back(0);
  }
  if (!out.empty()) out.pop_back();
  return out;
}

BallMatrix JordanData::matrix(Precision prec) const {
  const std::size_t n = m();
  BallMatrix j = ball_zero(n, n, prec);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    const ComplexBall lambda = b.eigen.value(prec);
    for (std::size_t k = 0; k < b.size; ++k) {
      j(at + k, at + k) = lambda;
      if (k + 1 < b.size) j(at + k, at + k + 1) = ComplexBall::from_long(1, prec);
    }
    at += b.size;
  }
  return j;
}

MatrixK JordanData::exp_exact(const FieldPtr& field) const {
  const std::size_t n = m();
  MatrixK out(n, n, field->zero());
  std::size_t at = 0;
  for (const auto& b : blocks) {
    mpz_class fact = 1;
    for (std::size_t d = 0; d < b.size; ++d) {
      if (d > 0) fact *= static_cast<unsigned long>(d);
      const FieldElement entry = b.eigen.alpha * mpq_class(mpz_class(1), fact);
      for (std::size_t k = 0; k + d < b.size; ++k) out(at + k, at + k + d) = entry;
    }
    at += b.size;
  }
  return out;
}

KPoint::KPoint(JordanData jordan, MatrixK conjugator, GroupData group, Precision prec)
    : jordan_(std::move(jordan)), v_(std::move(conjugator)), group_(std::move(group)) {
  const std::size_t m = group_.m();
  if (jordan_.m() != m) throw std::invalid_argument("Jordan block sizes must sum to m");
  for (const auto& b : jordan_.blocks) {
    if (b.size == 0) throw std::invalid_argument("Jordan blocks must have positive size");
    require_same_field(b.eigen.alpha, group_.field()->one());
    if (b.eigen.alpha.is_zero()) throw std::invalid_argument("eigenvalue alpha must be nonzero");
  }
  if (v_.rows() != m || v_.cols() != m) throw std::invalid_argument("conjugator must be m x m");
  for (const auto& x : v_.flat()) require_same_field(x, group_.field()->one());
  try {
    v_inv_ = inverse(v_);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("conjugator is singular");
  }
  exp_u_ = v_ * jordan_.exp_exact(group_.field()) * v_inv_;
  coords_B(prec);
}

BallMatrix KPoint::u_ball(Precision prec) const {
  return embed(v_, 0, prec) * jordan_.matrix(prec) * embed(v_inv_, 0, prec);
}

BallVector KPoint::coords_B(Precision prec) const {
  const BallMatrix u = u_ball(prec);
  if (group_.is_general_linear()) return u.flat();
  return coords_in_basis(u.flat(), group_.z(), prec);
}

BallVector coords_in_basis(const BallVector& u, const Matrix<FieldElement>& z, Precision prec) {
  if (u.size() != z.rows()) throw std::invalid_argument("vector length does not match the structure matrix");
  const std::vector<std::size_t> rows = rref(z.transpose()).pivots;
  if (rows.size() != z.cols()) throw std::invalid_argument("structure matrix does not have full column rank");
  std::vector<std::size_t> all(z.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  const BallMatrix left = embed(inverse(z.select(rows, all)), 0, prec);
  BallVector picked;
  for (std::size_t r : rows) picked.push_back(u[r]);
  const BallVector x = left * picked;
  const BallVector back = embed(z, 0, prec) * x;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(u[i] - back[i]).contains_zero()) throw std::domain_error("u not in Lie(G): residual excludes 0");
  return x;
}

}  // namespace afflog
