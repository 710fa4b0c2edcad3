#pragma once

#include <vector>

#include "afflog/balls/ball_linalg.hpp"
#include "afflog/liematrix/matrix_ops.hpp"

namespace afflog {

/// lambda = Log(alpha) + 2 pi i branch, with Log the principal branch taken
/// at the distinguished embedding.
struct LogEigenvalue {
  FieldElement alpha;
  long branch = 0;

  ComplexBall value(Precision prec) const;
};

struct JordanBlock {
  LogEigenvalue eigen;
  std::size_t size = 1;
};

/// Jordan matrix of u: blocks in order, lambda on the diagonal, ones on the
/// superdiagonal inside each block.
struct JordanData {
  std::vector<JordanBlock> blocks;

  std::size_t m() const;
  BallMatrix matrix(Precision prec) const;
  /// exp of the Jordan matrix, exactly: alpha times the unipotent matrix with
  /// entries 1/(b-a)! in each block.
  MatrixK exp_exact(const FieldPtr& field) const;
  /// The log-eigenvalue at each diagonal position.
  std::vector<LogEigenvalue> diagonal() const;
  /// Superdiagonal markers: entry i is 1 when (i, i+1) lies inside a block.
  std::vector<int> superdiagonal() const;
};

/// u = v J v^-1 with J a Jordan matrix whose exponential lies in GL_m(K).
class KPoint {
 public:
  /// Validates shapes, det(v) != 0 and membership of u in Lie(G) (at `prec`).
  KPoint(JordanData jordan, MatrixK conjugator, GroupData group, Precision prec = kDefaultPrecision);

  const JordanData& jordan() const noexcept { return jordan_; }
  const MatrixK& conjugator() const noexcept { return v_; }
  const MatrixK& conjugator_inverse() const noexcept { return v_inv_; }
  const GroupData& group() const noexcept { return group_; }
  const FieldPtr& field() const noexcept { return group_.field(); }
  std::size_t m() const noexcept { return group_.m(); }
  /// exp(u) = v exp(J) v^-1, exact.
  const MatrixK& exp_u() const noexcept { return exp_u_; }

  BallMatrix u_ball(Precision prec) const;
  /// Coordinates of u in the group's Lie algebra basis.
  BallVector coords_B(Precision prec) const;

 private:
  JordanData jordan_;
  MatrixK v_;
  MatrixK v_inv_;
  GroupData group_;
  MatrixK exp_u_;
};

/// Coordinates x with z x = u, via an exact left inverse of z. Throws
/// std::domain_error ("u not in Lie(G)") when the residual excludes 0.
BallVector coords_in_basis(const BallVector& u, const Matrix<FieldElement>& z, Precision prec);

}  // namespace afflog
