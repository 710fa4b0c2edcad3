#pragma once

#include <vector>

#include "afflog/balls/complex_ball.hpp"
#include "afflog/matrix.hpp"

namespace afflog {

using BallMatrix = Matrix<ComplexBall>;
using BallVector = std::vector<ComplexBall>;

BallMatrix ball_identity(std::size_t n, Precision prec);
BallMatrix ball_zero(std::size_t rows, std::size_t cols, Precision prec);

BallMatrix conj_transpose(const BallMatrix& a);
BallMatrix scale(const BallMatrix& a, const ComplexBall& s);

/// Euclidean norm of the entry vector.
RealEnclosure frobenius_norm(const BallMatrix& a);
RealEnclosure vector_norm(const BallVector& x);

/// sum_k a_k * conj(b_k)
ComplexBall hermitian_inner(const BallVector& a, const BallVector& b);

/// Interval Gaussian elimination with partial pivoting. Throws
/// std::runtime_error when a pivot cannot be separated from zero.
BallVector solve(const BallMatrix& a, const BallVector& b);
BallMatrix solve(const BallMatrix& a, const BallMatrix& b);
BallMatrix inverse(const BallMatrix& a);

/// Scaling and squaring with a truncated Taylor series plus a rigorous tail bound.
BallMatrix matrix_exp_numeric(const BallMatrix& m, Precision prec);

bool contains(const BallMatrix& outer, const BallMatrix& inner);
bool overlaps(const BallMatrix& a, const BallMatrix& b);

}  // namespace afflog
