#pragma once

#include <vector>

#include "afflog/balls/complex_ball.hpp"

namespace afflog {

/// Isolates the roots of a squarefree polynomial with ball coefficients
/// (coeffs[k] multiplies x^k).
///
/// Each returned ball contains exactly one root, and the balls are pairwise
/// disjoint. When all coefficients are real, real roots come back with an
/// imaginary part of exactly [0, 0] and every other ball avoids the real axis.
/// Throws std::runtime_error when the roots cannot be separated at `prec`.
std::vector<ComplexBall> isolate_roots(const std::vector<ComplexBall>& coeffs, Precision prec);

/// Same for rational coefficients; retries at doubled precision up to kMaxPrecision.
std::vector<ComplexBall> isolate_roots(const std::vector<mpq_class>& coeffs, Precision prec);

/// Evaluates a polynomial at a ball by Horner's rule.
ComplexBall horner(const std::vector<ComplexBall>& coeffs, const ComplexBall& z);

}  // namespace afflog
