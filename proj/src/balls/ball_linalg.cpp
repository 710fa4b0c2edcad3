#include "afflog/balls/ball_linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace afflog {

BallMatrix ball_zero(std::size_t rows, std::size_t cols, Precision prec) {
  return BallMatrix(rows, cols, ComplexBall(prec));
}

BallMatrix ball_identity(std::size_t n, Precision prec) {
  return BallMatrix::identity(n, ComplexBall(prec), ComplexBall::from_long(1, prec));
}

BallMatrix conj_transpose(const BallMatrix& a) {
  BallMatrix t(a.cols(), a.rows(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
  return t;
}

BallMatrix scale(const BallMatrix& a, const ComplexBall& s) {
  return a.map([&](const ComplexBall& x) { return x * s; });
}

RealEnclosure vector_norm(const BallVector& x) {
  RealEnclosure acc(x.empty() ? kDefaultPrecision : x.front().precision());
  for (const auto& z : x) acc += z.abs2();
  return sqrt(acc);
}

RealEnclosure frobenius_norm(const BallMatrix& a) { return vector_norm(a.flat()); }

ComplexBall hermitian_inner(const BallVector& a, const BallVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product length mismatch");
  ComplexBall acc(a.empty() ? kDefaultPrecision : a.front().precision());
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k].conj();
  return acc;
}

BallMatrix solve(const BallMatrix& a_in, const BallMatrix& b_in) {
  if (a_in.rows() != a_in.cols() || a_in.rows() != b_in.rows()) throw std::invalid_argument("solve shape mismatch");
  BallMatrix a = a_in, b = b_in;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = -1;
    for (std::size_t r = col; r < n; ++r) {
      const double mag = a(r, col).abs().mid_double();
      if (!a(r, col).contains_zero() && mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (best < 0) throw std::runtime_error("singular or ill-conditioned system at working precision; increase precision");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const ComplexBall f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) = b(r, j) - f * b(col, j);
    }
  }
  BallMatrix x(n, b.cols(), b.zero());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = n; i-- > 0;) {
      ComplexBall acc = b(i, j);
      for (std::size_t k = i + 1; k < n; ++k) acc = acc - a(i, k) * x(k, j);
      x(i, j) = acc / a(i, i);
    }
  return x;
}

BallVector solve(const BallMatrix& a, const BallVector& b) {
  const BallMatrix x = solve(a, BallMatrix::from_columns({b}, b.size(), a.zero()));
  return x.col(0);
}

BallMatrix inverse(const BallMatrix& a) {
  return solve(a, ball_identity(a.rows(), a.zero().precision()));
}

BallMatrix matrix_exp_numeric(const BallMatrix& m_in, Precision prec) {
  const std::size_t n = m_in.rows();
  if (n != m_in.cols()) throw std::invalid_argument("matrix exponential of a non-square matrix");
  const BallMatrix m = m_in.map([&](const ComplexBall& z) { return z.with_precision(prec); });
  const RealEnclosure norm = frobenius_norm(m);
  if (!norm.is_finite()) throw std::domain_error("matrix exponential of an unbounded matrix");

  // Halve until the norm is at most 1/2.
  unsigned long squarings = 0;
  double a = norm.upper_double();
  while (a > 0.5) {
    a /= 2;
    ++squarings;
  }
  mpq_class factor(1);
  factor /= mpz_class(1) << static_cast<mp_bitcnt_t>(squarings);
  const RealEnclosure f = RealEnclosure::from_rational(factor, prec);
  const BallMatrix x = m.map([&](const ComplexBall& z) { return f * z; });
  const RealEnclosure xa = norm * f;
  const RealEnclosure xa_up = RealEnclosure::from_bounds(xa.upper(), xa.upper(), prec);

  // Taylor terms until a^{K+1}/(K+1)! / (1 - a/(K+2)) drops below 2^-prec.
  BallMatrix sum = ball_identity(n, prec);
  BallMatrix term = ball_identity(n, prec);
  RealEnclosure tail = xa_up;  // a^{K+1}/(K+1)! for K = 0
  const RealEnclosure target = RealEnclosure::from_rational(mpq_class(1, mpz_class(1) << static_cast<mp_bitcnt_t>(prec)), prec);
  long k = 0;
  for (;;) {
    const RealEnclosure bound = tail / (RealEnclosure::from_long(1, prec) - xa_up / (k + 2));
    if (bound.certainly_less(target) || k > 4 * static_cast<long>(prec)) {
      const RealEnclosure err = RealEnclosure::from_bounds(bound.upper(), bound.upper(), prec);
      sum = sum.map([&](const ComplexBall& z) { return ComplexBall(z.real().widened(err), z.imag().widened(err)); });
      break;
    }
    ++k;
    term = term * x;
    const RealEnclosure inv_k = RealEnclosure::from_rational(mpq_class(1, k), prec);
    term = term.map([&](const ComplexBall& z) { return inv_k * z; });
    sum = sum + term;
    tail = tail * xa_up / (k + 1);
  }
  for (unsigned long s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

bool contains(const BallMatrix& outer, const BallMatrix& inner) {
  if (outer.rows() != inner.rows() || outer.cols() != inner.cols()) return false;
  for (std::size_t i = 0; i < outer.rows(); ++i)
    for (std::size_t j = 0; j < outer.cols(); ++j)
      if (!outer(i, j).contains(inner(i, j))) return false;
  return true;
}

bool overlaps(const BallMatrix& a, const BallMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).overlaps(b(i, j))) return false;
  return true;
}

}  // namespace afflog
