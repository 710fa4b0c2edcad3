#pragma once

#include <algorithm>
#include <iosfwd>
#include <string>

#include "afflog/balls/real_enclosure.hpp"

namespace afflog {

/// Certified complex enclosure stored as a rectangle re x im.
class ComplexBall {
 public:
  explicit ComplexBall(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  ComplexBall(RealEnclosure re, RealEnclosure im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexBall from_real(RealEnclosure re);
  static ComplexBall from_rational(const mpq_class& re, const mpq_class& im, Precision prec = kDefaultPrecision);
  static ComplexBall from_long(long re, Precision prec = kDefaultPrecision);
  /// i * pi
  static ComplexBall i_pi(Precision prec = kDefaultPrecision);

  const RealEnclosure& real() const noexcept { return re_; }
  const RealEnclosure& imag() const noexcept { return im_; }
  Precision precision() const noexcept { return std::max(re_.precision(), im_.precision()); }

  /// Point ball at the rectangle center.
  ComplexBall midpoint() const;
  /// Upper bound (as a point enclosure) on the distance from the center to any point of the ball.
  RealEnclosure radius() const;
  ComplexBall with_precision(Precision prec) const;

  bool is_real() const;  // imaginary part is exactly [0, 0]
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool contains(const ComplexBall& inner) const { return re_.contains(inner.re_) && im_.contains(inner.im_); }
  bool overlaps(const ComplexBall& other) const { return re_.overlaps(other.re_) && im_.overlaps(other.im_); }

  ComplexBall conj() const { return ComplexBall(re_, -im_); }
  /// |z|^2
  RealEnclosure abs2() const;
  RealEnclosure abs() const;

  std::string to_string(int digits = 20) const;

  ComplexBall operator-() const { return ComplexBall(-re_, -im_); }
  ComplexBall& operator+=(const ComplexBall& o);
  ComplexBall& operator-=(const ComplexBall& o);
  ComplexBall& operator*=(const ComplexBall& o);
  ComplexBall& operator/=(const ComplexBall& o);

 private:
  RealEnclosure re_;
  RealEnclosure im_;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const RealEnclosure& a, const ComplexBall& b);
/// Throws std::domain_error when the divisor contains zero.
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

ComplexBall hull(const ComplexBall& a, const ComplexBall& b);
ComplexBall exp(const ComplexBall& z);
/// Principal logarithm; throws when the ball meets the closed negative real axis ambiguously.
ComplexBall log_principal(const ComplexBall& z);
ComplexBall pow(const ComplexBall& z, unsigned long n);

std::ostream& operator<<(std::ostream& os, const ComplexBall& z);

}  // namespace afflog
