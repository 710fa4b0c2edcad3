#include "afflog/balls/complex_ball.hpp"

#include <ostream>
#include <stdexcept>

namespace afflog {

ComplexBall ComplexBall::from_real(RealEnclosure re) {
  RealEnclosure im(re.precision());
  return ComplexBall(std::move(re), std::move(im));
}

ComplexBall ComplexBall::from_rational(const mpq_class& re, const mpq_class& im, Precision prec) {
  return ComplexBall(RealEnclosure::from_rational(re, prec), RealEnclosure::from_rational(im, prec));
}

ComplexBall ComplexBall::from_long(long re, Precision prec) {
  return from_real(RealEnclosure::from_long(re, prec));
}

ComplexBall ComplexBall::i_pi(Precision prec) { return ComplexBall(RealEnclosure(prec), RealEnclosure::pi(prec)); }

ComplexBall ComplexBall::midpoint() const { return ComplexBall(re_.midpoint(), im_.midpoint()); }

RealEnclosure ComplexBall::radius() const {
  const RealEnclosure rx = re_.radius(), ry = im_.radius();
  const RealEnclosure r = sqrt(sqr(rx) + sqr(ry));
  return RealEnclosure::from_bounds(r.upper(), r.upper(), r.precision());
}

ComplexBall ComplexBall::with_precision(Precision prec) const {
  return ComplexBall(re_.with_precision(prec), im_.with_precision(prec));
}

bool ComplexBall::is_real() const {
  return mpfr_zero_p(im_.lower()) && mpfr_zero_p(im_.upper());
}

RealEnclosure ComplexBall::abs2() const { return sqr(re_) + sqr(im_); }

RealEnclosure ComplexBall::abs() const {
  if (is_real()) return afflog::abs(re_);
  return sqrt(abs2());
}

std::string ComplexBall::to_string(int digits) const {
  return re_.to_string(digits) + " + " + im_.to_string(digits) + "i";
}

ComplexBall& ComplexBall::operator+=(const ComplexBall& o) { return *this = *this + o; }
ComplexBall& ComplexBall::operator-=(const ComplexBall& o) { return *this = *this - o; }
ComplexBall& ComplexBall::operator*=(const ComplexBall& o) { return *this = *this * o; }
ComplexBall& ComplexBall::operator/=(const ComplexBall& o) { return *this = *this / o; }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.real() + b.real(), a.imag() + b.imag());
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.real() - b.real(), a.imag() - b.imag());
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  if (a.is_real() && b.is_real()) return ComplexBall::from_real(a.real() * b.real());
  return ComplexBall(a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real());
}

ComplexBall operator*(const RealEnclosure& a, const ComplexBall& b) {
  return ComplexBall(a * b.real(), a * b.imag());
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  if (b.contains_zero()) throw std::domain_error("complex division by a ball containing zero");
  if (b.is_real()) return ComplexBall(a.real() / b.real(), a.imag() / b.real());
  const RealEnclosure den = b.abs2();
  const ComplexBall num = a * b.conj();
  return ComplexBall(num.real() / den, num.imag() / den);
}

ComplexBall hull(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(hull(a.real(), b.real()), hull(a.imag(), b.imag()));
}

ComplexBall exp(const ComplexBall& z) {
  const RealEnclosure mag = exp(z.real());
  if (z.is_real()) return ComplexBall::from_real(mag);
  return ComplexBall(mag * cos(z.imag()), mag * sin(z.imag()));
}

ComplexBall log_principal(const ComplexBall& z) {
  if (z.contains_zero()) throw std::domain_error("logarithm of a ball containing zero");
  RealEnclosure modulus_log = log(z.abs2()) / 2;
  return ComplexBall(std::move(modulus_log), atan2(z.imag(), z.real()));
}

ComplexBall pow(const ComplexBall& z, unsigned long n) {
  ComplexBall result = ComplexBall::from_long(1, z.precision());
  ComplexBall base = z;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const ComplexBall& z) { return os << z.to_string(); }

}  // namespace afflog
