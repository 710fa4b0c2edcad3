#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace afflog {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMaxPrecision = 2048;

/// Closed real interval [lower, upper] with outward-rounded MPFR endpoints.
///
/// Every operation returns an enclosure of the exact result for all inputs in
/// the operand enclosures. Binary operations work at the larger of the two
/// operand precisions.
class RealEnclosure {
 public:
  explicit RealEnclosure(Precision prec = kDefaultPrecision);
  RealEnclosure(const RealEnclosure& other);
  RealEnclosure(RealEnclosure&& other) noexcept;
  RealEnclosure& operator=(const RealEnclosure& other);
  RealEnclosure& operator=(RealEnclosure&& other) noexcept;
  ~RealEnclosure();

  static RealEnclosure from_long(long v, Precision prec = kDefaultPrecision);
  static RealEnclosure from_integer(const mpz_class& v, Precision prec = kDefaultPrecision);
  static RealEnclosure from_rational(const mpq_class& v, Precision prec = kDefaultPrecision);
  /// Encloses [lo, hi]; endpoints are rounded outward to `prec`.
  static RealEnclosure from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec);
  static RealEnclosure from_bounds(double lo, double hi, Precision prec = kDefaultPrecision);
  static RealEnclosure whole_line(Precision prec = kDefaultPrecision);

  static RealEnclosure pi(Precision prec = kDefaultPrecision);
  static RealEnclosure e(Precision prec = kDefaultPrecision);
  static RealEnclosure log2(Precision prec = kDefaultPrecision);

  Precision precision() const noexcept { return mpfr_get_prec(lo_); }
  mpfr_srcptr lower() const noexcept { return lo_; }
  mpfr_srcptr upper() const noexcept { return hi_; }

  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  double mid_double() const;
  /// Upper bound of upper - lower.
  double width() const;
  /// Point enclosure at the (nearest-rounded) midpoint; not an enclosure of *this.
  RealEnclosure midpoint() const;
  /// Upper bound of half the width, as a one-point enclosure rounded up.
  RealEnclosure radius() const;
  /// Same set re-rounded outward at another precision.
  RealEnclosure with_precision(Precision prec) const;

  bool is_finite() const;
  bool contains_zero() const;
  bool contains(const mpq_class& x) const;
  bool contains(const RealEnclosure& inner) const;
  bool overlaps(const RealEnclosure& other) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  /// upper(*this) < lower(other)
  bool certainly_less(const RealEnclosure& other) const;
  /// upper(*this) <= lower(other)
  bool certainly_le(const RealEnclosure& other) const;

  /// Widens symmetrically by a nonnegative amount.
  RealEnclosure widened(const RealEnclosure& amount) const;

  /// Decimal strings rounded outward (lower rounded down, upper rounded up).
  std::string lower_string(int digits = 25) const;
  std::string upper_string(int digits = 25) const;
  std::string to_string(int digits = 25) const;

  RealEnclosure operator-() const;
  RealEnclosure& operator+=(const RealEnclosure& o);
  RealEnclosure& operator-=(const RealEnclosure& o);
  RealEnclosure& operator*=(const RealEnclosure& o);
  RealEnclosure& operator/=(const RealEnclosure& o);

  friend RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b);

  friend RealEnclosure sqr(const RealEnclosure& a);
  friend RealEnclosure sqrt(const RealEnclosure& a);
  friend RealEnclosure log(const RealEnclosure& a);
  friend RealEnclosure exp(const RealEnclosure& a);
  friend RealEnclosure abs(const RealEnclosure& a);
  friend RealEnclosure pow(const RealEnclosure& a, unsigned long n);
  friend RealEnclosure max(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure min(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b);
  /// Throws std::domain_error when the enclosures are disjoint.
  friend RealEnclosure intersect(const RealEnclosure& a, const RealEnclosure& b);
  friend RealEnclosure sin(const RealEnclosure& a);
  friend RealEnclosure cos(const RealEnclosure& a);
  /// Argument of x + iy in (-pi, pi]. Throws when the box meets the origin or
  /// straddles the branch cut.
  friend RealEnclosure atan2(const RealEnclosure& y, const RealEnclosure& x);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

RealEnclosure sqr(const RealEnclosure& a);
RealEnclosure sqrt(const RealEnclosure& a);
RealEnclosure log(const RealEnclosure& a);
RealEnclosure exp(const RealEnclosure& a);
RealEnclosure abs(const RealEnclosure& a);
RealEnclosure pow(const RealEnclosure& a, unsigned long n);
RealEnclosure max(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure min(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure intersect(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure sin(const RealEnclosure& a);
RealEnclosure cos(const RealEnclosure& a);
RealEnclosure atan2(const RealEnclosure& y, const RealEnclosure& x);

std::ostream& operator<<(std::ostream& os, const RealEnclosure& x);

RealEnclosure operator+(const RealEnclosure& a, long b);
RealEnclosure operator*(const RealEnclosure& a, long b);
RealEnclosure operator/(const RealEnclosure& a, long b);

/// Enclosure of log(x) for a positive rational.
RealEnclosure log_rational(const mpq_class& x, Precision prec);

}  // namespace afflog
