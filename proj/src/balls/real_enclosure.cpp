#include "afflog/balls/real_enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace afflog {

namespace {

// RAII scratch value for intermediate MPFR results.
struct Scratch {
  mpfr_t v;
  explicit Scratch(Precision p) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
};

Precision joint(const RealEnclosure& a, const RealEnclosure& b) {
  return std::max(a.precision(), b.precision());
}

void set_whole(mpfr_ptr lo, mpfr_ptr hi) {
  mpfr_set_inf(lo, -1);
  mpfr_set_inf(hi, 1);
}

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  char* buf = nullptr;
  const char* fmt = rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe";
  if (mpfr_asprintf(&buf, fmt, digits, x) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

RealEnclosure::RealEnclosure(Precision prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealEnclosure::RealEnclosure(const RealEnclosure& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealEnclosure::RealEnclosure(RealEnclosure&& other) noexcept {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealEnclosure& RealEnclosure::operator=(const RealEnclosure& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

RealEnclosure& RealEnclosure::operator=(RealEnclosure&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

RealEnclosure::~RealEnclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealEnclosure RealEnclosure::from_long(long v, Precision prec) {
  RealEnclosure r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::from_integer(const mpz_class& v, Precision prec) {
  RealEnclosure r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::from_rational(const mpq_class& v, Precision prec) {
  RealEnclosure r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec) {
  RealEnclosure r(prec);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  if (mpfr_greater_p(r.lo_, r.hi_)) throw std::invalid_argument("enclosure bounds out of order");
  return r;
}

RealEnclosure RealEnclosure::from_bounds(double lo, double hi, Precision prec) {
  RealEnclosure r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  if (mpfr_greater_p(r.lo_, r.hi_)) throw std::invalid_argument("enclosure bounds out of order");
  return r;
}

RealEnclosure RealEnclosure::whole_line(Precision prec) {
  RealEnclosure r(prec);
  set_whole(r.lo_, r.hi_);
  return r;
}

RealEnclosure RealEnclosure::pi(Precision prec) {
  RealEnclosure r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::e(Precision prec) {
  RealEnclosure r(prec);
  Scratch one(prec);
  mpfr_set_ui(one.v, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, one.v, MPFR_RNDD);
  mpfr_exp(r.hi_, one.v, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::log2(Precision prec) {
  RealEnclosure r(prec);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

double RealEnclosure::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealEnclosure::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RealEnclosure::mid_double() const {
  Scratch m(precision() + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double RealEnclosure::width() const {
  Scratch w(precision());
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

RealEnclosure RealEnclosure::midpoint() const {
  RealEnclosure r(precision());
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

RealEnclosure RealEnclosure::radius() const {
  RealEnclosure r(precision());
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

RealEnclosure RealEnclosure::with_precision(Precision prec) const {
  return from_bounds(lo_, hi_, prec);
}

bool RealEnclosure::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

bool RealEnclosure::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool RealEnclosure::contains(const mpq_class& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool RealEnclosure::contains(const RealEnclosure& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_lessequal_p(inner.hi_, hi_);
}

bool RealEnclosure::overlaps(const RealEnclosure& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool RealEnclosure::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealEnclosure::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool RealEnclosure::certainly_less(const RealEnclosure& other) const { return mpfr_less_p(hi_, other.lo_); }
bool RealEnclosure::certainly_le(const RealEnclosure& other) const { return mpfr_lessequal_p(hi_, other.lo_); }

RealEnclosure RealEnclosure::widened(const RealEnclosure& amount) const {
  RealEnclosure r(joint(*this, amount));
  mpfr_sub(r.lo_, lo_, amount.hi_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, amount.hi_, MPFR_RNDU);
  return r;
}

std::string RealEnclosure::lower_string(int digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string RealEnclosure::upper_string(int digits) const { return format(hi_, digits, MPFR_RNDU); }

std::string RealEnclosure::to_string(int digits) const {
  return "[" + lower_string(digits) + ", " + upper_string(digits) + "]";
}

RealEnclosure RealEnclosure::operator-() const {
  RealEnclosure r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealEnclosure& RealEnclosure::operator+=(const RealEnclosure& o) { return *this = *this + o; }
RealEnclosure& RealEnclosure::operator-=(const RealEnclosure& o) { return *this = *this - o; }
RealEnclosure& RealEnclosure::operator*=(const RealEnclosure& o) { return *this = *this * o; }
RealEnclosure& RealEnclosure::operator/=(const RealEnclosure& o) { return *this = *this / o; }

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure r(joint(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_)) set_whole(r.lo_, r.hi_);
  return r;
}

RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure r(joint(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_)) set_whole(r.lo_, r.hi_);
  return r;
}

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  const Precision p = joint(a, b);
  RealEnclosure r(p);
  // Sign-case analysis avoids the four-product min/max when possible.
  const int al = mpfr_sgn(a.lo_), ah = mpfr_sgn(a.hi_), bl = mpfr_sgn(b.lo_), bh = mpfr_sgn(b.hi_);
  if (al >= 0 && bl >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  } else if (ah <= 0 && bh <= 0) {
    mpfr_mul(r.lo_, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  } else if (al >= 0 && bh <= 0) {
    mpfr_mul(r.lo_, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.lo_, b.hi_, MPFR_RNDU);
  } else if (ah <= 0 && bl >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  } else {
    Scratch t(p);
    mpfr_srcptr alist[2] = {a.lo_, a.hi_};
    mpfr_srcptr blist[2] = {b.lo_, b.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (mpfr_srcptr x : alist)
      for (mpfr_srcptr y : blist) {
        mpfr_mul(t.v, x, y, MPFR_RNDD);
        if (mpfr_nan_p(t.v)) mpfr_set_zero(t.v, 1);
        mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
        mpfr_mul(t.v, x, y, MPFR_RNDU);
        if (mpfr_nan_p(t.v)) mpfr_set_zero(t.v, 1);
        mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
      }
  }
  // 0 * inf: the product set still contains 0; widen to be safe.
  if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_)) set_whole(r.lo_, r.hi_);
  return r;
}

RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
  if (b.contains_zero()) throw std::domain_error("division by an enclosure containing zero");
  const Precision p = joint(a, b);
  RealEnclosure inv(p);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

RealEnclosure operator+(const RealEnclosure& a, long b) { return a + RealEnclosure::from_long(b, a.precision()); }
RealEnclosure operator*(const RealEnclosure& a, long b) { return a * RealEnclosure::from_long(b, a.precision()); }
RealEnclosure operator/(const RealEnclosure& a, long b) { return a / RealEnclosure::from_long(b, a.precision()); }

RealEnclosure sqr(const RealEnclosure& a) { return pow(a, 2); }

RealEnclosure sqrt(const RealEnclosure& a) {
  if (mpfr_sgn(a.hi_) < 0) throw std::domain_error("sqrt of a negative enclosure");
  RealEnclosure r(a.precision());
  if (mpfr_sgn(a.lo_) <= 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure log(const RealEnclosure& a) {
  if (mpfr_sgn(a.hi_) <= 0) throw std::domain_error("log of a nonpositive enclosure");
  RealEnclosure r(a.precision());
  if (mpfr_sgn(a.lo_) <= 0)
    mpfr_set_inf(r.lo_, -1);
  else
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure exp(const RealEnclosure& a) {
  RealEnclosure r(a.precision());
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure abs(const RealEnclosure& a) {
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  RealEnclosure r(a.precision());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure pow(const RealEnclosure& a, unsigned long n) {
  if (n == 0) return RealEnclosure::from_long(1, a.precision());
  if (n % 2 == 1) {
    RealEnclosure r(a.precision());
    mpfr_pow_ui(r.lo_, a.lo_, n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, a.hi_, n, MPFR_RNDU);
    return r;
  }
  const RealEnclosure m = abs(a);
  RealEnclosure r(a.precision());
  mpfr_pow_ui(r.lo_, m.lo_, n, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, m.hi_, n, MPFR_RNDU);
  return r;
}

RealEnclosure max(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure r(joint(a, b));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure min(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure r(joint(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure r(joint(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure intersect(const RealEnclosure& a, const RealEnclosure& b) {
  if (!a.overlaps(b)) throw std::domain_error("intersection of disjoint enclosures");
  RealEnclosure r(joint(a, b));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

namespace {

// f(mid) +- radius for a 1-Lipschitz function f, clamped to [-1, 1].
template <class F>
RealEnclosure lipschitz_unit(const RealEnclosure& a, F&& f) {
  const Precision p = a.precision();
  const RealEnclosure mid = a.midpoint();
  const RealEnclosure rad = hull(a - mid, mid - a);
  Scratch lo(p), hi(p);
  f(lo.v, mid.lower(), MPFR_RNDD);
  f(hi.v, mid.lower(), MPFR_RNDU);
  RealEnclosure val = RealEnclosure::from_bounds(lo.v, hi.v, p).widened(abs(rad));
  return intersect(val, RealEnclosure::from_bounds(-1.0, 1.0, p));
}

}  // namespace

RealEnclosure sin(const RealEnclosure& a) {
  if (!a.is_finite()) return RealEnclosure::from_bounds(-1.0, 1.0, a.precision());
  return lipschitz_unit(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_sin(r, x, rnd); });
}

RealEnclosure cos(const RealEnclosure& a) {
  if (!a.is_finite()) return RealEnclosure::from_bounds(-1.0, 1.0, a.precision());
  return lipschitz_unit(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_cos(r, x, rnd); });
}

RealEnclosure atan2(const RealEnclosure& y, const RealEnclosure& x) {
  const Precision p = joint(x, y);
  const bool y_zero = mpfr_zero_p(y.lo_) && mpfr_zero_p(y.hi_);
  if (y_zero) {
    if (x.certainly_positive()) return RealEnclosure(p);
    if (x.certainly_negative()) return RealEnclosure::pi(p);
    throw std::domain_error("argument of an enclosure containing zero");
  }
  if (y.contains_zero() && !x.certainly_positive())
    throw std::domain_error("argument enclosure straddles the branch cut; increase precision");
  // atan2 is (1/|z|)-Lipschitz on a box avoiding the origin.
  const RealEnclosure my = y.midpoint(), mx = x.midpoint();
  Scratch lo(p), hi(p);
  mpfr_atan2(lo.v, my.lower(), mx.lower(), MPFR_RNDD);
  mpfr_atan2(hi.v, my.lower(), mx.lower(), MPFR_RNDU);
  const RealEnclosure modulus = sqrt(sqr(x) + sqr(y));
  if (!modulus.certainly_positive()) throw std::domain_error("argument of an enclosure containing zero");
  const RealEnclosure dist = abs(x - mx) + abs(y - my);
  const RealEnclosure bump = RealEnclosure::from_bounds(dist.upper(), dist.upper(), p) /
                             RealEnclosure::from_bounds(modulus.lower(), modulus.lower(), p);
  const RealEnclosure bump_up = RealEnclosure::from_bounds(bump.upper(), bump.upper(), p);
  return RealEnclosure::from_bounds(lo.v, hi.v, p).widened(bump_up);
}

RealEnclosure log_rational(const mpq_class& x, Precision prec) {
  if (sgn(x) <= 0) throw std::domain_error("log of a nonpositive rational");
  return log(RealEnclosure::from_rational(x, prec));
}

std::ostream& operator<<(std::ostream& os, const RealEnclosure& x) { return os << x.to_string(20); }

}  // namespace afflog
