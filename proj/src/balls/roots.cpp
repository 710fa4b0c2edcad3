#include "afflog/balls/roots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace afflog {

ComplexBall horner(const std::vector<ComplexBall>& coeffs, const ComplexBall& z) {
  if (coeffs.empty()) return ComplexBall(z.precision());
  ComplexBall acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

namespace {

std::vector<ComplexBall> derivative(const std::vector<ComplexBall>& c) {
  std::vector<ComplexBall> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(RealEnclosure::from_long(static_cast<long>(k), c[k].precision()) * c[k]);
  return d;
}

std::vector<ComplexBall> midpoints(const std::vector<ComplexBall>& c, Precision wp) {
  std::vector<ComplexBall> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.with_precision(wp).midpoint());
  return out;
}

double magnitude(const ComplexBall& z) {
  const double re = z.real().mid_double(), im = z.imag().mid_double();
  return std::hypot(re, im);
}

// Aberth-Ehrlich iteration on point values; returns approximate roots.
std::vector<ComplexBall> aberth(const std::vector<ComplexBall>& coeffs, Precision wp) {
  const std::size_t n = coeffs.size() - 1;
  const auto pc = midpoints(coeffs, wp);
  const auto dc = derivative(pc);
  const double lead = magnitude(pc[n]);
  double bound = 0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, magnitude(pc[k]) / lead);
  const double radius = 1.0 + bound;

  std::vector<ComplexBall> z;
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z.emplace_back(RealEnclosure::from_bounds(radius * std::cos(ang), radius * std::cos(ang), wp).midpoint(),
                   RealEnclosure::from_bounds(radius * std::sin(ang), radius * std::sin(ang), wp).midpoint());
  }

  const double tol_exp = -static_cast<double>(wp) + 8;
  int settled = 0;
  for (int iter = 0; iter < 2000 && settled < 3; ++iter) {
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexBall p = horner(pc, z[k]).midpoint();
      if (p.contains_zero()) continue;
      ComplexBall dp = horner(dc, z[k]).midpoint();
      if (dp.contains_zero()) {
        z[k] = z[k] + ComplexBall::from_rational(mpq_class(1, 1000), mpq_class(1, 997), wp);
        worst = 1;
        continue;
      }
      const ComplexBall w = (p / dp).midpoint();
      ComplexBall s(wp);
      bool clash = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const ComplexBall diff = (z[k] - z[j]).midpoint();
        if (diff.contains_zero()) {
          clash = true;
          break;
        }
        s = (s + ComplexBall::from_long(1, wp) / diff).midpoint();
      }
      if (clash) {
        z[k] = z[k] + ComplexBall::from_rational(mpq_class(1, 991), mpq_class(-1, 983), wp);
        worst = 1;
        continue;
      }
      const ComplexBall den = (ComplexBall::from_long(1, wp) - w * s).midpoint();
      const ComplexBall step = den.contains_zero() ? w : (w / den).midpoint();
      z[k] = (z[k] - step).midpoint();
      const double scale = std::max(1.0, magnitude(z[k]));
      const double rel = magnitude(step) / scale;
      worst = std::max(worst, rel);
    }
    if (worst == 0 || std::log2(worst) < tol_exp)
      ++settled;
    else
      settled = 0;
  }
  return z;
}

struct Certified {
  std::vector<ComplexBall> centers;
  std::vector<RealEnclosure> radii;  // point enclosures of upper bounds
};

// Weierstrass inclusion radii n |p(z_i)| / (|a_n| prod |z_i - z_j|).
bool inclusion_radii(const std::vector<ComplexBall>& coeffs, Certified& c, Precision wp) {
  const std::size_t n = coeffs.size() - 1;
  const RealEnclosure lead = coeffs[n].with_precision(wp).abs();
  if (!lead.certainly_positive()) return false;
  c.radii.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const RealEnclosure val = horner(coeffs, c.centers[i]).abs();
    RealEnclosure prod = lead;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod = prod * (c.centers[i] - c.centers[j]).abs();
    if (!prod.certainly_positive()) return false;
    const RealEnclosure up = RealEnclosure::from_bounds(val.upper(), val.upper(), wp);
    const RealEnclosure lo = RealEnclosure::from_bounds(prod.lower(), prod.lower(), wp);
    const RealEnclosure r = up * static_cast<long>(n) / lo;
    c.radii.push_back(RealEnclosure::from_bounds(r.upper(), r.upper(), wp));
  }
  return true;
}

bool disjoint(const Certified& c) {
  const std::size_t n = c.centers.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RealEnclosure gap = (c.centers[i] - c.centers[j]).abs();
      if (!(c.radii[i] + c.radii[j]).certainly_less(gap)) return false;
    }
  return true;
}

bool try_isolate(const std::vector<ComplexBall>& coeffs, Precision wp, Precision prec, std::vector<ComplexBall>& out) {
  const std::size_t n = coeffs.size() - 1;
  bool real_poly = true;
  for (const auto& c : coeffs) real_poly = real_poly && c.is_real();

  Certified cert;
  cert.centers = aberth(coeffs, wp);
  if (!inclusion_radii(coeffs, cert, wp)) return false;

  std::vector<bool> snapped(n, false);
  if (real_poly) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!cert.radii[i].certainly_less(abs(cert.centers[i].imag()))) {
        snapped[i] = true;
        cert.centers[i] = ComplexBall::from_real(cert.centers[i].real());
      }
    }
    if (!inclusion_radii(coeffs, cert, wp)) return false;
  }
  if (!disjoint(cert)) return false;

  out.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const RealEnclosure& r = cert.radii[i];
    RealEnclosure re = cert.centers[i].real().widened(r).with_precision(prec);
    if (snapped[i]) {
      out.push_back(ComplexBall::from_real(std::move(re)));
      continue;
    }
    if (real_poly && !r.certainly_less(abs(cert.centers[i].imag()))) return false;
    out.emplace_back(std::move(re), cert.centers[i].imag().widened(r).with_precision(prec));
  }
  return true;
}

}  // namespace

std::vector<ComplexBall> isolate_roots(const std::vector<ComplexBall>& coeffs_in, Precision prec) {
  std::vector<ComplexBall> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back().contains_zero() && mpfr_zero_p(coeffs.back().real().upper()) &&
         mpfr_zero_p(coeffs.back().real().lower()) && coeffs.back().is_real())
    coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("root isolation of the zero polynomial");
  if (coeffs.back().contains_zero())
    throw std::runtime_error("leading coefficient not separated from zero at " + std::to_string(prec) +
                             " bits; increase precision");
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {(-coeffs[0] / coeffs[1]).with_precision(prec)};

  std::vector<ComplexBall> out;
  for (Precision wp = prec + 32; wp <= 4 * prec + 64; wp *= 2)
    if (try_isolate(coeffs, wp, prec, out)) return out;
  throw std::runtime_error("failed to isolate polynomial roots at " + std::to_string(prec) +
                           " bits; increase precision");
}

std::vector<ComplexBall> isolate_roots(const std::vector<mpq_class>& coeffs, Precision prec) {
  for (Precision p = prec;; p *= 2) {
    std::vector<ComplexBall> balls;
    for (const auto& c : coeffs) balls.push_back(ComplexBall::from_rational(c, 0, p));
    try {
      auto roots = isolate_roots(balls, p);
      if (p != prec)
        for (auto& r : roots) r = r.with_precision(std::max(prec, p));
      return roots;
    } catch (const std::runtime_error&) {
      if (p >= kMaxPrecision) throw;
    }
  }
}

}  // namespace afflog
