#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "afflog/exactfield/rational.hpp"

namespace afflog {

/// Dense univariate polynomial over an exact field type T (coeffs[k] multiplies x^k).
/// T needs +, -, *, /, unary -, a free is_zero(T) and one_like(T).
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const T& zero) : zero_(zero) {}
  Poly(std::vector<T> coeffs, const T& zero) : zero_(zero), c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const T& coeff, std::size_t k, const T& zero) {
    std::vector<T> c(k + 1, zero);
    c[k] = coeff;
    return Poly(std::move(c), zero);
  }
  /// x - a
  static Poly linear_root(const T& a) { return Poly({-a, one_like(a)}, a - a); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_null() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  const T& zero() const noexcept { return zero_; }
  const T& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : zero_; }

  T eval(const T& x) const {
    T acc = zero_;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return Poly(std::move(d), zero_);
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    std::vector<T> out;
    const T l = c_.back();
    for (const auto& x : c_) out.push_back(x / l);
    return Poly(std::move(out), zero_);
  }

  Poly operator-() const {
    std::vector<T> out;
    for (const auto& x : c_) out.push_back(-x);
    return Poly(std::move(out), zero_);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(out), a.zero_);
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_null() || b.is_null()) return Poly(a.zero_);
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(out), a.zero_);
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!is_zero(a.c_[k] - b.c_[k])) return false;
    return true;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_null()) throw std::domain_error("polynomial division by zero");
    std::vector<T> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (r.size() <= db) return {Poly(a.zero_), a};
    std::vector<T> q(r.size() - db, a.zero_);
    const T lb = b.c_.back();
    for (std::size_t k = r.size(); k-- > db;) {
      if (is_zero(r[k])) continue;
      const T f = r[k] / lb;
      q[k - db] = f;
      for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {Poly(std::move(q), a.zero_), Poly(std::move(r), a.zero_)};
  }

  /// Monic gcd.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_null()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Squarefree part p / gcd(p, p'), monic.
  Poly squarefree_part() const {
    if (degree() <= 0) return monic();
    const Poly g = gcd(*this, derivative());
    return divmod(*this, g).first.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  T zero_{};
  std::vector<T> c_;
};

}  // namespace afflog
