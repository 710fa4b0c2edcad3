#pragma once

#include <stdexcept>
#include <vector>

#include "afflog/exactfield/poly.hpp"
#include "afflog/exactfield/rational.hpp"
#include "afflog/matrix.hpp"

namespace afflog {

/// Exact linear algebra over a field type T (mpq_class or FieldElement).

template <class T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class T>
Echelon<T> rref(Matrix<T> a) {
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
    const T inv = one_like(a(row, col)) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const T f = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(r, j) = a(r, j) - f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  return rref(a).pivots.size();
}

/// Basis of the right kernel, as the columns of an a.cols() x k matrix.
template <class T>
Matrix<T> kernel(const Matrix<T>& a) {
  const Echelon<T> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> cols;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), a.zero());
    v[free] = one_like(a.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    cols.push_back(std::move(v));
  }
  return Matrix<T>::from_columns(cols, a.cols(), a.zero());
}

template <class T>
T det(Matrix<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  T result = one_like(a.zero());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) return a.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      result = -result;
    }
    result = result * a(col, col);
    const T inv = one_like(a.zero()) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const T f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
    }
  }
  return result;
}

/// Solves a x = b for square invertible a (b may have several columns).
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, n + b.cols(), a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  const Echelon<T> e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<T> x(n, b.cols(), a.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = e.reduced(i, n + j);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows(), a.zero(), one_like(a.zero())));
}

template <class T>
Matrix<T> identity_like(std::size_t n, const T& zero) {
  return Matrix<T>::identity(n, zero, one_like(zero));
}

template <class T>
bool equal(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j) - b(i, j))) return false;
  return true;
}

template <class T>
T trace(const Matrix<T>& a) {
  T t = a.zero();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = t + a(i, i);
  return t;
}

/// Characteristic polynomial det(xI - a) by Faddeev-LeVerrier.
template <class T>
Poly<T> charpoly(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const T one = one_like(a.zero());
  std::vector<T> c(n + 1, a.zero());
  c[n] = one;
  Matrix<T> m(n, n, a.zero());
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i) + c[n - k + 1];
    c[n - k] = -(trace(Matrix<T>(a * m)) * mpq_class(mpz_class(1), mpz_class(static_cast<unsigned long>(k))));
  }
  return Poly<T>(std::move(c), a.zero());
}

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace afflog
