#include "afflog/exactfield/hnf.hpp"

#include <stdexcept>

namespace afflog {

namespace {

using Row = std::vector<mpz_class>;

// Replaces (a, b) by (s a + t b, -(bp/g) a + (ap/g) b) where g = gcd(ap, bp)
// for the pivot entries ap = a[col], bp = b[col]; afterwards b[col] = 0.
void gcd_combine(Row& a, Row& b, std::size_t col, Row* ua = nullptr, Row* ub = nullptr) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[col].get_mpz_t(), b[col].get_mpz_t());
  const mpz_class x = b[col] / g, y = a[col] / g;
  auto mix = [&](Row& p, Row& q) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      mpz_class np = s * p[j] + t * q[j];
      mpz_class nq = y * q[j] - x * p[j];
      p[j] = std::move(np);
      q[j] = std::move(nq);
    }
  };
  mix(a, b);
  if (ua && ub) mix(*ua, *ub);
}

std::size_t leading(const Row& r) {
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] != 0) return j;
  return r.size();
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Row> a(rows), u(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i] = m.row(i);
    u[i].assign(rows, mpz_class(0));
    u[i][i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (std::size_t i = r + 1; i < rows; ++i)
      if (a[i][col] != 0) gcd_combine(a[r], a[i], col, &u[r], &u[i]);
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0) {
      for (auto& x : a[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (std::size_t k = 0; k < r; ++k) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[k][col].get_mpz_t(), a[r][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[k][j] -= q * a[r][j];
      for (std::size_t j = 0; j < rows; ++j) u[k][j] -= q * u[r][j];
    }
    ++r;
  }
  HnfResult out;
  out.H = IntMatrix(rows, cols, mpz_class(0));
  out.U = IntMatrix(rows, rows, mpz_class(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.H(i, j) = a[i][j];
    for (std::size_t j = 0; j < rows; ++j) out.U(i, j) = u[i][j];
  }
  out.rank = r;
  return out;
}

mpz_class int_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void LatticeBuilder::add(const std::vector<mpz_class>& row_in) {
  if (row_in.size() != dim_) throw std::invalid_argument("lattice row has the wrong length");
  Row row = row_in;
  std::size_t pos = 0;
  for (; pos < basis_.size(); ++pos) {
    const std::size_t lead_row = leading(row);
    if (lead_row == dim_) break;
    const std::size_t p = leading(basis_[pos]);
    if (lead_row < p) break;  // new pivot column before this basis row
    if (row[p] != 0) gcd_combine(basis_[pos], row, p);
  }
  if (leading(row) != dim_) basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  // Normalize: positive pivots, reduce entries above each pivot.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = leading(basis_[i]);
    if (basis_[i][p] < 0)
      for (auto& x : basis_[i]) x = -x;
    for (std::size_t k = 0; k < i; ++k) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), basis_[k][p].get_mpz_t(), basis_[i][p].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) basis_[k][j] -= q * basis_[i][j];
    }
  }
}

IntMatrix LatticeBuilder::basis() const {
  IntMatrix out(basis_.size(), dim_, mpz_class(0));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = basis_[i][j];
  return out;
}

mpz_class LatticeBuilder::index() const {
  if (basis_.size() != dim_) return 0;
  mpz_class d = 1;
  for (std::size_t i = 0; i < dim_; ++i) d *= basis_[i][i];
  return abs(d);
}

}  // namespace afflog
