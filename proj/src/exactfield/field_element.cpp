#include "afflog/exactfield/field_element.hpp"

#include <ostream>
#include <stdexcept>

#include "afflog/exactfield/linalg.hpp"

namespace afflog {

namespace {

const NumberField& field_of(const FieldElement& x) {
  if (!x.field()) throw std::logic_error("use of a field element without a field");
  return *x.field();
}

// Extended Euclid over Q[x]: returns s with s*a = gcd(a, b) (mod b), gcd made monic.
Poly<mpq_class> inverse_mod(const Poly<mpq_class>& a, const Poly<mpq_class>& b) {
  const mpq_class zero(0);
  Poly<mpq_class> r0 = b, r1 = a;
  Poly<mpq_class> s0(zero), s1({mpq_class(1)}, zero);
  while (!r1.is_null()) {
    auto [q, r] = Poly<mpq_class>::divmod(r0, r1);
    Poly<mpq_class> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("element is not invertible");
  const mpq_class inv = 1 / r0.lead();
  std::vector<mpq_class> c;
  for (const auto& x : s0.coeffs()) c.push_back(x * inv);
  return Poly<mpq_class>(std::move(c), zero);
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("field element needs a field");
  if (coeffs_.size() != field_->degree())
    throw std::invalid_argument("field element needs " + std::to_string(field_->degree()) + " coefficients");
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field()) throw std::logic_error("use of a field element without a field");
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    throw std::invalid_argument("field elements belong to different fields");
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

mpq_class FieldElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("field element is not rational");
  return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in a number field");
  const NumberField& k = field_of(*this);
  const mpq_class zero(0);
  const Poly<mpq_class> a(coeffs_, zero);
  const Poly<mpq_class> f(std::vector<mpq_class>(k.minpoly().begin(), k.minpoly().end()), zero);
  const Poly<mpq_class> s = inverse_mod(a, f);
  std::vector<mpq_class> c(k.degree(), zero);
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) c[i] = s.coeffs()[i];
  return FieldElement(field_, std::move(c));
}

Matrix<mpq_class> FieldElement::multiplication_matrix() const {
  const NumberField& k = field_of(*this);
  const std::size_t n = k.degree();
  Matrix<mpq_class> m(n, n, mpq_class(0));
  for (std::size_t j = 0; j < n; ++j) {
    const FieldElement col = *this * k.from_coeffs(k.power_table()[j]);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coeffs()[i];
  }
  return m;
}

mpq_class FieldElement::norm() const { return det(multiplication_matrix()); }

mpq_class FieldElement::trace() const {
  // Tr(theta^k) is read off the power table: trace of multiplication by x.
  return afflog::trace(multiplication_matrix());
}

Poly<mpq_class> FieldElement::charpoly() const { return afflog::charpoly(multiplication_matrix()); }

Poly<mpq_class> FieldElement::minimal_polynomial() const { return charpoly().squarefree_part(); }

std::vector<mpq_class> FieldElement::integral_coordinates() const {
  const NumberField& k = field_of(*this);
  const auto& inv = k.integral_basis_inverse();
  const std::size_t n = k.degree();
  std::vector<mpq_class> out(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += coeffs_[j] * inv(j, i);
  return out;
}

FieldElement FieldElement::conj() const {
  const NumberField& k = field_of(*this);
  if (!k.conj_stable())
    throw std::domain_error("field has no automorphism inducing complex conjugation (supply a conjugation image)");
  if (is_rational()) return *this;
  const FieldElement c = k.from_coeffs(*k.conjugation_image());
  FieldElement acc = k.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * c + k.from_rational(coeffs_[i]);
  return acc;
}

ComplexBall FieldElement::embed_at(const ComplexBall& root) const {
  const Precision prec = root.precision();
  ComplexBall acc(prec);
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * root + ComplexBall::from_rational(coeffs_[i], 0, prec);
  return acc;
}

ComplexBall FieldElement::embed(std::size_t root_index, Precision prec) const {
  const NumberField& k = field_of(*this);
  if (is_rational()) return ComplexBall::from_rational(rational_value(), 0, prec);
  const Embeddings& e = k.embeddings(prec);
  if (root_index >= e.roots.size()) throw std::out_of_range("embedding index out of range");
  return embed_at(e.roots[root_index]);
}

std::string FieldElement::to_string() const {
  if (coeffs_.size() <= 1 || is_rational()) return format_rational(coeffs_.empty() ? mpq_class(0) : coeffs_[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(coeffs_[i]);
  }
  return out + "]";
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }
FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this = *this / o; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement r = a;
  r += b;
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement r = a;
  r -= b;
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const NumberField& k = *a.field();
  const std::size_t n = k.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (b.is_rational()) return a * y[0];
  if (a.is_rational()) return b * x[0];
  std::vector<mpq_class> prod(2 * n - 1, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += x[i] * y[j];
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  const auto& pw = k.power_table();
  for (std::size_t t = n; t < prod.size(); ++t) {
    if (sgn(prod[t]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += prod[t] * pw[t][i];
  }
  return FieldElement(a.field(), std::move(out));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero in a number field");
  if (b.is_rational()) return a * (1 / b.coeffs()[0]);
  return a * b.inverse();
}

FieldElement operator*(const FieldElement& a, const mpq_class& q) {
  std::vector<mpq_class> c = a.coeffs();
  for (auto& x : c) x *= q;
  return FieldElement(a.field(), std::move(c));
}

FieldElement operator*(const FieldElement& a, long q) { return a * mpq_class(q); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.coeffs() == b.coeffs();
}

FieldElement one_like(const FieldElement& x) { return field_of(x).one(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace afflog
