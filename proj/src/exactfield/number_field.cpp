#include "afflog/exactfield/number_field.hpp"

#include <stdexcept>
#include <string>

#include "afflog/balls/roots.hpp"
#include "afflog/exactfield/field_element.hpp"
#include "afflog/exactfield/linalg.hpp"

namespace afflog {

namespace {

Poly<mpq_class> as_poly(const std::vector<mpz_class>& f) {
  std::vector<mpq_class> c(f.begin(), f.end());
  return Poly<mpq_class>(std::move(c), mpq_class(0));
}

std::string poly_string(const Poly<mpq_class>& p) {
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const mpq_class& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    const mpq_class a = abs(c);
    if (a != 1 || k == 0) out += format_rational(a);
    if (k >= 1) out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

bool contains_integer(const RealEnclosure& x, mpz_class& out) {
  if (!x.is_finite()) return false;
  mpz_class lo, hi;
  mpfr_get_z(lo.get_mpz_t(), x.lower(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), x.upper(), MPFR_RNDD);
  if (lo != hi) return false;  // none, or several candidates
  out = lo;
  return true;
}

}  // namespace

void check_irreducible(const std::vector<mpz_class>& f) {
  const std::size_t deg = f.size() - 1;
  if (deg > 6) throw std::invalid_argument("fields of degree greater than 6 are not supported");
  if (deg <= 1) return;
  const Poly<mpq_class> p = as_poly(f);
  if (Poly<mpq_class>::gcd(p, p.derivative()).degree() > 0)
    throw std::invalid_argument("minimal polynomial " + poly_string(p) + " has a repeated factor");

  const std::vector<mpq_class> coeffs(f.begin(), f.end());
  const auto roots = isolate_roots(coeffs, 256);
  // A monic integer factor of degree s is a product of s linear factors over C.
  for (std::size_t s = 1; s <= deg / 2; ++s) {
    for (const auto& subset : combinations(deg, s)) {
      std::vector<ComplexBall> prod{ComplexBall::from_long(1, 256)};
      for (std::size_t idx : subset) {
        std::vector<ComplexBall> next(prod.size() + 1, ComplexBall(256));
        for (std::size_t k = 0; k < prod.size(); ++k) {
          next[k + 1] = next[k + 1] + prod[k];
          next[k] = next[k] - prod[k] * roots[idx];
        }
        prod = std::move(next);
      }
      std::vector<mpq_class> cand;
      bool ok = true;
      for (const auto& c : prod) {
        mpz_class z;
        if (!c.imag().contains_zero() || !contains_integer(c.real(), z)) {
          ok = false;
          break;
        }
        cand.emplace_back(z);
      }
      if (!ok) continue;
      const Poly<mpq_class> g(std::move(cand), mpq_class(0));
      if (Poly<mpq_class>::divmod(p, g).second.is_null())
        throw std::invalid_argument("minimal polynomial " + poly_string(p) + " is reducible: factor " +
                                    poly_string(g));
    }
  }
}

FieldPtr NumberField::create(std::vector<mpz_class> minpoly, std::optional<Matrix<mpq_class>> integral_basis,
                             std::optional<std::vector<mpq_class>> conjugation_image) {
  if (minpoly.size() < 2) throw std::invalid_argument("minimal polynomial must have degree at least 1");
  if (minpoly.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  std::shared_ptr<NumberField> field(new NumberField());
  if (minpoly.size() == 2) {
    // Every degree-1 field is Q; normalize the generator to 0.
    minpoly = {mpz_class(0), mpz_class(1)};
    if (integral_basis) {
      if (integral_basis->rows() != 1 || integral_basis->cols() != 1 || abs((*integral_basis)(0, 0)) != 1)
        throw std::invalid_argument("integral basis of Q must be [1] or [-1]");
    }
    conjugation_image.reset();
  }
  check_irreducible(minpoly);
  field->minpoly_ = std::move(minpoly);
  const std::size_t n = field->degree();

  if (integral_basis) {
    if (integral_basis->rows() != n || integral_basis->cols() != n)
      throw std::invalid_argument("integral basis must be a " + std::to_string(n) + "x" + std::to_string(n) +
                                  " matrix");
    if (is_zero(det(*integral_basis))) throw std::invalid_argument("integral basis is singular");
    field->basis_ = *integral_basis;
    field->explicit_basis_ = true;
  } else {
    field->basis_ = identity_like(n, mpq_class(0));
  }
  field->basis_inv_ = inverse(field->basis_);

  // theta^k for k < 2n - 1, reduced modulo the minimal polynomial.
  auto& pw = field->powers_;
  for (std::size_t k = 0; k + 1 < 2 * n || k == 0; ++k) {
    std::vector<mpq_class> v(n, mpq_class(0));
    if (k < n) {
      v[k] = 1;
    } else {
      const auto& prev = pw[k - 1];
      // theta * prev: shift up, then reduce theta^n = -sum c_i theta^i.
      const mpq_class top = prev[n - 1];
      for (std::size_t i = n - 1; i > 0; --i) v[i] = prev[i - 1];
      v[0] = 0;
      for (std::size_t i = 0; i < n; ++i) v[i] -= top * field->minpoly_[i];
    }
    pw.push_back(std::move(v));
  }

  field->validate_and_finish(std::move(conjugation_image));
  return field;
}

void NumberField::validate_and_finish(std::optional<std::vector<mpq_class>> conjugation_image) {
  const std::size_t n = degree();
  std::vector<FieldElement> omega;
  for (std::size_t i = 0; i < n; ++i) omega.push_back(basis_element(i));
  for (std::size_t i = 0; i < n; ++i) {
    const Poly<mpq_class> cp = omega[i].charpoly();
    for (const auto& c : cp.coeffs())
      if (c.get_den() != 1)
        throw std::invalid_argument("integral basis element " + std::to_string(i) + " is not an algebraic integer");
  }
  Matrix<mpq_class> gram(n, n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = (omega[i] * omega[j]).trace();
  const mpq_class d = det(gram);
  if (d.get_den() != 1 || sgn(d) == 0) throw std::invalid_argument("integral basis has a non-integral discriminant");
  discriminant_ = d.get_num();

  const Embeddings& emb = embeddings(kDefaultPrecision);
  if (conjugation_image) {
    if (conjugation_image->size() != n)
      throw std::invalid_argument("conjugation image must have " + std::to_string(n) + " coefficients");
    const FieldElement c = from_coeffs(*conjugation_image);
    const Poly<FieldElement> f(
        [&] {
          std::vector<FieldElement> cs;
          for (const auto& z : minpoly_) cs.push_back(from_rational(mpq_class(z)));
          return cs;
        }(),
        zero());
    if (!f.eval(c).is_zero()) throw std::invalid_argument("conjugation image is not a root of the minimal polynomial");
    // sigma(sigma(theta)) = sum c_k sigma(theta)^k must be theta.
    FieldElement twice = zero(), power = one();
    for (std::size_t k = 0; k < n; ++k) {
      twice += power * (*conjugation_image)[k];
      power *= c;
    }
    if (!(twice == theta())) throw std::invalid_argument("conjugation image does not define an involution");
    if (!c.embed_at(emb.roots[0]).overlaps(emb.roots[0].conj()))
      throw std::invalid_argument("conjugation image does not act as complex conjugation on the distinguished embedding");
    conj_image_ = std::move(conjugation_image);
    explicit_conj_ = true;
  } else if (emb.roots[0].is_real()) {
    std::vector<mpq_class> id(n, mpq_class(0));
    if (n > 1) id[1] = 1;
    conj_image_ = std::move(id);
  }
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = create({mpz_class(0), mpz_class(1)});
  return q;
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (minpoly_ != other.minpoly_) return false;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j)
      if (basis_(i, j) != other.basis_(i, j)) return false;
  return conj_image_ == other.conj_image_;
}

const Embeddings& NumberField::embeddings(Precision prec) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = cache_.find(prec);
  if (it == cache_.end())
    it = cache_.emplace(prec, std::make_unique<Embeddings>(compute_embeddings(minpoly_, prec))).first;
  return *it->second;
}

FieldElement NumberField::zero() const { return from_rational(mpq_class(0)); }
FieldElement NumberField::one() const { return from_rational(mpq_class(1)); }

FieldElement NumberField::theta() const {
  std::vector<mpq_class> c(degree(), mpq_class(0));
  if (degree() == 1) return FieldElement(shared_from_this(), {mpq_class(0)});
  c[1] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_rational(const mpq_class& q) const {
  std::vector<mpq_class> c(degree(), mpq_class(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_coeffs(std::vector<mpq_class> coeffs) const {
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement NumberField::from_integral_coords(const std::vector<mpq_class>& coords) const {
  const std::size_t n = degree();
  if (coords.size() != n) throw std::invalid_argument("integral coordinate vector has the wrong length");
  std::vector<mpq_class> c(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) c[k] += coords[i] * basis_(i, k);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::basis_element(std::size_t i) const { return from_coeffs(basis_.row(i)); }

}  // namespace afflog
