#include "afflog/boundengine/constants.hpp"

#include <stdexcept>

#include "afflog/balls/embed.hpp"
#include "afflog/heights/projective.hpp"
#include "afflog/heights/subspace.hpp"

namespace afflog {

namespace {

mpz_class ipow(std::size_t base, std::size_t exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace

RealEnclosure upper_point(const RealEnclosure& x) { return RealEnclosure::from_bounds(x.upper(), x.upper(), x.precision()); }

RealEnclosure log_binomial(std::size_t n, std::size_t k, Precision prec) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return log(RealEnclosure::from_integer(c, prec));
}

mpz_class c5_constant(std::size_t m, std::size_t degree) {
  if (m == 0 || degree == 0) throw std::invalid_argument("c5 needs m >= 1 and a field degree >= 1");
  return ipow(2, 32 * m + 24) * ipow(m, m * m + 8 * m + 13) * ipow(degree, m + 5);
}

C4Value c4_constant(const GroupData& group, std::size_t d, Precision prec) {
  const std::size_t m = group.m(), n = group.n(), degree = group.field()->degree();
  if (d < 1 || d + 1 > n) throw std::invalid_argument("subspace dimension d must satisfy 1 <= d <= n - 1");
  C4Value out;
  out.integer_part = ipow(2, 32 * m + 31) * ipow(degree, m + 5) * ipow(m * m - d, 4) * ipow(m, m * m + 8 * m + 25);

  bool exact = true;
  const mpz_class disc = abs(group.field()->discriminant());
  const RealEnclosure one = RealEnclosure::from_long(1, prec);
  if (disc <= 2) {
    out.disc_factor = one;
  } else {
    out.disc_factor = max(log(RealEnclosure::from_integer(disc, prec)), one);
    exact = false;
  }

  const unsigned long zpow = m * m + 2 * m + 2;
  std::optional<mpq_class> zsum;
  bool rational_z = true;
  for (const auto& z : group.z().flat()) rational_z = rational_z && z.is_rational();
  if (rational_z) {
    mpq_class s = 0;
    for (const auto& z : group.z().flat()) s += z.rational_value() * z.rational_value();
    zsum = s * static_cast<unsigned long>(n);
  }
  if (zsum && mpz_perfect_square_p(zsum->get_num_mpz_t()) && mpz_perfect_square_p(zsum->get_den_mpz_t())) {
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), zsum->get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), zsum->get_den_mpz_t());
    const mpq_class root(num, den);
    if (root >= 3) {
      mpz_class p_num, p_den;
      mpz_pow_ui(p_num.get_mpz_t(), num.get_mpz_t(), zpow);
      mpz_pow_ui(p_den.get_mpz_t(), den.get_mpz_t(), zpow);
      out.z_factor = RealEnclosure::from_rational(mpq_class(p_num, p_den), prec);
      exact = exact && p_den == 1;
      if (exact) out.exact = out.integer_part * p_num;
    }
  }
  if (out.z_factor.contains_zero()) {
    RealEnclosure s(prec);
    for (const auto& z : group.z().flat()) s += embed(z, 0, prec).abs2();
    out.z_factor = pow(max(RealEnclosure::e(prec), sqrt(s * static_cast<long>(n))), zpow);
    exact = false;
  }

  out.gamma_height = height_projective(gamma_matrix(group.z(), d), HeightVariant::h, prec);
  if (mpfr_cmp_ui(out.gamma_height.upper(), 1) <= 0) {
    out.gamma_factor = one;
  } else {
    out.gamma_factor = max(one, out.gamma_height);
    exact = false;
  }
  if (!exact) out.exact.reset();
  out.value = RealEnclosure::from_integer(out.integer_part, prec) * out.disc_factor * out.z_factor * out.gamma_factor;
  return out;
}

Prop7Result prop7_rhs(const std::vector<Prop7Term>& terms, const std::vector<FieldElement>& betas, Precision prec) {
  const std::size_t m = terms.size();
  if (m == 0) throw std::invalid_argument("prop7 needs at least one logarithm");
  if (betas.size() != m + 1) throw std::invalid_argument("prop7 needs beta_0, ..., beta_m");
  const FieldPtr& k = betas.front().field();
  const long degree = static_cast<long>(k->degree());
  const RealEnclosure e = RealEnclosure::e(prec);
  const RealEnclosure inv_degree = RealEnclosure::from_rational(mpq_class(mpz_class(1), mpz_class(degree)), prec);

  Prop7Result out;
  out.c = max(log(RealEnclosure::from_long(degree, prec)), RealEnclosure::from_long(1, prec));
  RealEnclosure b = max(exp(out.c), e);
  RealEnclosure prod = RealEnclosure::from_long(1, prec);
  for (const auto& t : terms) {
    if (t.alpha.is_zero()) throw std::invalid_argument("prop7 needs nonzero alpha_i");
    const RealEnclosure a = max(max(hprime_scalar(t.alpha, prec), e * t.lambda.abs() / degree), inv_degree);
    out.a.push_back(a);
    prod *= a;
    b = max(b, a * degree);
  }
  for (const auto& beta : betas) b = max(b, exp(hprime_scalar(beta, prec)));
  out.b = b;
  mpz_class coeff = 1;
  mpz_class tmp;
  mpz_ui_pow_ui(tmp.get_mpz_t(), 2, 26 * m);
  coeff *= tmp;
  mpz_ui_pow_ui(tmp.get_mpz_t(), m, 3 * m);
  coeff *= tmp;
  mpz_ui_pow_ui(tmp.get_mpz_t(), static_cast<unsigned long>(degree), m + 2);
  coeff *= tmp;
  out.rhs = -(RealEnclosure::from_integer(coeff, prec) * log(b) * prod * out.c);
  return out;
}

RealEnclosure diagnostics_c12(const NumberField& field, std::size_t m, std::size_t d, Precision prec) {
  if (d < 1 || d >= m * m) throw std::invalid_argument("c12 needs 1 <= d < m^2");
  const long codim = static_cast<long>(m * m - d);
  const RealEnclosure two_over_pi = RealEnclosure::from_long(2, prec) / RealEnclosure::pi(prec);
  const RealEnclosure disc = RealEnclosure::from_integer(abs(field.discriminant()), prec);
  mpq_class ratio(mpz_class(codim), mpz_class(2 * static_cast<long>(field.degree())));
  ratio.canonicalize();
  const RealEnclosure first = RealEnclosure::from_rational(ratio, prec) * log(two_over_pi * disc);
  const RealEnclosure term = first + log_binomial(m * m, m * m - d, prec) / 2;
  return max(term, RealEnclosure::from_long(1, prec)) * 2;
}

}  // namespace afflog
