#include <doctest.h>

#include <cmath>

#include "afflog/balls/distance.hpp"
#include "afflog/boundengine/bounds.hpp"
#include "afflog/boundengine/constants.hpp"
#include "afflog/cli/families.hpp"
#include "afflog/liematrix/b2.hpp"

using namespace afflog;

namespace {

mpz_class power(unsigned long b, unsigned long e) {
  mpz_class out = 1;
  for (unsigned long i = 0; i < e; ++i) out *= b;
  return out;
}

bool rel_close(double x, double y, double tol) { return std::fabs(x - y) <= tol * std::fabs(y); }

FieldElement rat(const FieldPtr& k, long a) { return k->from_rational(mpq_class(a)); }

GroupData diagonal_torus(const FieldPtr& q) {
  const MatrixK z = MatrixK::from_columns({{rat(q, 1), rat(q, 0), rat(q, 0), rat(q, 0)},
                                           {rat(q, 0), rat(q, 0), rat(q, 0), rat(q, 1)}}, 4, q->zero());
  return GroupData(q, 2, z);
}

}  // namespace

TEST_CASE("c5 is an exact integer") {
  CHECK(c5_constant(2, 1) == power(2, 121));
  for (unsigned long m = 1; m <= 3; ++m)
    for (unsigned long deg = 1; deg <= 4; ++deg)
      CHECK(c5_constant(m, deg) == power(2, 32 * m + 24) * power(m, m * m + 8 * m + 13) * power(deg, m + 5));
  CHECK_THROWS(c5_constant(0, 1));
}

TEST_CASE("c4 for GL_m over Q") {
  const FieldPtr q = NumberField::rationals();
  const C4Value gl2 = c4_constant(GroupData::general_linear(q, 2), 3);
  REQUIRE(gl2.exact);
  CHECK(*gl2.exact == power(2, 160));
  CHECK(gl2.gamma_height.contains_zero());
  // GL_3, d = 8: 2^127 * 1^4 * 3^58 * max{e, sqrt(9 * 9)}^17 = 2^127 * 3^92
  const C4Value gl3 = c4_constant(GroupData::general_linear(q, 3), 8);
  REQUIRE(gl3.exact);
  CHECK(*gl3.exact == power(2, 127) * power(3, 92));
  // repeated evaluation is identical
  CHECK(*c4_constant(GroupData::general_linear(q, 3), 8).exact == *gl3.exact);
  CHECK_THROWS(c4_constant(GroupData::general_linear(q, 2), 4));
  CHECK_THROWS(c4_constant(GroupData::general_linear(q, 2), 0));
}

TEST_CASE("c4 with a discriminant and a small Z") {
  // Q(i): extra factors 2^7 from the degree and log 4 from the discriminant
  const C4Value qi = c4_constant(GroupData::general_linear(named_field("Qi"), 2), 3);
  CHECK_FALSE(qi.exact);
  CHECK(rel_close(std::log2(qi.value.mid_double()), 167 + std::log2(std::log(4.0)), 1e-12));
  // torus: n = 2, sqrt(2 * 2) = 2 < e so the Z term is e^10; h(Gamma) = 0
  const C4Value t = c4_constant(diagonal_torus(NumberField::rationals()), 1);
  CHECK_FALSE(t.exact);
  const double expect = 95 + 4 * std::log2(3.0) + 45 + 10 / std::log(2.0);
  CHECK(rel_close(std::log2(t.value.mid_double()), expect, 1e-12));
}

TEST_CASE("prop7 worked example") {
  const FieldPtr q = NumberField::rationals();
  const ComplexBall lambda = ComplexBall::from_real(log_rational(mpq_class(2), 128));
  const Prop7Result r = prop7_rhs({{lambda, rat(q, 2)}}, {q->zero(), q->one()});
  const double expect = -std::ldexp(1.0, 26) * std::exp(1.0) * std::log(2.0);
  CHECK(rel_close(r.rhs.mid_double(), expect, 1e-12));
  CHECK(rel_close(r.a[0].mid_double(), std::exp(1.0) * std::log(2.0), 1e-14));
  CHECK(r.c.contains(mpq_class(1)));
  CHECK(rel_close(r.b.mid_double(), std::exp(1.0), 1e-14));
  // a large beta_1 takes over b, and the bound scales with log b
  const Prop7Result big = prop7_rhs({{lambda, rat(q, 2)}}, {q->zero(), rat(q, 1000)});
  CHECK(rel_close(big.rhs.mid_double(), expect * std::log(1000.0), 1e-12));
  CHECK_THROWS(prop7_rhs({{lambda, q->zero()}}, {q->zero(), q->one()}));
  CHECK_THROWS(prop7_rhs({{lambda, rat(q, 2)}}, {q->one()}));
}

TEST_CASE("c12 diagnostics") {
  CHECK(diagnostics_c12(*NumberField::rationals(), 2, 3).contains(mpq_class(2)));
  // Q(cbrt 2), m = 2, d = 1: 2 * ((3/6) log((2/pi) 108) + (1/2) log 4)
  const double expect = 2 * (0.5 * std::log(2 / M_PI * 108) + 0.5 * std::log(4.0));
  CHECK(rel_close(diagnostics_c12(*named_field("Qcbrt2"), 2, 1).mid_double(), expect, 1e-12));
  CHECK_THROWS(diagnostics_c12(*NumberField::rationals(), 2, 4));
}

TEST_CASE("remark10 bounds match the assembled formula") {
  for (long k : {10L, 1000L}) {
    const Instance in = family_generate("remark10", k);
    // v = I so b2 = e; h(exp u) = |u| = log 2 < e, hence b = e^2
    const double log_b = 2.0;
    const double tail = log_b * std::exp(3 * log_b) * std::max(1.0, std::log(double(k)));
    const BoundReport h = hyperplane_bound(*in.kpoint, *in.subspace);
    CHECK(rel_close(h.log_lower.mid_double(), -std::ldexp(tail, 121), 1e-12));
    CHECK(h.c5);
    const BoundReport t = theorem_bound(*in.kpoint, *in.subspace);
    CHECK(rel_close(t.log_lower.mid_double(), -std::ldexp(tail, 160), 1e-12));
    REQUIRE(t.c4);
    CHECK(*t.c4->exact == power(2, 160));
    CHECK(h.distance.overlaps(t.distance));
  }
}

TEST_CASE("remark11 bounds match the assembled formula") {
  const Instance in = family_generate("remark11", 5);
  const BoundReport r = hyperplane_bound(*in.kpoint, *in.subspace);
  // u = 2 pi i a b^T with a = (6/5, -1/5), b = (4/5, -1/5), so |u| = 2 pi sqrt(37 * 17) / 25
  const double norm_u = 2 * M_PI * std::sqrt(37.0 * 17.0) / 25;
  CHECK(rel_close(r.norm_u.mid_double(), norm_u, 1e-14));
  CHECK(r.h_exp_u.contains_zero());
  CHECK(rel_close(r.b2.value.upper_double(), std::exp(1.0), 1e-14));
  const double b = std::exp(1.0) * norm_u;
  CHECK(rel_close(r.log_lower.mid_double(), -std::ldexp(std::log(b) * b * b * b, 121), 1e-12));
}

TEST_CASE("a larger b2 never raises the bound") {
  const Instance in = family_generate("remark11", 7);
  BoundOptions opt;
  const BoundReport base = theorem_bound(*in.kpoint, *in.subspace, opt);
  B2Witness worse = b2_witness(*in.kpoint);
  worse.value = worse.value * 3;
  opt.b2 = worse;
  const BoundReport perturbed = theorem_bound(*in.kpoint, *in.subspace, opt);
  CHECK(mpfr_cmp(perturbed.log_lower.lower(), base.log_lower.lower()) <= 0);
}

TEST_CASE("pairing identities") {
  for (const char* fam : {"remark10", "remark11"})
    for (long k : {2L, 3L, 17L}) {
      const Instance in = family_generate(fam, k);
      const PairingData p = pairing_data(*in.kpoint, *in.subspace);
      CHECK(p.trace_form.real().overlaps(p.trace_uw.real()));
      CHECK(p.trace_form.imag().overlaps(p.trace_uw.imag()));
      CHECK(p.linear_form.real().overlaps(p.trace_form.real()));
      CHECK(p.linear_form.imag().overlaps(p.trace_form.imag()));
      const RealEnclosure d = distance_to_subspace(in.kpoint->coords_B(128), *in.subspace);
      CHECK(p.linear_form.abs().overlaps(p.w_norm * d));
    }
}

TEST_CASE("refusals") {
  const FieldPtr q = NumberField::rationals();
  const Instance in = family_generate("remark10", 1);
  const SubspaceSpec contains_u(q, MatrixK::from_columns({{rat(q, 0), rat(q, 1), rat(q, 0), rat(q, 0)},
                                                          {rat(q, 0), rat(q, 0), rat(q, 1), rat(q, 0)},
                                                          {rat(q, 0), rat(q, 0), rat(q, 0), rat(q, 1)}},
                                                         4, q->zero()));
  CHECK_THROWS_AS(hyperplane_bound(*in.kpoint, contains_u), UndecidedError);
  CHECK_THROWS_AS(theorem_bound(*in.kpoint, contains_u), UndecidedError);
  const SubspaceSpec plane(q, MatrixK::from_columns({{rat(q, 0), rat(q, 1), rat(q, 0), rat(q, 0)},
                                                     {rat(q, 0), rat(q, 0), rat(q, 1), rat(q, 0)}},
                                                    4, q->zero()));
  CHECK_THROWS_AS(hyperplane_bound(*in.kpoint, plane), std::invalid_argument);
  CHECK(theorem_bound(*in.kpoint, plane).d == 2);
  CHECK_THROWS(theorem_bound(*in.kpoint, SubspaceSpec::zero_space(q, 4)));
  CHECK(parse_bound_mode("theorem") == BoundMode::theorem);
  CHECK_THROWS(parse_bound_mode("both"));
}
