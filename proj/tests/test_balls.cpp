#include <doctest.h>

#include <cmath>

#include "afflog/balls/distance.hpp"
#include "afflog/balls/embed.hpp"
#include "afflog/balls/roots.hpp"
#include "afflog/balls/verify.hpp"
#include "afflog/cli/families.hpp"

using namespace afflog;

namespace {

FieldElement rat(const FieldPtr& k, long a, long b = 1) {
  mpq_class q{mpz_class(a), mpz_class(b)};
  q.canonicalize();
  return k->from_rational(q);
}

BallVector real_vector(const std::vector<long>& xs, Precision prec = 128) {
  BallVector out;
  for (long x : xs) out.push_back(ComplexBall::from_long(x, prec));
  return out;
}

}  // namespace

TEST_CASE("real enclosures contain the exact value") {
  const RealEnclosure third = RealEnclosure::from_rational(mpq_class(1, 3));
  CHECK(third.contains(mpq_class(1, 3)));
  CHECK(third.width() > 0);
  CHECK(third.width() < 1e-37);
  const RealEnclosure s = sqrt(RealEnclosure::from_long(2));
  CHECK((s * s).contains(mpq_class(2)));
  CHECK(log(exp(third)).contains(mpq_class(1, 3)));
  CHECK(sin(RealEnclosure::pi()).contains_zero());
  CHECK(cos(RealEnclosure::pi()).contains(mpq_class(-1)));
  CHECK((third - third).contains_zero());
  CHECK(RealEnclosure::from_long(3).certainly_positive());
  CHECK_FALSE((third - third).certainly_positive());
  CHECK(std::fabs(log_rational(mpq_class(10), 128).mid_double() - std::log(10.0)) < 1e-15);
  CHECK_THROWS(log(RealEnclosure::from_long(-1)));
}

TEST_CASE("interval division by an interval containing zero throws") {
  const RealEnclosure z = RealEnclosure::from_bounds(-1.0, 1.0);
  CHECK_THROWS_AS(RealEnclosure::from_long(1) / z, std::domain_error);
}

TEST_CASE("complex balls") {
  const ComplexBall minus_one = ComplexBall::from_long(-1);
  const ComplexBall l = log_principal(minus_one);
  CHECK(l.contains(ComplexBall::i_pi()));
  CHECK(exp(ComplexBall::i_pi()).real().contains(mpq_class(-1)));
  CHECK(exp(ComplexBall::i_pi()).imag().contains_zero());
  const ComplexBall i = ComplexBall::from_rational(mpq_class(0), mpq_class(1));
  CHECK((i * i).real().contains(mpq_class(-1)));
  CHECK((ComplexBall::from_long(1) / i).imag().contains(mpq_class(-1)));
  CHECK(pow(i, 4).real().contains(mpq_class(1)));
}

TEST_CASE("root isolation") {
  const auto r = isolate_roots(std::vector<mpq_class>{mpq_class(-2), mpq_class(0), mpq_class(1)}, 128);
  REQUIRE(r.size() == 2);
  double lo = std::min(r[0].real().mid_double(), r[1].real().mid_double());
  CHECK(std::fabs(lo + std::sqrt(2.0)) < 1e-15);
  const auto c = isolate_roots(std::vector<mpq_class>{mpq_class(-2), mpq_class(0), mpq_class(0), mpq_class(1)}, 128);
  REQUIRE(c.size() == 3);
  int real_roots = 0;
  for (const auto& z : c) {
    if (z.imag().contains_zero()) ++real_roots;
    std::vector<ComplexBall> coeffs{ComplexBall::from_long(-2), ComplexBall::from_long(0), ComplexBall::from_long(0),
                                    ComplexBall::from_long(1)};
    CHECK(horner(coeffs, z).contains_zero());
  }
  CHECK(real_roots == 1);
}

TEST_CASE("ball linear algebra") {
  BallMatrix a(2, 2, ComplexBall(128));
  a(0, 0) = ComplexBall::from_long(2);
  a(0, 1) = ComplexBall::from_long(1);
  a(1, 0) = ComplexBall::from_long(1);
  a(1, 1) = ComplexBall::from_long(1);
  const BallMatrix inv = inverse(a);
  CHECK(inv(0, 0).real().contains(mpq_class(1)));
  CHECK(inv(0, 1).real().contains(mpq_class(-1)));
  CHECK(inv(1, 1).real().contains(mpq_class(2)));
  CHECK(frobenius_norm(a).certainly_positive());
  CHECK((frobenius_norm(a) * frobenius_norm(a)).contains(mpq_class(7)));
  BallMatrix d = ball_zero(2, 2, 128);
  d(0, 0) = ComplexBall::from_long(1);
  d(1, 1) = ComplexBall::i_pi();
  const BallMatrix e = matrix_exp_numeric(d, 128);
  CHECK(e(0, 0).real().overlaps(RealEnclosure::e(128)));
  CHECK(std::fabs(e(0, 0).real().mid_double() - std::exp(1.0)) < 1e-12);
  CHECK(e(1, 1).real().contains(mpq_class(-1)));
}

TEST_CASE("embedding elements and matrices") {
  const FieldPtr k = named_field("Qsqrt2");
  const ComplexBall s = embed(k->theta());
  CHECK(std::fabs(s.real().mid_double() - std::sqrt(2.0)) < 1e-15);
  CHECK(embed(rat(k, 1, 3)).real().contains(mpq_class(1, 3)));
  MatrixK m(1, 2, k->zero());
  m(0, 1) = k->theta() * k->theta();
  CHECK(embed(m)(0, 1).real().contains(mpq_class(2)));
}

TEST_CASE("distances over Q") {
  const FieldPtr q = NumberField::rationals();
  // coordinate hyperplane: distance is the dropped coordinate
  const SubspaceSpec w(q, MatrixK::from_columns({{rat(q, 1), rat(q, 0), rat(q, 0)}, {rat(q, 0), rat(q, 1), rat(q, 0)}}, 3,
                                                 q->zero()));
  CHECK(distance_to_subspace(real_vector({4, 5, -3}), w).contains(mpq_class(3)));
  // line spanned by e1: distance of (1, 1, 1) is sqrt 2
  const SubspaceSpec line(q, MatrixK::from_columns({{rat(q, 1), rat(q, 0), rat(q, 0)}}, 3, q->zero()));
  CHECK(sqr(distance_to_subspace(real_vector({1, 1, 1}), line)).contains(mpq_class(2)));
  CHECK(sqr(distance_to_subspace(real_vector({1, 2, 2}), SubspaceSpec::zero_space(q, 3))).contains(mpq_class(9)));
  const auto n = hyperplane_normal(*family_generate("remark10", 1).subspace);
  CHECK(n == std::vector<FieldElement>{rat(q, 1), rat(q, 0), rat(q, 0), rat(q, 1)});
  const auto n7 = hyperplane_normal(*family_generate("remark10", 7).subspace);
  CHECK(n7[3] == rat(q, 1, 7));
}

TEST_CASE("distances over Q(i) agree with and without a conjugation") {
  // dist((1, 0), span (1, i))^2 = 1 - |<(1,0),(1,i)>|^2 / |(1,i)|^2 = 1/2
  const FieldPtr qi = named_field("Qi");
  const FieldPtr bare = NumberField::create({mpz_class(1), mpz_class(0), mpz_class(1)});
  const BallVector u = real_vector({1, 0});
  for (const FieldPtr& k : {qi, bare}) {
    const SubspaceSpec w(k, MatrixK::from_columns({{k->one(), k->theta()}}, 2, k->zero()));
    const RealEnclosure d = distance_to_subspace(u, w);
    CHECK(sqr(d).contains(mpq_class(1, 2)));
    CHECK(d.width() < 1e-30);
  }
}

TEST_CASE("precision monotonicity of distances") {
  for (long k : {3L, 40L}) {
    const Instance lo = family_generate("remark11", k, 128), hi = family_generate("remark11", k, 256);
    const RealEnclosure d128 = distance_to_subspace(lo.kpoint->coords_B(128), *lo.subspace, 128);
    const RealEnclosure d256 = distance_to_subspace(hi.kpoint->coords_B(256), *hi.subspace, 256);
    CHECK(d128.overlaps(d256));
    CHECK(d256.width() <= d128.width());
  }
}

TEST_CASE("verify decides the families and refuses u in W") {
  for (BoundMode mode : {BoundMode::hyperplane, BoundMode::theorem}) {
    const Instance a = family_generate("remark10", 5);
    CHECK(verify_instance(a.id, *a.kpoint, *a.subspace, mode).status == VerifyStatus::ok);
    const Instance b = family_generate("remark11", 9);
    CHECK(verify_instance(b.id, *b.kpoint, *b.subspace, mode).status == VerifyStatus::ok);
  }
  const FieldPtr q = NumberField::rationals();
  const Instance a = family_generate("remark10", 1);
  // u = diag(0, log 2) lies in span(e2, e3, e4)
  const SubspaceSpec w(q, MatrixK::from_columns({{rat(q, 0), rat(q, 1), rat(q, 0), rat(q, 0)},
                                                 {rat(q, 0), rat(q, 0), rat(q, 1), rat(q, 0)},
                                                 {rat(q, 0), rat(q, 0), rat(q, 0), rat(q, 1)}},
                                                4, q->zero()));
  const VerifyReport r = verify_instance("in-w", *a.kpoint, w, BoundMode::theorem, 1024);
  CHECK(r.status == VerifyStatus::inconclusive);
  CHECK(r.precision == kMaxPrecision);
}
