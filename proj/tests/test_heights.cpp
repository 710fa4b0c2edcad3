#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "afflog/cli/families.hpp"
#include "afflog/exactfield/linalg.hpp"
#include "afflog/heights/projective.hpp"
#include "afflog/heights/subspace.hpp"

using namespace afflog;

namespace {

FieldElement rat(const FieldPtr& k, long a, long b = 1) {
  mpq_class q{mpz_class(a), mpz_class(b)};
  q.canonicalize();
  return k->from_rational(q);
}

bool near(const RealEnclosure& x, double v, double tol = 1e-12) { return std::fabs(x.mid_double() - v) < tol; }

SubspaceSpec span(const FieldPtr& k, const std::vector<std::vector<long>>& cols) {
  std::vector<std::vector<FieldElement>> c;
  for (const auto& col : cols) {
    std::vector<FieldElement> v;
    for (long x : col) v.push_back(rat(k, x));
    c.push_back(v);
  }
  return SubspaceSpec(k, MatrixK::from_columns(c, cols[0].size(), k->zero()));
}

}  // namespace

TEST_CASE("heights of rational points") {
  const FieldPtr q = NumberField::rationals();
  const auto h = [&](std::vector<long> xs, HeightVariant v = HeightVariant::h) {
    std::vector<FieldElement> p;
    for (long x : xs) p.push_back(rat(q, x));
    return height_projective(ProjectivePoint(p), v);
  };
  CHECK(near(h({1, 2}), std::log(2.0)));
  CHECK(near(h({6, 4}), std::log(3.0)));  // [3:2]
  CHECK(near(h({0, 5}), 0.0));
  CHECK(near(h({1, 1}, HeightVariant::hhat), 0.5 * std::log(2.0)));
  CHECK(near(h({2, 0, 3}, HeightVariant::hprime), std::log(3.0)));
  CHECK(near(h({1, 2}, HeightVariant::hhat), 0.5 * std::log(5.0)));
  CHECK(h({1, 2}).width() < 1e-30);
  CHECK_THROWS_AS(ProjectivePoint({q->zero(), q->zero()}), std::invalid_argument);
  CHECK_THROWS_AS(ProjectivePoint({}), std::invalid_argument);
}

TEST_CASE("h' of scalars and vectors") {
  const FieldPtr q = NumberField::rationals();
  CHECK(near(hprime_scalar(rat(q, 2, 3)), std::log(3.0)));
  CHECK(near(hprime_scalar(q->zero()), 0.0));
  CHECK(near(hprime_vector({rat(q, 1, 2), rat(q, 5)}), std::log(10.0)));
  CHECK(near(hprime_vector({}), 0.0));
}

TEST_CASE("Gaussian integers") {
  const FieldPtr qi = named_field("Qi");
  // for a Gaussian integer x the finite part of [x:1] vanishes and h = log max(1, |x|)
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int t = 0; t < 30; ++t) {
    const long a = dist(rng), b = dist(rng);
    const FieldElement x = qi->from_coeffs({mpq_class(a), mpq_class(b)});
    const double expect = std::log(std::max(1.0, std::hypot(double(a), double(b))));
    CHECK(near(height_projective(ProjectivePoint({x, qi->one()}), HeightVariant::h), expect));
  }
}

TEST_CASE("scaling invariance") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (const char* name : {"Q", "Qi", "Qsqrt2", "Qzeta3", "Qcbrt2"}) {
    const FieldPtr k = named_field(name);
    for (int t = 0; t < 8; ++t) {
      std::vector<FieldElement> p;
      for (int i = 0; i < 3; ++i) {
        std::vector<mpq_class> c;
        for (std::size_t j = 0; j < k->degree(); ++j) c.emplace_back(dist(rng));
        p.push_back(k->from_coeffs(c));
      }
      if (std::all_of(p.begin(), p.end(), [](const FieldElement& x) { return x.is_zero(); })) continue;
      std::vector<mpq_class> lc;
      for (std::size_t j = 0; j < k->degree(); ++j) lc.emplace_back(dist(rng), 1 + (t % 3));
      const FieldElement lambda = k->from_coeffs(lc);
      if (lambda.is_zero()) continue;
      std::vector<FieldElement> scaled;
      for (const auto& x : p) scaled.push_back(x * lambda);
      for (HeightVariant v : {HeightVariant::h, HeightVariant::hhat})
        CHECK(height_projective(ProjectivePoint(p), v).overlaps(height_projective(ProjectivePoint(scaled), v)));
    }
  }
}

TEST_CASE("Mahler measure of quadratic integers") {
  // independent oracle: roots from the quadratic formula in double precision
  const FieldPtr k = named_field("Qsqrt5");
  for (long a = -5; a <= 5; ++a)
    for (long b = 1; b <= 4; ++b) {
      const FieldElement x = k->from_coeffs({mpq_class(a), mpq_class(b)});  // a + b*phi
      const double phi = (1 + std::sqrt(5.0)) / 2, psi = (1 - std::sqrt(5.0)) / 2;
      const double expect = (std::log(std::max(1.0, std::fabs(a + b * phi))) + std::log(std::max(1.0, std::fabs(a + b * psi)))) / 2;
      CHECK(near(mahler_height(x), expect, 1e-12));
      CHECK(mahler_height(x).overlaps(height_projective(ProjectivePoint({x, k->one()}), HeightVariant::h)));
    }
  CHECK(near(mahler_height(named_field("Qi")->theta()), 0.0));
  CHECK(near(mahler_height(named_field("Qi")->from_coeffs({mpq_class(1, 2), mpq_class(0)})), std::log(2.0)));
}

TEST_CASE("Pluecker coordinates of the remark10 family") {
  for (long k : {1L, 7L, 1000L}) {
    const Instance in = family_generate("remark10", k);
    const auto p = pluecker(*in.subspace);
    REQUIRE(p.size() == 4);
    // proportional to (1, 0, 0, -k)
    CHECK(p[1].is_zero());
    CHECK(p[2].is_zero());
    CHECK(p[3] == p[0] * (-k));
    CHECK(subspace_height(*in.subspace).overlaps(log_rational(mpq_class(k), kDefaultPrecision)));
  }
}

TEST_CASE("subspace basics") {
  const FieldPtr q = NumberField::rationals();
  const SubspaceSpec w = span(q, {{1, 2, 3}, {0, 1, 1}});
  CHECK(w.dim() == 2);
  CHECK(w.contains({rat(q, 1), rat(q, 3), rat(q, 4)}));
  CHECK_FALSE(w.contains({rat(q, 1), rat(q, 0), rat(q, 0)}));
  CHECK(w.same_span(span(q, {{1, 3, 4}, {1, 1, 2}})));
  CHECK_THROWS_AS(span(q, {{1, 2}, {2, 4}}), std::invalid_argument);
  CHECK(near(subspace_height(SubspaceSpec::zero_space(q, 3)), 0.0));
  CHECK(near(subspace_height(span(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 0.0));
  CHECK_THROWS(subspace_height(w, HeightVariant::hprime));
}

TEST_CASE("orthogonal complement over Q") {
  const FieldPtr q = NumberField::rationals();
  const SubspaceSpec w = span(q, {{1, 2, 3, 4}, {0, 1, -1, 2}});
  const SubspaceSpec c = orthogonal_complement(w);
  CHECK(c.dim() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      FieldElement s = q->zero();
      for (std::size_t r = 0; r < 4; ++r) s += w.basis()(r, i) * c.basis()(r, j);
      CHECK(s.is_zero());
    }
  CHECK(orthogonal_complement(c).same_span(w));
  // the L2 height is invariant under the complement over Q
  CHECK(subspace_height(w, HeightVariant::hhat).overlaps(subspace_height(c, HeightVariant::hhat)));
}

TEST_CASE("orthogonal complement over Q(i) uses the Hermitian product") {
  const FieldPtr qi = named_field("Qi");
  const FieldElement i = qi->theta();
  const SubspaceSpec w(qi, MatrixK::from_columns({{qi->one(), i}}, 2, qi->zero()));
  const SubspaceSpec c = orthogonal_complement(w);
  // <(1, i), (1, -i)>_H = 1*conj(1) + i*conj(-i) = 1 - 1 = 0
  CHECK(c.same_span(SubspaceSpec(qi, MatrixK::from_columns({{qi->one(), -i}}, 2, qi->zero()))));
  CHECK(orthogonal_complement(c).same_span(w));
  const FieldPtr bare = NumberField::create({mpz_class(1), mpz_class(0), mpz_class(1)});
  const SubspaceSpec line(bare, MatrixK::from_columns({{bare->one(), bare->theta()}}, 2, bare->zero()));
  CHECK_THROWS_AS(orthogonal_complement(line), std::domain_error);
}

TEST_CASE("gamma minors") {
  const FieldPtr q = NumberField::rationals();
  MatrixK z = MatrixK::identity(4, q->zero(), q->one());
  const auto g = gamma_minors(z, 2);
  CHECK(g.rows() == 6);
  CHECK(g.cols() == 6);
  // minors of the identity form the identity on 2-subsets
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(g(r, c) == (r == c ? q->one() : q->zero()));
  CHECK(gamma_matrix(z, 2).size() == 36);
  CHECK(near(height_projective(gamma_matrix(z, 2), HeightVariant::h), 0.0));
}
