#include <doctest.h>

#include <random>

#include "afflog/cli/serialize.hpp"
#include "afflog/exactfield/hnf.hpp"
#include "afflog/exactfield/linalg.hpp"
#include "afflog/exactfield/rational.hpp"

using namespace afflog;

namespace {

FieldPtr quadratic(long d) {
  // x^2 - d
  return NumberField::create({mpz_class(-d), mpz_class(0), mpz_class(1)}, std::nullopt,
                             d < 0 ? std::optional<std::vector<mpq_class>>({mpq_class(0), mpq_class(-1)}) : std::nullopt);
}

FieldElement quad(const FieldPtr& k, long a, long b) { return k->from_coeffs({mpq_class(a), mpq_class(b)}); }

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-7")) == "-7");
  CHECK(format_rational(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("best rational approximation") {
  // 3.14159265358979 with denominators up to 1000 gives 355/113
  const mpq_class x("314159265358979/100000000000000");
  CHECK(best_rational(x, mpz_class(1000)) == mpq_class(355, 113));
  CHECK(best_rational(mpq_class(7, 3), mpz_class(3)) == mpq_class(7, 3));
}

TEST_CASE("discriminants of small fields") {
  CHECK(named_field("Q")->discriminant() == 1);
  CHECK(named_field("Qi")->discriminant() == -4);
  CHECK(named_field("Qsqrt2")->discriminant() == 8);
  CHECK(named_field("Qsqrt5")->discriminant() == 5);
  CHECK(named_field("Qsqrt-2")->discriminant() == -8);
  CHECK(named_field("Qzeta3")->discriminant() == -3);
  CHECK(named_field("Qzeta8")->discriminant() == 256);
  CHECK(named_field("Qcbrt2")->discriminant() == -108);
}

TEST_CASE("half-integral basis of Q(sqrt 5)") {
  Matrix<mpq_class> b(2, 2, mpq_class(0));
  b(0, 0) = 1;
  b(1, 0) = mpq_class(1, 2);
  b(1, 1) = mpq_class(1, 2);
  const FieldPtr k = NumberField::create({mpz_class(-5), mpz_class(0), mpz_class(1)}, b);
  CHECK(k->discriminant() == 5);
  CHECK(ideal_norm({k->from_rational(mpq_class(2))}) == 4);
  // (1 + sqrt5)/2 is integral
  CHECK(k->from_coeffs({mpq_class(1, 2), mpq_class(1, 2)}).integral_coordinates() ==
        std::vector<mpq_class>{mpq_class(0), mpq_class(1)});
}

TEST_CASE("field construction is validated") {
  CHECK_THROWS_AS(NumberField::create({mpz_class(-4), mpz_class(0), mpz_class(1)}), std::invalid_argument);
  CHECK_THROWS_AS(NumberField::create({mpz_class(1), mpz_class(2), mpz_class(1)}), std::invalid_argument);
  CHECK_THROWS_AS(NumberField::create({mpz_class(-2), mpz_class(0), mpz_class(2)}), std::invalid_argument);
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
  CHECK_THROWS_AS(NumberField::create({mpz_class(4), mpz_class(0), mpz_class(0), mpz_class(0), mpz_class(1)}),
                  std::invalid_argument);
  Matrix<mpq_class> half(2, 2, mpq_class(0));
  half(0, 0) = mpq_class(1, 2);
  half(1, 1) = 1;
  CHECK_THROWS_AS(NumberField::create({mpz_class(1), mpz_class(0), mpz_class(1)}, half), std::invalid_argument);
  // theta -> theta is not conjugation on i
  CHECK_THROWS_AS(NumberField::create({mpz_class(1), mpz_class(0), mpz_class(1)}, std::nullopt,
                                      std::vector<mpq_class>{mpq_class(0), mpq_class(1)}),
                  std::invalid_argument);
  CHECK_FALSE(NumberField::create({mpz_class(1), mpz_class(0), mpz_class(1)})->conj_stable());
}

TEST_CASE("quadratic norms and traces match the closed form") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-30, 30);
  for (long d : {-1L, 2L, 3L, -7L}) {
    const FieldPtr k = quadratic(d);
    for (int t = 0; t < 40; ++t) {
      const long a = dist(rng), b = dist(rng), c = dist(rng), e = dist(rng);
      const FieldElement x = quad(k, a, b), y = quad(k, c, e);
      CHECK(x.norm() == mpq_class(a * a - d * b * b));
      CHECK(x.trace() == mpq_class(2 * a));
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK(x * y == quad(k, a * c + d * b * e, a * e + b * c));
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == k->one());
        CHECK(ideal_norm({x}) == abs(x.norm()));
      }
    }
  }
}

TEST_CASE("division by zero throws") {
  const FieldPtr k = named_field("Qsqrt2");
  CHECK_THROWS_AS(k->one() / k->zero(), std::domain_error);
  CHECK(k->one() / quad(k, 1, 1) == quad(k, -1, 1));
}

TEST_CASE("conjugation") {
  const FieldPtr qi = named_field("Qi");
  CHECK(quad(qi, 3, 4).conj() == quad(qi, 3, -4));
  const FieldPtr z3 = named_field("Qzeta3");
  const FieldElement w = z3->theta();
  CHECK(w.conj() == w * w);
  CHECK(w.conj().conj() == w);
  const FieldPtr z8 = named_field("Qzeta8");
  CHECK(z8->theta() * z8->theta().conj() == z8->one());
  CHECK_THROWS(NumberField::create({mpz_class(1), mpz_class(0), mpz_class(1)})->theta().conj());
}

TEST_CASE("embeddings respect the distinguished root") {
  const FieldPtr k = named_field("Qsqrt2");
  const auto r = k->theta().embed(0, 128);
  CHECK(r.real().lower_double() > 1.41);
  CHECK(r.imag().contains_zero());
  const FieldPtr qi = named_field("Qi");
  const auto& emb = qi->embeddings(128);
  CHECK(emb.places.size() == 1);
  CHECK(emb.places[0].local_degree == 2);
  CHECK(emb.roots[0].imag().lower_double() > 0.99);
  CHECK(named_field("Qcbrt2")->embeddings(128).places.size() == 2);
}

TEST_CASE("minimal polynomial of a rational element") {
  const FieldPtr k = named_field("Qzeta8");
  const auto mp = k->from_rational(mpq_class(3)).minimal_polynomial();
  CHECK(mp.degree() == 1);
  const auto mp2 = (k->theta() * k->theta()).minimal_polynomial();  // i
  CHECK(mp2.degree() == 2);
  CHECK(mp2.coeffs()[0] == 1);
}

TEST_CASE("ideal norms") {
  const FieldPtr qi = named_field("Qi");
  CHECK(ideal_norm({qi->from_rational(mpq_class(2)), quad(qi, 1, 1)}) == 2);
  CHECK(ideal_norm({quad(qi, 3, 0), quad(qi, 0, 5)}) == 1);
  CHECK(ideal_norm({qi->from_rational(mpq_class(1, 3))}) == mpq_class(1, 9));
  CHECK_THROWS_AS(ideal_norm({qi->zero()}), std::invalid_argument);
  const FieldPtr q = NumberField::rationals();
  CHECK(ideal_norm({q->from_rational(mpq_class(4)), q->from_rational(mpq_class(6))}) == 2);
}

TEST_CASE("Hermite normal form") {
  IntMatrix m(2, 1, mpz_class(0));
  m(0, 0) = 4;
  m(1, 0) = 6;
  const auto r = hnf(m);
  CHECK(r.rank == 1);
  CHECK(r.H(0, 0) == 2);
  IntMatrix a(3, 3, mpz_class(0));
  const long v[9] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = v[i];
  const auto h = hnf(a);
  CHECK(h.rank == 3);
  // |det| by cofactor expansion: 2(253-247) - 3(161-221) + 5(133-187) = -78
  CHECK(h.H(0, 0) * h.H(1, 1) * h.H(2, 2) == 78);
  CHECK(int_det(a) == -78);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(h.H(i, j) == 0);
}

TEST_CASE("exact linear algebra") {
  Matrix<mpq_class> a(2, 2, mpq_class(0));
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  CHECK(det(a) == -2);
  const auto inv = inverse(a);
  CHECK(inv(0, 0) == -2);
  CHECK(inv(1, 0) == mpq_class(3, 2));
  const auto cp = charpoly(a);
  CHECK(cp.coeffs()[0] == -2);
  CHECK(cp.coeffs()[1] == -5);
  Matrix<mpq_class> s(2, 2, mpq_class(1));
  CHECK(rank(s) == 1);
  CHECK(kernel(s).cols() == 1);
}
