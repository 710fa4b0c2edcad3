#include "afflog/heights/projective.hpp"

#include <optional>
#include <stdexcept>

#include "afflog/balls/roots.hpp"
#include "afflog/exactfield/hnf.hpp"

namespace afflog {

ProjectivePoint::ProjectivePoint(std::vector<FieldElement> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("projective point needs at least one coordinate");
  bool nonzero = false;
  for (const auto& c : coords_) {
    require_same_field(coords_.front(), c);
    nonzero = nonzero || !c.is_zero();
  }
  if (!nonzero) throw std::invalid_argument("projective point has all coordinates zero");
}

namespace {

// Sum over archimedean places of n_v times the local term, or nullopt when
// some enclosure at this precision straddles zero under the logarithm.
std::optional<RealEnclosure> archimedean_sum(const std::vector<FieldElement>& coords, HeightVariant variant,
                                             Precision prec) {
  const NumberField& k = *coords.front().field();
  const Embeddings& emb = k.embeddings(prec);
  RealEnclosure total(prec);
  for (const Place& place : emb.places) {
    std::optional<RealEnclosure> local;
    for (const auto& c : coords) {
      if (c.is_zero()) continue;
      const ComplexBall z = c.is_rational() ? ComplexBall::from_rational(c.rational_value(), 0, prec)
                                            : c.embed_at(emb.roots[place.root]);
      if (variant == HeightVariant::hhat) {
        const RealEnclosure a2 = z.abs2();
        local = local ? *local + a2 : a2;
      } else {
        const RealEnclosure a = z.abs();
        local = local ? max(*local, a) : a;
      }
    }
    if (!local->certainly_positive()) return std::nullopt;
    RealEnclosure term = log(*local);
    if (variant == HeightVariant::hhat) term = term / 2;
    total += term * static_cast<long>(place.local_degree);
  }
  return total;
}

}  // namespace

RealEnclosure height_projective(const ProjectivePoint& p, HeightVariant variant, Precision prec) {
  std::vector<FieldElement> coords = p.coords();
  if (variant == HeightVariant::hprime) {
    coords.insert(coords.begin(), p.field()->one());
    variant = HeightVariant::h;
  }
  const mpq_class finite = ideal_norm(coords);
  const long degree = static_cast<long>(p.field()->degree());
  for (Precision wp = prec;; wp *= 2) {
    if (auto arch = archimedean_sum(coords, variant, wp)) return (*arch - log_rational(finite, wp)) / degree;
    if (wp * 2 > kMaxPrecision) throw std::runtime_error("height enclosure too wide; increase precision");
  }
}

RealEnclosure hprime_scalar(const FieldElement& x, Precision prec) {
  return height_projective(ProjectivePoint({x, x.field()->one()}), HeightVariant::h, prec);
}

RealEnclosure hprime_vector(const std::vector<FieldElement>& xs, Precision prec) {
  if (xs.empty()) return RealEnclosure(prec);
  return height_projective(ProjectivePoint(xs), HeightVariant::hprime, prec);
}

RealEnclosure mahler_height(const FieldElement& x, Precision prec) {
  if (x.is_zero()) return RealEnclosure(prec);
  const Poly<mpq_class> monic = x.minimal_polynomial();
  // Primitive integer multiple: clear denominators, then divide by the content.
  const auto& c = monic.coeffs();
  mpz_class den = 1, content = 0;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  for (const auto& q : c) {
    const mpq_class scaled = q * den;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  const mpq_class lead = mpq_class(den) / mpq_class(content);

  const auto roots = isolate_roots(c, prec);
  RealEnclosure sum = log_rational(abs(lead), prec);
  const RealEnclosure one = RealEnclosure::from_long(1, prec);
  for (const auto& r : roots) sum += log(max(one, r.abs()));
  return sum / static_cast<long>(monic.degree());
}

}  // namespace afflog
