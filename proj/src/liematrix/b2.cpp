#include "afflog/liematrix/b2.hpp"

#include <functional>
#include <stdexcept>

#include "afflog/balls/embed.hpp"

namespace afflog {

RealEnclosure b2_value(const MatrixK& v, Precision prec) {
  const FieldElement d = det_matrix(v);
  if (d.is_zero()) throw std::invalid_argument("conjugator is singular");
  const RealEnclosure ratio =
      pow(mat_norm(embed(v, 0, prec)), static_cast<unsigned long>(v.rows())) / embed(d, 0, prec).abs();
  return max(max(RealEnclosure::e(prec), mat_height(v, prec)), ratio);
}

namespace {

MatrixK scale_blocks(const MatrixK& v, const JordanData& jd, const std::vector<long>& t) {
  MatrixK out = v;
  std::size_t col = 0;
  for (std::size_t b = 0; b < jd.blocks.size(); ++b) {
    mpq_class s = 1;
    if (t[b] > 0) s = mpq_class(mpz_class(1) << static_cast<unsigned long>(t[b]));
    if (t[b] < 0) s = mpq_class(mpz_class(1), mpz_class(1) << static_cast<unsigned long>(-t[b]));
    for (std::size_t k = 0; k < jd.blocks[b].size; ++k, ++col)
      for (std::size_t i = 0; i < v.rows(); ++i) out(i, col) = v(i, col) * s;
  }
  return out;
}

bool better(const RealEnclosure& a, const RealEnclosure& b) { return mpfr_cmp(a.upper(), b.upper()) < 0; }

}  // namespace

B2Witness b2_witness(const KPoint& kp, int budget, Precision prec) {
  if (budget < 0) throw std::invalid_argument("search budget must be nonnegative");
  const JordanData& jd = kp.jordan();
  const std::size_t nb = jd.blocks.size();
  std::vector<long> t(nb, 0);
  B2Witness best{kp.conjugator(), b2_value(kp.conjugator(), prec), t};
  auto consider = [&](const std::vector<long>& cand) {
    const MatrixK v = scale_blocks(kp.conjugator(), jd, cand);
    RealEnclosure val = b2_value(v, prec);
    if (better(val, best.value)) best = {v, std::move(val), cand};
  };

  const long width = 2L * budget + 1;
  double total = 1;
  for (std::size_t b = 0; b < nb; ++b) total *= static_cast<double>(width);
  if (total <= 4096) {
    std::function<void(std::size_t)> walk = [&](std::size_t b) {
      if (b == nb) {
        consider(t);
        return;
      }
      for (long x = -budget; x <= budget; ++x) {
        t[b] = x;
        walk(b + 1);
      }
      t[b] = 0;
    };
    walk(0);
    return best;
  }
  // Coordinate descent from the unscaled conjugator.
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<long> cand = best.exponents;
      const RealEnclosure before = best.value;
      for (long x = -budget; x <= budget; ++x) {
        cand[b] = x;
        consider(cand);
      }
      improved = improved || better(best.value, before);
    }
  }
  return best;
}

}  // namespace afflog
