#include <algorithm>
#include <stdexcept>

#include "afflog/balls/roots.hpp"
#include "afflog/exactfield/number_field.hpp"

namespace afflog {

Embeddings compute_embeddings(const std::vector<mpz_class>& minpoly, Precision prec) {
  if (prec < 32) throw std::invalid_argument("embedding precision must be at least 32 bits");
  const std::vector<mpq_class> coeffs(minpoly.begin(), minpoly.end());
  std::vector<ComplexBall> roots = isolate_roots(coeffs, prec);
  const std::size_t n = roots.size();

  // Pair each non-real root with its conjugate and make the pair exactly symmetric.
  std::vector<std::size_t> partner(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (roots[i].is_real() || partner[i] != n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || roots[j].is_real() || partner[j] != n) continue;
      if (roots[j].overlaps(roots[i].conj())) {
        partner[i] = j;
        partner[j] = i;
        const ComplexBall merged = hull(roots[i], roots[j].conj());
        roots[i] = merged;
        roots[j] = merged.conj();
        break;
      }
    }
    if (partner[i] == n) throw std::runtime_error("could not pair complex roots; increase precision");
  }

  // Distinguished root: largest real part (enclosure-aware), then largest imaginary part.
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const bool tie = roots[i].real().overlaps(roots[best].real());
    if ((!tie && roots[best].real().certainly_less(roots[i].real())) ||
        (tie && roots[i].imag().mid_double() > roots[best].imag().mid_double()))
      best = i;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (a == best || b == best) return a == best && b != best;
    const double ra = roots[a].real().mid_double(), rb = roots[b].real().mid_double();
    if (ra != rb) return ra > rb;
    return roots[a].imag().mid_double() > roots[b].imag().mid_double();
  });

  Embeddings out;
  out.precision = prec;
  for (std::size_t k = 0; k < n; ++k) out.roots.push_back(roots[order[k]]);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t orig = order[k];
    if (used[orig]) continue;
    used[orig] = true;
    if (partner[orig] == n) {
      out.places.push_back({Place::Kind::real, k, 1});
    } else {
      used[partner[orig]] = true;
      out.places.push_back({Place::Kind::complex, k, 2});
    }
  }
  return out;
}

}  // namespace afflog
