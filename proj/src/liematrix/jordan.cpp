#include "afflog/liematrix/jordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "afflog/balls/embed.hpp"
#include "afflog/balls/roots.hpp"
#include "afflog/exactfield/linalg.hpp"

namespace afflog {

namespace {

using PolyK = Poly<FieldElement>;

std::string poly_text(const PolyK& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) out += ", ";
    out += p.coeffs()[k].to_string();
  }
  return out + "] (coefficients from the constant term up)";
}

MatrixK scaled(const MatrixK& a, const FieldElement& s) {
  return a.map([&](const FieldElement& x) { return x * s; });
}

MatrixK power(const MatrixK& a, std::size_t k) {
  MatrixK out = identity_like(a.rows(), a.zero());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

// Divides out (x - alpha) as often as possible; returns the multiplicity.
std::size_t divide_out(PolyK& p, const FieldElement& alpha) {
  std::size_t mult = 0;
  const PolyK lin = PolyK::linear_root(alpha);
  while (p.degree() > 0 && p.eval(alpha).is_zero()) {
    p = PolyK::divmod(p, lin).first;
    ++mult;
  }
  return mult;
}

mpq_class midpoint_rational(const RealEnclosure& x) {
  const RealEnclosure mid = x.midpoint();
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), mid.lower());
  return q;
}

// Roots of a squarefree polynomial over K, recognised from their images under
// every embedding: theta-coordinates a solve V a = (r_0, ..., r_{D-1}) with V
// the Vandermonde matrix of the conjugates of theta.
std::vector<FieldElement> recognise_roots(const PolyK& sq, const JordanOptions& opt) {
  const FieldPtr& k = sq.lead().field();
  const std::size_t deg = static_cast<std::size_t>(sq.degree());
  const std::size_t dim = k->degree();
  for (Precision prec = std::max<Precision>(opt.precision, 128);; prec *= 2) {
    try {
      const Embeddings& emb = k->embeddings(prec);
      std::vector<std::vector<ComplexBall>> roots(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        std::vector<ComplexBall> coeffs;
        for (const auto& c : sq.coeffs()) coeffs.push_back(c.is_rational() ? embed(c, 0, prec) : c.embed_at(emb.roots[i]));
        roots[i] = isolate_roots(coeffs, prec);
      }
      BallMatrix vand(dim, dim, ComplexBall(prec));
      for (std::size_t i = 0; i < dim; ++i) {
        ComplexBall p = ComplexBall::from_long(1, prec);
        for (std::size_t j = 0; j < dim; ++j) {
          vand(i, j) = p;
          p = p * (dim == 1 ? ComplexBall(prec) : emb.roots[i]);
        }
      }
      const BallMatrix vinv = inverse(vand);
      std::vector<FieldElement> found;
      for (std::size_t first = 0; first < deg; ++first) {
        std::vector<std::size_t> pick(dim, 0);
        pick[0] = first;
        for (;;) {
          BallVector r;
          for (std::size_t i = 0; i < dim; ++i) r.push_back(roots[i][pick[i]]);
          const BallVector a = vinv * r;
          std::vector<mpq_class> coeffs;
          bool plausible = true;
          for (const auto& x : a) {
            if (!x.is_finite() || std::abs(x.imag().mid_double()) > 1e-6) plausible = false;
            coeffs.push_back(best_rational(midpoint_rational(x.real()), opt.max_denominator));
          }
          if (plausible) {
            const FieldElement alpha = k->from_coeffs(coeffs);
            if (sq.eval(alpha).is_zero()) {
              if (std::none_of(found.begin(), found.end(), [&](const FieldElement& f) { return f == alpha; }))
                found.push_back(alpha);
              break;
            }
          }
          std::size_t i = 1;
          while (i < dim && ++pick[i] == deg) pick[i++] = 0;
          if (i >= dim) break;
        }
      }
      return found;
    } catch (const std::runtime_error&) {
      if (prec * 2 > kMaxPrecision) throw;
    }
  }
}

// Jordan chains of the nilpotent matrix c, longest first; each chain is
// [c^{t-1} x, ..., c x, x].
std::vector<std::vector<std::vector<FieldElement>>> nilpotent_chains(const MatrixK& c) {
  const std::size_t n = c.rows();
  std::vector<MatrixK> powers{identity_like(n, c.zero())};
  while (rank(powers.back()) > 0) {
    powers.push_back(powers.back() * c);
    if (powers.size() > n + 1) throw std::logic_error("matrix expected to be nilpotent");
  }
  const std::size_t t = powers.size() - 1;
  std::vector<std::vector<std::vector<FieldElement>>> chains;
  std::vector<std::vector<FieldElement>> tops;
  std::vector<std::size_t> lengths;
  for (std::size_t level = t; level >= 1; --level) {
    std::vector<std::vector<FieldElement>> span;
    if (level > 1) {
      const MatrixK below = kernel(powers[level - 1]);
      for (std::size_t j = 0; j < below.cols(); ++j) span.push_back(below.col(j));
    }
    for (std::size_t q = 0; q < tops.size(); ++q) span.push_back(powers[lengths[q] - level] * tops[q]);
    auto span_rank = [&]() { return span.empty() ? 0 : rank(MatrixK::from_columns(span, n, c.zero())); };
    std::size_t current = span_rank();
    const MatrixK here = kernel(powers[level]);
    for (std::size_t j = 0; j < here.cols(); ++j) {
      span.push_back(here.col(j));
      const std::size_t next = span_rank();
      if (next == current) {
        span.pop_back();
        continue;
      }
      current = next;
      tops.push_back(here.col(j));
      lengths.push_back(level);
      std::vector<std::vector<FieldElement>> chain;
      for (std::size_t p = level; p-- > 0;) chain.push_back(powers[p] * here.col(j));
      chains.push_back(std::move(chain));
    }
  }
  return chains;
}

JordanFactor factor_from_hint(const MatrixK& g, const MatrixK& v) {
  if (v.rows() != g.rows() || v.cols() != g.cols()) throw std::invalid_argument("basis hint has the wrong shape");
  MatrixK vi;
  try {
    vi = inverse(v);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("basis hint is singular");
  }
  const MatrixK m = vi * g * v;
  JordanFactor out{{}, v};
  JordanData jd;
  const std::size_t n = g.rows();
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && !m(end - 1, end).is_zero()) ++end;
    if (m(start, start).is_zero()) throw std::invalid_argument("basis hint gives a zero eigenvalue");
    out.blocks.emplace_back(m(start, start), end - start);
    jd.blocks.push_back({{m(start, start), 0}, end - start});
    start = end;
  }
  if (!equal(m, jd.exp_exact(g.zero().field())))
    throw std::invalid_argument("basis hint does not conjugate g to the exponential of a Jordan matrix");
  return out;
}

}  // namespace

std::vector<std::pair<FieldElement, std::size_t>> eigenvalues_in_field(const MatrixK& g, const JordanOptions& opt) {
  if (g.rows() != g.cols() || g.rows() == 0) throw std::invalid_argument("expected a nonempty square matrix");
  PolyK rest = charpoly(g);
  std::vector<std::pair<FieldElement, std::size_t>> out;
  for (const auto& h : opt.eigen_hints) {
    require_same_field(h, g.zero());
    if (!charpoly(g).eval(h).is_zero())
      throw std::invalid_argument("eigenvalue hint " + h.to_string() + " is not a root of the characteristic polynomial");
    if (const std::size_t mult = divide_out(rest, h)) out.emplace_back(h, mult);
  }
  if (rest.degree() > 0) {
    for (const auto& alpha : recognise_roots(rest.squarefree_part(), opt))
      if (const std::size_t mult = divide_out(rest, alpha)) out.emplace_back(alpha, mult);
  }
  if (rest.degree() > 0)
    throw std::domain_error("characteristic polynomial does not split in K (or eigenvalues were not recognised; "
                            "supply hints): unsplit factor " + poly_text(rest.monic()));
  return out;
}

JordanFactor jordan_factor(const MatrixK& g, const JordanOptions& opt) {
  if (g.rows() != g.cols() || g.rows() == 0) throw std::invalid_argument("expected a nonempty square matrix");
  if (opt.basis_hint) return factor_from_hint(g, *opt.basis_hint);
  const std::size_t n = g.rows();
  const FieldPtr& k = g.zero().field();
  if (det(g).is_zero()) throw std::invalid_argument("matrix is singular, not a group element");
  const MatrixK id = identity_like(n, g.zero());

  struct Group {
    std::size_t first_row;
    std::vector<std::pair<FieldElement, std::size_t>> blocks;
    std::vector<std::vector<FieldElement>> columns;
  };
  std::vector<Group> groups;
  for (const auto& [alpha, mult] : eigenvalues_in_field(g, opt)) {
    const MatrixK e = kernel(power(g - scaled(id, alpha), mult));
    if (e.cols() != mult) throw std::logic_error("generalised eigenspace has the wrong dimension");
    // Log of the unipotent part g / alpha restricted to the eigenspace.
    const MatrixK x = scaled(g, alpha.inverse()) - id;
    MatrixK l(n, n, g.zero()), xp = id;
    for (std::size_t j = 1; j <= mult; ++j) {
      xp = xp * x;
      const mpq_class c(mpz_class(j % 2 == 1 ? 1 : -1), mpz_class(static_cast<unsigned long>(j)));
      l = l + xp.map([&](const FieldElement& y) { return y * c; });
    }
    const std::vector<std::size_t> rows = rref(e.transpose()).pivots;
    std::vector<std::size_t> all(mult);
    for (std::size_t j = 0; j < mult; ++j) all[j] = j;
    const MatrixK c = inverse(e.select(rows, all)) * MatrixK(l * e).select(rows, all);
    Group grp{rows.front(), {}, {}};
    for (const auto& chain : nilpotent_chains(c)) {
      grp.blocks.emplace_back(alpha, chain.size());
      for (const auto& coords : chain) grp.columns.push_back(e * coords);
    }
    groups.push_back(std::move(grp));
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const Group& a, const Group& b) { return a.first_row < b.first_row; });
  JordanFactor out;
  std::vector<std::vector<FieldElement>> cols;
  JordanData jd;
  for (const auto& grp : groups) {
    for (const auto& b : grp.blocks) {
      out.blocks.push_back(b);
      jd.blocks.push_back({{b.first, 0}, b.second});
    }
    cols.insert(cols.end(), grp.columns.begin(), grp.columns.end());
  }
  out.conjugator = MatrixK::from_columns(cols, n, k->zero());
  if (!equal(MatrixK(inverse(out.conjugator) * g * out.conjugator), jd.exp_exact(k)))
    throw std::logic_error("Jordan factorisation failed exact verification");
  return out;
}

KPoint kpoint_from_matrix(const MatrixK& g, const std::vector<long>& branches, const GroupData& group,
                          const JordanOptions& opt) {
  if (g.rows() != group.m() || g.cols() != group.m()) throw std::invalid_argument("matrix size does not match the group");
  const JordanFactor f = jordan_factor(g, opt);
  if (branches.size() != f.blocks.size())
    throw std::invalid_argument("expected " + std::to_string(f.blocks.size()) + " branches (one per Jordan block), got " +
                                std::to_string(branches.size()));
  JordanData jd;
  for (std::size_t b = 0; b < f.blocks.size(); ++b) jd.blocks.push_back({{f.blocks[b].first, branches[b]}, f.blocks[b].second});
  return KPoint(std::move(jd), f.conjugator, group, opt.precision);
}

}  // namespace afflog
