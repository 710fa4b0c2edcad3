#include "afflog/boundengine/bounds.hpp"

#include "afflog/balls/distance.hpp"
#include "afflog/balls/embed.hpp"

namespace afflog {

std::string to_string(BoundMode mode) { return mode == BoundMode::hyperplane ? "hyperplane" : "theorem"; }

BoundMode parse_bound_mode(const std::string& text) {
  if (text == "hyperplane") return BoundMode::hyperplane;
  if (text == "theorem") return BoundMode::theorem;
  throw std::invalid_argument("unknown bound mode '" + text + "' (expected hyperplane or theorem)");
}

namespace {

RealEnclosure certified_distance(const BallVector& u, const SubspaceSpec& w, Precision prec) {
  const RealEnclosure dist = distance_to_subspace(u, w, prec);
  if (!dist.certainly_positive())
    throw UndecidedError("cannot certify u not in W at " + std::to_string(prec) + " bits; increase precision");
  return dist;
}

// -constant * log(b) * b^(m+1) * max{1, h_W}, every factor at its upper end.
RealEnclosure assemble(const RealEnclosure& constant, const RealEnclosure& b, std::size_t m, const RealEnclosure& h_w) {
  const Precision prec = constant.precision();
  const RealEnclosure bu = upper_point(b);
  const RealEnclosure hw = upper_point(max(RealEnclosure::from_long(1, prec), h_w));
  return -(upper_point(constant) * upper_point(log(bu)) * pow(bu, m + 1) * hw);
}

void fill_common(BoundReport& r, const KPoint& kp, const BoundOptions& opt) {
  const Precision prec = opt.precision;
  r.precision = prec;
  r.m = kp.m();
  r.degree = kp.field()->degree();
  r.b2 = opt.b2 ? *opt.b2 : b2_witness(kp, opt.search_budget, prec);
  r.h_exp_u = mat_height(kp.exp_u(), prec);
  r.b = upper_point(r.b2.value) * upper_point(max(max(RealEnclosure::e(prec), r.h_exp_u), r.norm_u));
}

}  // namespace

PairingData pairing_data(const KPoint& kp, const SubspaceSpec& w, Precision prec) {
  const std::size_t m = kp.m();
  if (!kp.group().is_general_linear()) throw std::invalid_argument("pairing data needs G = GL_m");
  if (w.ambient() != m * m || w.dim() + 1 != m * m) throw std::invalid_argument("pairing data needs a hyperplane of gl_m");
  PairingData out;
  out.normal = hyperplane_normal(w);
  // w_ij = conj(y_(j-1)m+i), i.e. the conjugate transpose of the normal as a matrix.
  out.w = MatrixK(m, m, kp.field()->zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.w(i, j) = out.normal[j * m + i].conj();
  out.conjugated = kp.conjugator_inverse() * out.w * kp.conjugator();
  const auto diag = kp.jordan().diagonal();
  const auto sup = kp.jordan().superdiagonal();
  FieldElement beta0 = kp.field()->zero();
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (sup[i]) beta0 += out.conjugated(i + 1, i);
  out.betas.push_back(beta0);
  out.linear_form = embed(beta0, 0, prec);
  for (std::size_t i = 0; i < m; ++i) {
    out.betas.push_back(out.conjugated(i, i));
    out.lambdas.push_back(diag[i].value(prec));
    out.linear_form = out.linear_form + embed(out.conjugated(i, i), 0, prec) * out.lambdas.back();
  }
  const BallMatrix j = kp.jordan().matrix(prec);
  const BallMatrix s = embed(out.conjugated, 0, prec);
  out.trace_form = ComplexBall(prec);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out.trace_form = out.trace_form + j(a, b) * s(b, a);
  const BallMatrix u = kp.u_ball(prec);
  const BallMatrix wb = embed(out.w, 0, prec);
  out.trace_uw = ComplexBall(prec);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out.trace_uw = out.trace_uw + u(a, b) * wb(b, a);
  out.w_norm = mat_norm(wb);
  return out;
}

BoundReport hyperplane_bound(const KPoint& kp, const SubspaceSpec& w, const BoundOptions& opt) {
  const std::size_t m = kp.m();
  if (!kp.group().is_general_linear()) throw std::invalid_argument("hyperplane mode needs G = GL_m with the elementary basis");
  if (w.ambient() != m * m || w.dim() + 1 != m * m)
    throw std::invalid_argument("hyperplane mode needs W of dimension m^2 - 1 in gl_m");
  if (!w.field()->same_as(*kp.field())) throw std::invalid_argument("W and u live over different fields");
  const Precision prec = opt.precision;
  BoundReport r;
  r.mode = BoundMode::hyperplane;
  r.n = m * m;
  r.d = w.dim();
  const BallMatrix u = kp.u_ball(prec);
  r.distance = certified_distance(u.flat(), w, prec);
  r.norm_u = mat_norm(u);
  fill_common(r, kp, opt);
  r.h_w = subspace_height(w, HeightVariant::h, prec);
  r.c5 = c5_constant(m, r.degree);
  r.constant = RealEnclosure::from_integer(*r.c5, prec);
  r.log_lower = assemble(r.constant, r.b, m, r.h_w);
  return r;
}

BoundReport theorem_bound(const KPoint& kp, const SubspaceSpec& w, const BoundOptions& opt) {
  const GroupData& g = kp.group();
  if (w.ambient() != g.n()) throw std::invalid_argument("W must live in the n-dimensional Lie algebra of G");
  if (w.dim() < 1 || w.dim() + 1 > g.n()) throw std::invalid_argument("theorem mode needs 1 <= dim W <= n - 1");
  if (!w.field()->same_as(*kp.field())) throw std::invalid_argument("W and u live over different fields");
  const Precision prec = opt.precision;
  BoundReport r;
  r.mode = BoundMode::theorem;
  r.n = g.n();
  r.d = w.dim();
  const BallVector coords = kp.coords_B(prec);
  r.distance = certified_distance(coords, w, prec);
  r.norm_u = vector_norm(coords);
  fill_common(r, kp, opt);
  r.h_w = subspace_height(w, HeightVariant::h, prec);
  r.c4 = c4_constant(g, r.d, prec);
  r.constant = r.c4->value;
  r.log_lower = assemble(r.constant, r.b, r.m, r.h_w);
  return r;
}

BoundReport compute_bound(BoundMode mode, const KPoint& kp, const SubspaceSpec& w, const BoundOptions& opt) {
  return mode == BoundMode::hyperplane ? hyperplane_bound(kp, w, opt) : theorem_bound(kp, w, opt);
}

}  // namespace afflog
