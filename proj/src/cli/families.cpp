#include "afflog/cli/families.hpp"

#include <stdexcept>

namespace afflog {

namespace {

FieldElement q(const FieldPtr& k, long num, long den = 1) {
  mpq_class x{mpz_class(num), mpz_class(den)};
  x.canonicalize();
  return k->from_rational(x);
}

std::vector<FieldElement> unit(const FieldPtr& k, std::size_t n, std::size_t i) {
  std::vector<FieldElement> v(n, k->zero());
  v[i] = k->one();
  return v;
}

JordanBlock block(const FieldPtr& k, long alpha, long branch) {
  JordanBlock b;
  b.eigen.alpha = q(k, alpha);
  b.eigen.branch = branch;
  b.size = 1;
  return b;
}

Instance remark10(long k, Precision prec) {
  if (k < 1) throw std::invalid_argument("remark10 needs k >= 1");
  const FieldPtr f = NumberField::rationals();
  Instance in;
  in.id = "remark10-k" + std::to_string(k);
  in.field = f;
  in.precision = prec;
  in.group = GroupData::general_linear(f, 2);
  JordanData jd;
  jd.blocks = {block(f, 1, 0), block(f, 2, 0)};
  in.kpoint = KPoint(std::move(jd), MatrixK::identity(2, f->zero(), f->one()), *in.group, prec);
  auto last = unit(f, 4, 0);
  last[3] = q(f, -k);
  in.subspace = SubspaceSpec(f, MatrixK::from_columns({unit(f, 4, 1), unit(f, 4, 2), last}, 4, f->zero()));
  return in;
}

Instance remark11(long k, Precision prec) {
  if (k < 2) throw std::invalid_argument("remark11 needs k >= 2");
  const FieldPtr f = NumberField::rationals();
  Instance in;
  in.id = "remark11-k" + std::to_string(k);
  in.field = f;
  in.precision = prec;
  in.group = GroupData::general_linear(f, 2);
  JordanData jd;
  jd.blocks = {block(f, 1, 1), block(f, 1, 0)};
  MatrixK v(2, 2, f->zero());
  v(0, 0) = q(f, k + 1, k);
  v(0, 1) = q(f, 1, k);
  v(1, 0) = q(f, -1, k);
  v(1, 1) = q(f, k - 1, k);
  in.kpoint = KPoint(std::move(jd), std::move(v), *in.group, prec);
  in.subspace = SubspaceSpec(f, MatrixK::from_columns({unit(f, 4, 0), unit(f, 4, 1), unit(f, 4, 2)}, 4, f->zero()));
  return in;
}

}  // namespace

bool is_family_name(const std::string& name) { return name == "remark10" || name == "remark11"; }

Instance family_generate(const std::string& name, long k, Precision prec) {
  if (name == "remark10") return remark10(k, prec);
  if (name == "remark11") return remark11(k, prec);
  throw std::invalid_argument("unknown family '" + name + "' (known: remark10, remark11)");
}

}  // namespace afflog
