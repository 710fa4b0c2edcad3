#include "afflog/cli/serialize.hpp"

#include <map>
#include <mutex>

namespace afflog {

ParseError::ParseError(const std::string& path, const std::string& what) : std::invalid_argument(path + ": " + what) {}

namespace {

std::vector<mpq_class> power_coords(std::initializer_list<long> c) {
  std::vector<mpq_class> out;
  for (long x : c) out.emplace_back(x);
  return out;
}

FieldPtr build_named(const std::string& name) {
  using V = std::vector<mpz_class>;
  if (name == "Q") return NumberField::rationals();
  if (name == "Qi") return NumberField::create(V{1, 0, 1}, std::nullopt, power_coords({0, -1}));
  if (name == "Qsqrt2") return NumberField::create(V{-2, 0, 1});
  if (name == "Qsqrt5") return NumberField::create(V{-1, -1, 1});
  if (name == "Qsqrt-2") return NumberField::create(V{2, 0, 1}, std::nullopt, power_coords({0, -1}));
  if (name == "Qzeta3") return NumberField::create(V{1, 1, 1}, std::nullopt, power_coords({-1, -1}));
  if (name == "Qzeta8") return NumberField::create(V{1, 0, 0, 0, 1}, std::nullopt, power_coords({0, 0, 0, -1}));
  if (name == "Qcbrt2") return NumberField::create(V{-2, 0, 0, 1});
  throw std::invalid_argument("unknown field '" + name + "' (built-in: Q, Qi, Qsqrt2, Qsqrt5, Qsqrt-2, Qzeta3, Qzeta8, Qcbrt2)");
}

std::string path_at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

mpq_class rational_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path, "expected a rational as a \"p/q\" string or an integer");
}

std::string integer_text(const mpz_class& z) { return z.get_str(); }

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(path, e.what());
  }
}

}  // namespace

long long integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw ParseError(path, "expected an integer");
}

FieldPtr named_field(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_named(name)).first;
  return it->second;
}

Json field_to_json(const NumberField& k) {
  Json out = Json::object();
  Json mp = Json::array();
  for (const auto& c : k.minpoly()) mp.push_back(integer_text(c));
  out["minpoly"] = mp;
  if (k.has_explicit_basis()) {
    Json b = Json::array();
    for (const auto& x : k.integral_basis().flat()) b.push_back(format_rational(x));
    out["integral_basis"] = b;
  } else {
    out["integral_basis"] = nullptr;
  }
  if (k.explicit_conjugation()) {
    Json c = Json::array();
    for (const auto& x : *k.conjugation_image()) c.push_back(format_rational(x));
    out["conjugation_image"] = c;
  }
  return out;
}

FieldPtr field_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return wrap(path, [&] { return named_field(j.get<std::string>()); });
  const Json& mp = require_array(require(j, "minpoly", path), path + ".minpoly");
  std::vector<mpz_class> minpoly;
  for (std::size_t i = 0; i < mp.size(); ++i) {
    const mpq_class c = rational_from_json(mp[i], path_at(path + ".minpoly", i));
    if (c.get_den() != 1) throw ParseError(path_at(path + ".minpoly", i), "minimal polynomial coefficients must be integers");
    minpoly.push_back(c.get_num());
  }
  const std::size_t n = minpoly.empty() ? 0 : minpoly.size() - 1;
  std::optional<Matrix<mpq_class>> basis;
  if (j.contains("integral_basis") && !j.at("integral_basis").is_null()) {
    const Json& b = require_array(j.at("integral_basis"), path + ".integral_basis");
    if (b.size() != n * n) throw ParseError(path + ".integral_basis", "expected " + std::to_string(n * n) + " entries (row-major)");
    Matrix<mpq_class> m(n, n, mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) m(i / n, i % n) = rational_from_json(b[i], path_at(path + ".integral_basis", i));
    basis = m;
  }
  std::optional<std::vector<mpq_class>> conj;
  if (j.contains("conjugation_image") && !j.at("conjugation_image").is_null()) {
    const Json& c = require_array(j.at("conjugation_image"), path + ".conjugation_image");
    std::vector<mpq_class> v;
    for (std::size_t i = 0; i < c.size(); ++i) v.push_back(rational_from_json(c[i], path_at(path + ".conjugation_image", i)));
    conj = v;
  }
  return wrap(path, [&] { return NumberField::create(minpoly, basis, conj); });
}

Json element_to_json(const FieldElement& x) {
  if (x.is_rational()) return format_rational(x.rational_value());
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(format_rational(c));
  return out;
}

FieldElement element_from_json(const FieldPtr& k, const Json& j, const std::string& path) {
  if (!j.is_array()) return k->from_rational(rational_from_json(j, path));
  if (j.size() != k->degree())
    throw ParseError(path, "expected " + std::to_string(k->degree()) + " power-basis coefficients");
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], path_at(path, i)));
  return k->from_coeffs(std::move(c));
}

Json matrix_to_json(const MatrixK& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

MatrixK matrix_from_json(const FieldPtr& k, const Json& j, const std::string& path) {
  require_array(j, path);
  if (j.empty()) throw ParseError(path, "matrix has no rows");
  const std::size_t cols = require_array(j[0], path_at(path, 0)).size();
  MatrixK out(j.size(), cols, k->zero());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = require_array(j[i], path_at(path, i));
    if (row.size() != cols) throw ParseError(path_at(path, i), "rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = element_from_json(k, row[c], path_at(path_at(path, i), c));
  }
  return out;
}

Json subspace_to_json(const SubspaceSpec& w) {
  Json basis = Json::array();
  for (std::size_t c = 0; c < w.dim(); ++c) {
    Json col = Json::array();
    for (const auto& x : w.basis().col(c)) col.push_back(element_to_json(x));
    basis.push_back(col);
  }
  return Json{{"ambient", w.ambient()}, {"dim", w.dim()}, {"basis", basis}};
}

SubspaceSpec subspace_from_json(const FieldPtr& k, const Json& j, const std::string& path) {
  const auto n = integer_from_json(require(j, "ambient", path), path + ".ambient");
  const auto d = integer_from_json(require(j, "dim", path), path + ".dim");
  if (n < 1 || d < 0 || d > n) throw ParseError(path, "need 0 <= dim <= ambient and ambient >= 1");
  const Json& b = require_array(require(j, "basis", path), path + ".basis");
  if (static_cast<long long>(b.size()) != d) throw ParseError(path + ".basis", "expected " + std::to_string(d) + " columns");
  if (d == 0) return SubspaceSpec::zero_space(k, static_cast<std::size_t>(n));
  std::vector<std::vector<FieldElement>> cols;
  for (std::size_t c = 0; c < b.size(); ++c) {
    const Json& col = require_array(b[c], path_at(path + ".basis", c));
    if (static_cast<long long>(col.size()) != n) throw ParseError(path_at(path + ".basis", c), "column length must equal ambient");
    std::vector<FieldElement> v;
    for (std::size_t i = 0; i < col.size(); ++i) v.push_back(element_from_json(k, col[i], path_at(path_at(path + ".basis", c), i)));
    cols.push_back(std::move(v));
  }
  return wrap(path, [&] { return SubspaceSpec(k, MatrixK::from_columns(cols, static_cast<std::size_t>(n), k->zero())); });
}

Json group_to_json(const GroupData& g) {
  if (g.is_general_linear()) return Json{{"m", g.m()}, {"z", "identity"}};
  Json cols = Json::array();
  for (std::size_t c = 0; c < g.n(); ++c) {
    Json col = Json::array();
    for (const auto& x : g.z().col(c)) col.push_back(element_to_json(x));
    cols.push_back(col);
  }
  return Json{{"m", g.m()}, {"z", cols}};
}

GroupData group_from_json(const FieldPtr& k, const Json& j, const std::string& path) {
  const auto m = integer_from_json(require(j, "m", path), path + ".m");
  if (m < 1 || m > 6) throw ParseError(path + ".m", "m must be between 1 and 6");
  const std::size_t mm = static_cast<std::size_t>(m);
  const Json& z = require(j, "z", path);
  if (z.is_string() && (z.get<std::string>() == "identity" || z.get<std::string>() == "GL"))
    return GroupData::general_linear(k, mm);
  require_array(z, path + ".z");
  std::vector<std::vector<FieldElement>> cols;
  for (std::size_t c = 0; c < z.size(); ++c) {
    const Json& col = require_array(z[c], path_at(path + ".z", c));
    if (col.size() != mm * mm) throw ParseError(path_at(path + ".z", c), "columns of z need m^2 entries");
    std::vector<FieldElement> v;
    for (std::size_t i = 0; i < col.size(); ++i) v.push_back(element_from_json(k, col[i], path_at(path_at(path + ".z", c), i)));
    cols.push_back(std::move(v));
  }
  return wrap(path, [&] { return GroupData(k, mm, MatrixK::from_columns(cols, mm * mm, k->zero())); });
}

Json kpoint_to_json(const KPoint& kp) {
  Json blocks = Json::array();
  for (const auto& b : kp.jordan().blocks)
    blocks.push_back(Json{{"alpha", element_to_json(b.eigen.alpha)}, {"branch", b.eigen.branch}, {"size", b.size}});
  return Json{{"blocks", blocks}, {"conjugator", matrix_to_json(kp.conjugator())}};
}

KPoint kpoint_from_json(const GroupData& g, const Json& j, Precision prec, const std::string& path) {
  const FieldPtr& k = g.field();
  if (j.is_object() && j.contains("matrix")) {
    const MatrixK m = matrix_from_json(k, j.at("matrix"), path + ".matrix");
    std::vector<long> branches;
    if (j.contains("branches")) {
      const Json& b = require_array(j.at("branches"), path + ".branches");
      for (std::size_t i = 0; i < b.size(); ++i) branches.push_back(static_cast<long>(integer_from_json(b[i], path_at(path + ".branches", i))));
    }
    JordanOptions opt;
    opt.precision = prec;
    if (j.contains("eigen_hints")) {
      const Json& h = require_array(j.at("eigen_hints"), path + ".eigen_hints");
      for (std::size_t i = 0; i < h.size(); ++i) opt.eigen_hints.push_back(element_from_json(k, h[i], path_at(path + ".eigen_hints", i)));
    }
    if (j.contains("basis_hint")) opt.basis_hint = matrix_from_json(k, j.at("basis_hint"), path + ".basis_hint");
    return wrap(path, [&] { return kpoint_from_matrix(m, branches, g, opt); });
  }
  const Json& blocks = require_array(require(j, "blocks", path), path + ".blocks");
  JordanData jd;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string p = path_at(path + ".blocks", i);
    JordanBlock b;
    b.eigen.alpha = element_from_json(k, require(blocks[i], "alpha", p), p + ".alpha");
    b.eigen.branch = blocks[i].contains("branch") ? static_cast<long>(integer_from_json(blocks[i].at("branch"), p + ".branch")) : 0;
    const auto size = blocks[i].contains("size") ? integer_from_json(blocks[i].at("size"), p + ".size") : 1;
    if (size < 1) throw ParseError(p + ".size", "block size must be positive");
    b.size = static_cast<std::size_t>(size);
    jd.blocks.push_back(std::move(b));
  }
  MatrixK v = j.contains("conjugator") ? matrix_from_json(k, j.at("conjugator"), path + ".conjugator")
                                       : MatrixK::identity(g.m(), k->zero(), k->one());
  return wrap(path, [&] { return KPoint(std::move(jd), std::move(v), g, prec); });
}

Json instance_to_json(const Instance& in) {
  Json out = Json::object();
  out["id"] = in.id;
  out["field"] = field_to_json(*in.field);
  if (in.group) out["group"] = group_to_json(*in.group);
  if (in.kpoint) out["kpoint"] = kpoint_to_json(*in.kpoint);
  if (in.subspace) out["subspace"] = subspace_to_json(*in.subspace);
  out["options"] = Json{{"precision", in.precision}, {"search_budget", in.search_budget}};
  return out;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance", "expected a JSON object");
  Instance in;
  if (j.contains("id")) {
    if (!j.at("id").is_string()) throw ParseError("id", "expected a string");
    in.id = j.at("id").get<std::string>();
  }
  in.field = field_from_json(require(j, "field", "instance"), "field");
  if (j.contains("options")) {
    const Json& o = j.at("options");
    if (o.contains("precision")) {
      const auto p = integer_from_json(o.at("precision"), "options.precision");
      if (p < 32 || p > kMaxPrecision) throw ParseError("options.precision", "precision must be between 32 and 2048 bits");
      in.precision = static_cast<Precision>(p);
    }
    if (o.contains("search_budget")) {
      const auto b = integer_from_json(o.at("search_budget"), "options.search_budget");
      if (b < 0 || b > 64) throw ParseError("options.search_budget", "search budget must be between 0 and 64");
      in.search_budget = static_cast<int>(b);
    }
  }
  if (j.contains("group")) in.group = group_from_json(in.field, j.at("group"));
  if (j.contains("kpoint")) {
    if (!in.group) throw ParseError("kpoint", "a kpoint needs a group");
    in.kpoint = kpoint_from_json(*in.group, j.at("kpoint"), in.precision);
  }
  if (j.contains("subspace")) in.subspace = subspace_from_json(in.field, j.at("subspace"));
  return in;
}

Json enclosure_to_json(const RealEnclosure& x) { return Json{{"lower", x.lower_string()}, {"upper", x.upper_string()}}; }

Json bound_report_to_json(const BoundReport& r) {
  Json out = Json::object();
  out["mode"] = to_string(r.mode);
  out["m"] = r.m;
  out["n"] = r.n;
  out["d"] = r.d;
  out["degree"] = r.degree;
  out["precision"] = r.precision;
  out["certified_log_lower"] = r.log_lower.lower_string();
  out["log_lower"] = enclosure_to_json(r.log_lower);
  out["distance"] = enclosure_to_json(r.distance);
  out["log_distance"] = enclosure_to_json(log(r.distance));
  Json exps = Json::array();
  for (long t : r.b2.exponents) exps.push_back(t);
  out["b2_upper"] = enclosure_to_json(r.b2.value);
  out["b2_witness"] = Json{{"conjugator", matrix_to_json(r.b2.conjugator)}, {"block_scaling_exponents", exps}};
  out["h_exp_u"] = enclosure_to_json(r.h_exp_u);
  out["norm_u"] = enclosure_to_json(r.norm_u);
  out[r.mode == BoundMode::hyperplane ? "b4" : "b3"] = enclosure_to_json(r.b);
  out["h_W"] = enclosure_to_json(r.h_w);
  if (r.c5) {
    out["c5"] = Json{{"exact", r.c5->get_str()}, {"value", enclosure_to_json(r.constant)}};
  }
  if (r.c4) {
    Json c = Json::object();
    c["integer_part"] = r.c4->integer_part.get_str();
    c["disc_factor"] = enclosure_to_json(r.c4->disc_factor);
    c["z_factor"] = enclosure_to_json(r.c4->z_factor);
    c["gamma_height"] = enclosure_to_json(r.c4->gamma_height);
    c["gamma_factor"] = enclosure_to_json(r.c4->gamma_factor);
    c["value"] = enclosure_to_json(r.c4->value);
    c["exact"] = r.c4->exact ? Json(r.c4->exact->get_str()) : Json(nullptr);
    out["c4"] = c;
  }
  return out;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json out = Json::object();
  out["id"] = r.id;
  out["mode"] = to_string(r.mode);
  out["status"] = to_string(r.status);
  out["ok"] = r.status == VerifyStatus::ok;
  out["L"] = r.bound ? Json(r.bound->lower_string()) : Json(nullptr);
  out["actual_log_d"] = r.actual_log_d ? enclosure_to_json(*r.actual_log_d) : Json(nullptr);
  out["precision"] = r.precision;
  out["seconds"] = r.seconds;
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

}  // namespace afflog
