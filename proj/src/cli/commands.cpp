#include "afflog/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "afflog/balls/distance.hpp"
#include "afflog/boundengine/constants.hpp"
#include "afflog/cli/families.hpp"
#include "afflog/heights/projective.hpp"

namespace afflog {

namespace {

constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

struct Common {
  long precision = kDefaultPrecision;
  bool json = false;
  std::string field = "Q";
};

Precision checked_precision(long p) {
  if (p < 32 || p > kMaxPrecision) throw std::invalid_argument("--precision must be between 32 and 2048 bits");
  return static_cast<Precision>(p);
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what, e.what());
  }
}

FieldPtr field_from_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return field_from_json(parse_json_text(text, "--field"), "--field");
  return field_from_json(Json(text), "--field");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
  return v;
}

// "7" or "1..100"
std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long k = parse_long(s, "--k");
    return {k, k};
  }
  const long a = parse_long(s.substr(0, dots), "--k");
  const long b = parse_long(s.substr(dots + 2), "--k");
  if (b < a) throw std::invalid_argument("--k: empty range " + s);
  if (b - a >= 100000) throw std::invalid_argument("--k: range too long");
  return {a, b};
}

std::vector<Instance> load_instances(const std::string& family, const std::string& instance, const std::string& k,
                                     Precision prec) {
  const std::string name = !family.empty() ? family : instance;
  if (name.empty()) throw std::invalid_argument("need --family or --instance");
  if (!family.empty() && !instance.empty()) throw std::invalid_argument("give only one of --family and --instance");
  std::vector<Instance> out;
  if (!family.empty() || is_family_name(name)) {
    if (k.empty()) throw std::invalid_argument("family '" + name + "' needs --k");
    const auto [a, b] = parse_range(k);
    for (long i = a; i <= b; ++i) out.push_back(family_generate(name, i, prec));
    return out;
  }
  Instance in = instance_from_json(read_json_file(name));
  if (in.id.empty()) in.id = name;
  out.push_back(std::move(in));
  return out;
}

void require_bound_inputs(const Instance& in) {
  if (!in.kpoint) throw ParseError("kpoint", "instance has no kpoint");
  if (!in.subspace) throw ParseError("subspace", "instance has no subspace");
}

HeightVariant parse_variant(const std::string& s) {
  if (s == "h") return HeightVariant::h;
  if (s == "hprime") return HeightVariant::hprime;
  if (s == "hhat") return HeightVariant::hhat;
  throw std::invalid_argument("unknown height variant '" + s + "' (h, hprime, hhat)");
}

std::string integer_summary(const mpz_class& z) {
  if (sgn(z) > 0 && mpz_popcount(z.get_mpz_t()) == 1) return "2^" + std::to_string(mpz_scan1(z.get_mpz_t(), 0));
  return z.get_str();
}

void print_bound(std::ostream& out, const std::string& id, const BoundReport& r) {
  out << id << " (" << to_string(r.mode) << " bound)\n";
  out << "  m = " << r.m << ", n = " << r.n << ", dim W = " << r.d << ", [K:Q] = " << r.degree
      << ", precision = " << r.precision << " bits\n";
  out << "  d(u, W)   in " << r.distance.to_string() << "\n";
  out << "  b2        <= " << r.b2.value.upper_string() << "\n";
  out << "  h(exp u)  in " << r.h_exp_u.to_string() << "\n";
  out << "  |u|       in " << r.norm_u.to_string() << "\n";
  out << (r.mode == BoundMode::hyperplane ? "  b4" : "  b3") << "        in " << r.b.to_string() << "\n";
  out << "  h(W)      in " << r.h_w.to_string() << "\n";
  if (r.c5) out << "  c5        = " << integer_summary(*r.c5) << "\n";
  if (r.c4) {
    if (r.c4->exact)
      out << "  c4        = " << integer_summary(*r.c4->exact) << "\n";
    else
      out << "  c4        in " << r.c4->value.to_string() << "\n";
  }
  out << "  L         in " << r.log_lower.to_string() << "\n";
  out << "  log d(u, W) >= " << r.log_lower.lower_string() << "\n";
}

int cmd_height(const Common& c, const std::string& point, const std::string& variant, std::ostream& out) {
  const Precision prec = checked_precision(c.precision);
  const FieldPtr k = field_from_arg(c.field);
  const Json pj = parse_json_text(point, "--point");
  if (!pj.is_array() || pj.empty()) throw ParseError("--point", "expected a nonempty array of coordinates");
  std::vector<FieldElement> coords;
  for (std::size_t i = 0; i < pj.size(); ++i) coords.push_back(element_from_json(k, pj[i], "--point[" + std::to_string(i) + "]"));
  const HeightVariant v = parse_variant(variant);
  RealEnclosure h(prec);
  try {
    h = height_projective(ProjectivePoint(coords), v, prec);
  } catch (const std::invalid_argument& e) {
    throw ParseError("--point", e.what());
  }
  if (c.json) {
    out << Json{{"variant", variant}, {"height", enclosure_to_json(h)}}.dump(2) << "\n";
  } else {
    out << variant << "(" << point << ") in " << h.to_string() << "\n";
  }
  return 0;
}

int cmd_subspace_height(const Common& c, const std::string& instance, const std::string& k, const std::string& variant,
                        std::ostream& out) {
  const Precision prec = checked_precision(c.precision);
  const auto ins = load_instances("", instance, k, prec);
  const HeightVariant v = parse_variant(variant);
  if (v == HeightVariant::hprime) throw std::invalid_argument("subspace heights support the variants h and hhat");
  Json reports = Json::array();
  for (const auto& in : ins) {
    if (!in.subspace) throw ParseError("subspace", "instance has no subspace");
    const RealEnclosure h = subspace_height(*in.subspace, v, prec);
    if (c.json)
      reports.push_back(Json{{"id", in.id}, {"variant", variant}, {"height", enclosure_to_json(h)}});
    else
      out << in.id << ": " << variant << "(W) in " << h.to_string() << "\n";
  }
  if (c.json) out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return 0;
}

int cmd_jordan(const Common& c, const std::string& matrix, const std::string& hints, std::ostream& out) {
  const FieldPtr k = field_from_arg(c.field);
  const MatrixK g = matrix_from_json(k, parse_json_text(matrix, "--matrix"), "--matrix");
  if (g.rows() != g.cols()) throw ParseError("--matrix", "matrix must be square");
  JordanOptions opt;
  opt.precision = checked_precision(c.precision);
  if (!hints.empty()) {
    const Json hj = parse_json_text(hints, "--eigen-hints");
    if (!hj.is_array()) throw ParseError("--eigen-hints", "expected an array");
    for (std::size_t i = 0; i < hj.size(); ++i)
      opt.eigen_hints.push_back(element_from_json(k, hj[i], "--eigen-hints[" + std::to_string(i) + "]"));
  }
  const JordanFactor f = jordan_factor(g, opt);
  if (c.json) {
    Json blocks = Json::array();
    for (const auto& [alpha, size] : f.blocks) blocks.push_back(Json{{"alpha", element_to_json(alpha)}, {"size", size}});
    out << Json{{"blocks", blocks}, {"conjugator", matrix_to_json(f.conjugator)}}.dump(2) << "\n";
    return 0;
  }
  out << "g = v exp(J) v^-1 with blocks:\n";
  for (const auto& [alpha, size] : f.blocks) out << "  alpha = " << alpha.to_string() << ", size " << size << "\n";
  out << "v =\n";
  for (std::size_t i = 0; i < f.conjugator.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < f.conjugator.cols(); ++j) out << " " << f.conjugator(i, j).to_string();
    out << "\n";
  }
  return 0;
}

int cmd_bound(const Common& c, const std::string& family, const std::string& instance, const std::string& k,
              const std::string& mode, int budget, std::ostream& out) {
  const Precision prec = checked_precision(c.precision);
  const BoundMode bm = parse_bound_mode(mode);
  const auto ins = load_instances(family, instance, k, prec);
  Json reports = Json::array();
  for (const auto& in : ins) {
    require_bound_inputs(in);
    BoundOptions opt;
    opt.precision = family.empty() ? std::max(prec, in.precision) : prec;
    opt.search_budget = budget >= 0 ? budget : in.search_budget;
    const BoundReport r = compute_bound(bm, *in.kpoint, *in.subspace, opt);
    if (c.json) {
      Json j = Json{{"id", in.id}};
      j.update(bound_report_to_json(r));
      reports.push_back(std::move(j));
    } else {
      print_bound(out, in.id, r);
    }
  }
  if (c.json) out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return 0;
}

int cmd_verify(const Common& c, const std::string& family, const std::string& instance, const std::string& k,
               const std::string& mode, int budget, std::ostream& out, std::ostream& err) {
  const Precision prec = checked_precision(c.precision);
  std::vector<BoundMode> modes;
  if (mode == "both")
    modes = {BoundMode::hyperplane, BoundMode::theorem};
  else
    modes = {parse_bound_mode(mode)};
  const auto ins = load_instances(family, instance, k, prec);

  std::size_t n_ok = 0, n_bad = 0, n_undecided = 0, n_error = 0;
  Json reports = Json::array();
  for (const auto& in : ins) {
    require_bound_inputs(in);
    for (BoundMode bm : modes) {
      VerifyReport r;
      r.id = in.id;
      r.mode = bm;
      try {
        r = verify_instance(in.id, *in.kpoint, *in.subspace, bm, family.empty() ? std::max(prec, in.precision) : prec,
                            budget >= 0 ? budget : in.search_budget);
      } catch (const std::exception& e) {
        ++n_error;
        err << in.id << " (" << to_string(bm) << "): error: " << e.what() << "\n";
        Json j = Json{{"id", in.id}, {"mode", to_string(bm)}, {"status", "error"}, {"ok", false}, {"message", e.what()}};
        reports.push_back(std::move(j));
        continue;
      }
      if (r.status == VerifyStatus::ok) ++n_ok;
      else if (r.status == VerifyStatus::violated) ++n_bad;
      else ++n_undecided;
      if (c.json) {
        reports.push_back(verify_report_to_json(r));
      } else {
        out << r.id << " " << to_string(r.mode) << ": " << to_string(r.status);
        if (r.bound && r.actual_log_d)
          out << "  L >= " << r.bound->lower_string(12) << ", log d in " << r.actual_log_d->to_string(12);
        out << "  [" << r.precision << " bits]";
        if (!r.message.empty() && r.status != VerifyStatus::ok) out << "  (" << r.message << ")";
        out << "\n";
      }
    }
  }
  const std::string summary = std::to_string(n_ok) + " ok, " + std::to_string(n_bad) + " violated, " +
                              std::to_string(n_undecided) + " inconclusive, " + std::to_string(n_error) + " errors";
  if (c.json)
    out << Json{{"reports", reports},
                {"summary", {{"ok", n_ok}, {"violated", n_bad}, {"inconclusive", n_undecided}, {"errors", n_error}}}}
               .dump(2)
        << "\n";
  else
    out << summary << "\n";
  if (n_bad > 0) return kExitViolated;
  return n_error > 0 ? kExitUsage : 0;
}

int cmd_selftest(const Common& c, std::ostream& out) {
  const Precision prec = checked_precision(c.precision);
  int failures = 0;
  auto check = [&](const std::string& name, bool pass) {
    out << (pass ? "PASS " : "FAIL ") << name << "\n";
    if (!pass) ++failures;
  };
  const RealEnclosure log2 = log_rational(mpq_class(2), prec);
  const FieldPtr q = NumberField::rationals();

  check("h([1:2]) = log 2",
        height_projective(ProjectivePoint({q->one(), q->from_rational(mpq_class(2))}), HeightVariant::h, prec)
            .overlaps(log2));
  for (long k : {1L, 10L}) {
    const Instance in = family_generate("remark10", k, prec);
    const RealEnclosure expect = log2 / sqrt(RealEnclosure::from_long(k * k + 1, prec));
    check("remark10 k=" + std::to_string(k) + " distance", distance_to_subspace(in.kpoint->coords_B(prec), *in.subspace, prec).overlaps(expect));
    check("remark10 k=" + std::to_string(k) + " h(W)", subspace_height(*in.subspace, HeightVariant::h, prec).overlaps(log_rational(mpq_class(k), prec)));
  }
  {
    const Instance in = family_generate("remark11", 3, prec);
    const MatrixK id = MatrixK::identity(2, q->zero(), q->one());
    bool same = true;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) same = same && in.kpoint->exp_u()(i, j) == id(i, j);
    check("remark11 k=3 exp(u) = I", same);
    const RealEnclosure expect = RealEnclosure::pi(prec) * 2 / 9;
    check("remark11 k=3 distance", distance_to_subspace(in.kpoint->coords_B(prec), *in.subspace, prec).overlaps(expect));
    for (BoundMode bm : {BoundMode::hyperplane, BoundMode::theorem})
      check("remark11 k=3 verify " + to_string(bm),
            verify_instance(in.id, *in.kpoint, *in.subspace, bm, prec).status == VerifyStatus::ok);
  }
  mpz_class two121, two160;
  mpz_ui_pow_ui(two121.get_mpz_t(), 2, 121);
  mpz_ui_pow_ui(two160.get_mpz_t(), 2, 160);
  check("c5(m=2, Q) = 2^121", c5_constant(2, 1) == two121);
  const C4Value c4 = c4_constant(GroupData::general_linear(q, 2), 3, prec);
  check("c4(GL2, d=3, Q) = 2^160", c4.exact && *c4.exact == two160);
  out << (failures == 0 ? "selftest passed" : std::to_string(failures) + " selftest checks failed") << "\n";
  return failures == 0 ? 0 : kExitViolated;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"certified distance bounds for logarithms in matrix groups", "afflog"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool field) {
    sub->add_option("--precision", common.precision, "working precision in bits (32..2048)")->capture_default_str();
    sub->add_flag("--json", common.json, "machine-readable output");
    if (field) sub->add_option("--field", common.field, "built-in field name or JSON field object")->capture_default_str();
  };

  std::string point, variant = "h", instance, family, k, bound_mode, verify_mode, matrix, hints;
  int budget = -1;

  auto* height = app.add_subcommand("height", "height of a projective point");
  add_common(height, true);
  height->add_option("--point", point, "JSON array of coordinates")->required();
  height->add_option("--variant", variant, "h, hprime or hhat")->capture_default_str();

  auto* sheight = app.add_subcommand("subspace-height", "height of the subspace of an instance");
  add_common(sheight, false);
  sheight->add_option("--instance", instance, "instance file or family name")->required();
  sheight->add_option("--k", k, "family parameter or range a..b");
  sheight->add_option("--variant", variant, "h or hhat")->capture_default_str();

  auto* jordan = app.add_subcommand("jordan", "factor g = v exp(J) v^-1 over the field");
  add_common(jordan, true);
  jordan->add_option("--matrix", matrix, "JSON array of rows")->required();
  jordan->add_option("--eigen-hints", hints, "JSON array of eigenvalues in the field");

  auto* bound = app.add_subcommand("bound", "compute the certified lower bound");
  add_common(bound, false);
  bound->add_option("--family", family, "remark10 or remark11");
  bound->add_option("--instance", instance, "instance file or family name");
  bound->add_option("--k", k, "family parameter or range a..b");
  bound->add_option("--mode", bound_mode, "hyperplane or theorem")->default_val("theorem");
  bound->add_option("--search-budget", budget, "b2 block-scaling search budget");

  auto* verify = app.add_subcommand("verify", "compare the bound with the true distance");
  add_common(verify, false);
  verify->add_option("--family", family, "remark10 or remark11");
  verify->add_option("--instance", instance, "instance file or family name");
  verify->add_option("--k", k, "family parameter or range a..b");
  verify->add_option("--mode", verify_mode, "hyperplane, theorem or both")->default_val("both");
  verify->add_option("--search-budget", budget, "b2 block-scaling search budget");

  auto* selftest = app.add_subcommand("selftest", "run built-in consistency checks");
  add_common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (height->parsed()) return cmd_height(common, point, variant, out);
    if (sheight->parsed()) return cmd_subspace_height(common, instance, k, variant, out);
    if (jordan->parsed()) return cmd_jordan(common, matrix, hints, out);
    if (bound->parsed()) return cmd_bound(common, family, instance, k, bound_mode, budget, out);
    if (verify->parsed()) return cmd_verify(common, family, instance, k, verify_mode, budget, out, err);
    if (selftest->parsed()) return cmd_selftest(common, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndecidedError& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"afflog"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace afflog
