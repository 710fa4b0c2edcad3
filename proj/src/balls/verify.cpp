#include "afflog/balls/verify.hpp"

#include <chrono>

namespace afflog {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::ok:
      return "ok";
    case VerifyStatus::violated:
      return "violated";
    default:
      return "inconclusive";
  }
}

VerifyReport verify_instance(const std::string& id, const KPoint& kp, const SubspaceSpec& w, BoundMode mode,
                             Precision start, int search_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport out;
  out.id = id;
  out.mode = mode;
  BoundOptions opt;
  opt.search_budget = search_budget;
  for (Precision prec = start; prec <= kMaxPrecision; prec *= 2) {
    out.precision = prec;
    opt.precision = prec;
    try {
      if (!opt.b2) opt.b2 = b2_witness(kp, search_budget, prec);
      BoundReport r = compute_bound(mode, kp, w, opt);
      const RealEnclosure actual = log(r.distance);
      out.bound = r.log_lower;
      out.actual_log_d = actual;
      out.report = std::move(r);
      if (mpfr_cmp(out.bound->lower(), actual.lower()) <= 0) {
        out.status = VerifyStatus::ok;
        out.message.clear();
        break;
      }
      if (mpfr_cmp(out.bound->lower(), actual.upper()) > 0) {
        out.status = VerifyStatus::violated;
        out.message = "certified bound exceeds the true log-distance";
        break;
      }
      out.message = "comparison undecided at the precision cap";
    } catch (const UndecidedError& e) {
      out.message = e.what();
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace afflog
