#pragma once

#include <optional>
#include <string>

#include "afflog/boundengine/bounds.hpp"

namespace afflog {

enum class VerifyStatus { ok, violated, inconclusive };

std::string to_string(VerifyStatus s);

struct VerifyReport {
  std::string id;
  BoundMode mode = BoundMode::theorem;
  VerifyStatus status = VerifyStatus::inconclusive;
  std::optional<RealEnclosure> bound;         // L; its lower end is the certified value
  std::optional<RealEnclosure> actual_log_d;  // enclosure of log d(u, W)
  Precision precision = kDefaultPrecision;    // precision that settled the comparison
  double seconds = 0;
  std::string message;
  std::optional<BoundReport> report;
};

/// Computes the bound and the true log-distance, doubling the precision up to
/// kMaxPrecision until the comparison is decided. Undecidable membership of u
/// in W gives an inconclusive report, never ok.
VerifyReport verify_instance(const std::string& id, const KPoint& kp, const SubspaceSpec& w, BoundMode mode,
                             Precision start = kDefaultPrecision, int search_budget = 4);

}  // namespace afflog
