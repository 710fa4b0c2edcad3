#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "afflog/balls/verify.hpp"
#include "afflog/boundengine/bounds.hpp"
#include "afflog/heights/subspace.hpp"
#include "afflog/liematrix/jordan.hpp"

namespace afflog {

using Json = nlohmann::ordered_json;

/// Error in an instance or argument, reported with the offending JSON path.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& path, const std::string& what);
};

/// Built-in fields: Q, Qi, Qsqrt2, Qsqrt5, Qsqrt-2, Qzeta3, Qzeta8, Qcbrt2.
FieldPtr named_field(const std::string& name);

Json field_to_json(const NumberField& k);
/// Accepts a built-in name or {"minpoly", "integral_basis", "conjugation_image"}.
FieldPtr field_from_json(const Json& j, const std::string& path = "field");

/// A K-element is a coefficient array in the power basis; a bare rational
/// ("p/q" string or JSON integer) is also accepted.
Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& k, const Json& j, const std::string& path);

/// Matrices are arrays of rows.
Json matrix_to_json(const MatrixK& m);
MatrixK matrix_from_json(const FieldPtr& k, const Json& j, const std::string& path);

/// {"ambient": n, "dim": d, "basis": [column, ...]}
Json subspace_to_json(const SubspaceSpec& w);
SubspaceSpec subspace_from_json(const FieldPtr& k, const Json& j, const std::string& path = "subspace");

/// {"m": m, "z": "identity"} for GL_m, or {"m": m, "z": [column, ...]}
Json group_to_json(const GroupData& g);
GroupData group_from_json(const FieldPtr& k, const Json& j, const std::string& path = "group");

/// {"blocks": [{"alpha", "branch", "size"}], "conjugator"}, or the matrix form
/// {"matrix", "branches", "eigen_hints"?, "basis_hint"?}.
Json kpoint_to_json(const KPoint& kp);
KPoint kpoint_from_json(const GroupData& g, const Json& j, Precision prec, const std::string& path = "kpoint");

struct Instance {
  std::string id;
  FieldPtr field;
  std::optional<GroupData> group;
  std::optional<KPoint> kpoint;
  std::optional<SubspaceSpec> subspace;
  Precision precision = kDefaultPrecision;
  int search_budget = 4;
};

Json instance_to_json(const Instance& in);
Instance instance_from_json(const Json& j);

Json enclosure_to_json(const RealEnclosure& x);
Json bound_report_to_json(const BoundReport& r);
Json verify_report_to_json(const VerifyReport& r);

/// Parses an integer given as a JSON number or a decimal string.
long long integer_from_json(const Json& j, const std::string& path);

}  // namespace afflog
