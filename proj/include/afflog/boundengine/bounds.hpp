#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "afflog/boundengine/constants.hpp"
#include "afflog/heights/subspace.hpp"
#include "afflog/liematrix/b2.hpp"
#include "afflog/liematrix/kpoint.hpp"

namespace afflog {

enum class BoundMode { hyperplane, theorem };

std::string to_string(BoundMode mode);
/// Throws std::invalid_argument on anything but "hyperplane" or "theorem".
BoundMode parse_bound_mode(const std::string& text);

/// Raised when u not in W cannot be certified at the working precision.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The linear form behind a hyperplane bound in gl_m: with y the normal of W
/// and w = Y^*, beta_i and lambda_i come from v^-1 w v and the Jordan matrix.
struct PairingData {
  std::vector<FieldElement> normal;
  MatrixK w;
  MatrixK conjugated;  // v^-1 w v
  std::vector<FieldElement> betas;  // beta_0, ..., beta_m
  std::vector<ComplexBall> lambdas;
  ComplexBall linear_form;  // beta_0 + sum beta_i lambda_i
  ComplexBall trace_form;   // Tr(J v^-1 w v) = sum r_k s_k
  ComplexBall trace_uw;     // Tr(u w)
  RealEnclosure w_norm;
};

/// Needs G = GL_m and a hyperplane W of gl_m over a field with conjugation.
PairingData pairing_data(const KPoint& kp, const SubspaceSpec& w, Precision prec = kDefaultPrecision);

struct BoundOptions {
  Precision precision = kDefaultPrecision;
  int search_budget = 4;
  /// Reused instead of searching again (the search never looks at W).
  std::optional<B2Witness> b2;
};

struct BoundReport {
  BoundMode mode = BoundMode::theorem;
  std::size_t m = 0, n = 0, d = 0, degree = 0;
  Precision precision = kDefaultPrecision;
  RealEnclosure distance;
  B2Witness b2;
  RealEnclosure h_exp_u;
  RealEnclosure norm_u;
  RealEnclosure b;  // b_3 (theorem) or b_4 (hyperplane)
  RealEnclosure h_w;
  std::optional<C4Value> c4;
  std::optional<mpz_class> c5;
  RealEnclosure constant;
  /// log d(u, W) >= lower end of this enclosure.
  RealEnclosure log_lower;
};

/// Hyperplane bound for G = GL_m, W of dimension m^2 - 1 in the elementary basis.
BoundReport hyperplane_bound(const KPoint& kp, const SubspaceSpec& w, const BoundOptions& opt = {});

/// General bound; W lives in coordinates of the group's Lie algebra basis.
BoundReport theorem_bound(const KPoint& kp, const SubspaceSpec& w, const BoundOptions& opt = {});

BoundReport compute_bound(BoundMode mode, const KPoint& kp, const SubspaceSpec& w, const BoundOptions& opt = {});

}  // namespace afflog
