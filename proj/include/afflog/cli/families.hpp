#pragma once

#include <string>

#include "afflog/cli/serialize.hpp"

namespace afflog {

/// Built-in example instances over Q with G = GL_2.
///   remark10 (k >= 1): u = diag(0, log 2), W_k = {y1 + y4/k = 0}.
///   remark11 (k >= 2): u_k with exp(u_k) = I, W = {y4 = 0}.
/// Throws std::invalid_argument for an unknown name or k out of range.
Instance family_generate(const std::string& name, long k, Precision prec = kDefaultPrecision);

bool is_family_name(const std::string& name);

}  // namespace afflog
