#pragma once

#include "afflog/liematrix/kpoint.hpp"

namespace afflog {

struct B2Witness {
  MatrixK conjugator;
  RealEnclosure value;  // max{e, h'(v), |v|^m / |det v|} for this conjugator
  std::vector<long> exponents;  // power of 2 applied to each block
};

/// max{e, h'(v), |v|^m / |det v|} with the norm taken at the distinguished embedding.
RealEnclosure b2_value(const MatrixK& v, Precision prec = kDefaultPrecision);

/// Searches conjugators v diag(2^t_b) (one exponent per Jordan block, |t_b| <= budget)
/// and returns the best. Exhaustive for small searches, coordinate descent otherwise.
B2Witness b2_witness(const KPoint& kp, int budget = 4, Precision prec = kDefaultPrecision);

}  // namespace afflog
