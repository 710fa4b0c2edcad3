#pragma once

#include <optional>
#include <vector>

#include "afflog/balls/complex_ball.hpp"
#include "afflog/liematrix/matrix_ops.hpp"

namespace afflog {

/// 2^(32m+24) m^(m^2+8m+13) D^(m+5).
mpz_class c5_constant(std::size_t m, std::size_t degree);

struct C4Value {
  mpz_class integer_part;       // 2^(32m+31) D^(m+5) (m^2-d)^4 m^(m^2+8m+25)
  RealEnclosure disc_factor;    // max{log|disc|, 1}
  RealEnclosure z_factor;       // max{e, sqrt(n sum |z_ij|^2)}^(m^2+2m+2)
  RealEnclosure gamma_height;   // h(Gamma)
  RealEnclosure gamma_factor;   // max{1, h(Gamma)}
  RealEnclosure value;
  std::optional<mpz_class> exact;  // set when every factor is an exact integer
};

/// Throws std::invalid_argument unless 1 <= d <= n - 1.
C4Value c4_constant(const GroupData& group, std::size_t d, Precision prec = kDefaultPrecision);

struct Prop7Term {
  ComplexBall lambda;
  FieldElement alpha;
};

struct Prop7Result {
  std::vector<RealEnclosure> a;
  RealEnclosure b;
  RealEnclosure c;
  RealEnclosure rhs;  // lower end is the certified bound for log|beta_0 + sum beta_i lambda_i|
};

/// Lower bound for |beta_0 + sum beta_i lambda_i|, with
/// betas = {beta_0, ..., beta_m}. Throws on a zero alpha or mismatched sizes.
Prop7Result prop7_rhs(const std::vector<Prop7Term>& terms, const std::vector<FieldElement>& betas,
                      Precision prec = kDefaultPrecision);

/// 2 max{(m^2-d)/(2D) log((2/pi)|disc|) + (1/2) log C(m^2, m^2-d), 1}.
RealEnclosure diagnostics_c12(const NumberField& field, std::size_t m, std::size_t d, Precision prec = kDefaultPrecision);

/// log C(n, k) as an enclosure.
RealEnclosure log_binomial(std::size_t n, std::size_t k, Precision prec = kDefaultPrecision);

/// The point enclosure at the upper end of x.
RealEnclosure upper_point(const RealEnclosure& x);

}  // namespace afflog
