#pragma once

#include <optional>
#include <string>

#include "heightfilter/rational.hpp"
#include "heightfilter/subsystem.hpp"

namespace heightfilter {

// An element of the dual space, stored as a rational vector in the same
// coefficient realization as the roots; pairing against a root goes
// through the symmetrized form.
struct WeightVector {
  std::vector<Rational> coords;
};

Rational weight_pairing(const RootSystem& rs, const WeightVector& w, const Root& beta);

// rho: half-sum of the positive coroots (pairs to 1 with every simple
// root).  rho_sub: half-sum of the coroots of R^+(m) (pairs to 1 with
// every element of Gamma(m)).  Both are literal half-sums, not height
// shortcuts, so the height identities below are genuine cross-checks.
WeightVector rho(const RootSystem& rs);
WeightVector rho_sub(const HeightSubsystem& sub);

// The fundamental coweight attached to delta inside span(Gamma(m)):
// pairs to 1 with delta and to 0 with every other base root.
WeightVector fundamental_coweight(const HeightSubsystem& sub);

// The constant d_m with its independent evaluations:
//   product: prod over R^+(m) of <rho/m, beta> / <rho_m, beta>
//   heights: prod over R^+(m) of ht(beta) / (m * subht(beta))
//   oracle:  closed-form fundamental-representation dimension at delta
// The first two are asserted equal, integral and positive, and equal to 1
// exactly when Gamma(m) = R_m.
struct DmReport {
  int m = 0;
  BigInt d = 1;
  Rational d_product = 1;
  Rational d_heights = 1;
  std::optional<BigInt> d_oracle;
  std::optional<std::string> node;  // position of delta in its component
};

// Fills product and heights evaluations.  Domain error on an empty
// subsystem.
DmReport compute_dm(const HeightSubsystem& sub);

// Closed-form dimension from the position of delta in its component:
// end node of A_q -> q+1, spin node of D_{q+1} -> 2^q, vector node of
// D_{q+1} -> 2(q+1); returns 1 when delta is absent.  Any other position
// throws unsupported_pattern.
std::optional<BigInt> dimension_oracle(const HeightSubsystem& sub, const DynkinType& type);

// compute_dm plus the oracle and the node description.
DmReport dm_report(const HeightSubsystem& sub, const DynkinType& type);

}  // namespace heightfilter
