#pragma once

#include <optional>
#include <vector>

#include "heightfilter/dynkin.hpp"
#include "heightfilter/root_system.hpp"

namespace heightfilter {

// R(m): the closed subsystem of roots whose height is a multiple of m,
// with positive part R^+(m), the height-m slice R_m, the extracted base
// Gamma(m), and the height of every element of R^+(m) inside Gamma(m).
//
// Immutable after r_of_m; `delta` is the unique element of
// Gamma(m) \ R_m when Gamma(m) != R_m (it always has height 2m).
struct HeightSubsystem {
  const RootSystem* parent = nullptr;
  int m = 0;
  std::vector<Root> positive;   // R^+(m), parent order
  std::vector<Root> slice_m;    // R_m
  std::vector<Root> base;       // Gamma(m)
  std::vector<std::vector<int>> expansions;  // expansion of positive[i] over base
  std::vector<int> sub_heights;              // row sums of expansions
  std::optional<Root> delta;

  bool empty() const { return positive.empty(); }
  bool gamma_equals_slice() const { return !delta.has_value(); }
  int sub_height_of(const Root& beta) const;  // domain error if beta not in R^+(m)
};

HeightSubsystem r_of_m(const RootSystem& rs, int m);

// The elements of `positive` not expressible as a sum of two of them.
std::vector<Root> extract_base(const RootSystem& rs, const std::vector<Root>& positive);
// Operation surface: recomputes the base from sub.positive.
std::vector<Root> base_of(const HeightSubsystem& sub);

// Connected components of Gamma(m) identified by family and rank; the
// short flag is set when all roots of a component are short in the
// parent, the dagger sits on the component containing delta.
DynkinType classify(const HeightSubsystem& sub);
// Order-insensitive core of classify, usable on any base list.
DynkinType classify_roots(const RootSystem& rs, const std::vector<Root>& base,
                          const std::optional<Root>& delta);

// Levi criterion: R(m) is Levi iff R intersected with the rational span
// of R(m) is R(m) itself.
bool is_levi_type(const HeightSubsystem& sub);

// Runnable form of the statement that R_m always extends to a base of a
// W-conjugate of Delta: linear independence, pairwise non-positive
// pairings, no root differences, and R_m is a base of R cap span(R_m).
bool rm_is_partial_base(const RootSystem& rs, int m);

}  // namespace heightfilter
