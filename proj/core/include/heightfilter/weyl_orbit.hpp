#pragma once

#include <cstdint>
#include <vector>

#include "heightfilter/subsystem.hpp"

namespace heightfilter {

// Default group-order bound for the exhaustive oracle; the environment
// variable HEIGHTFILTER_ORBIT_BUDGET overrides it.
long long default_orbit_budget();

// The Weyl group enumerated as permutations of the signed root set,
// generated by breadth-first closure under the simple reflections.
class WeylGroup {
 public:
  // Classical closed form for |W|; used to refuse over-budget systems
  // before enumerating and to validate the enumeration afterwards.
  static long long order_formula(const SystemLabel& label);

  // Throws budget_exceeded when |W| > budget.
  static WeylGroup enumerate(const RootSystem& rs, long long budget);

  std::size_t size() const { return perms_.size(); }
  const RootSystem& system() const { return *rs_; }

  // Exhaustive test: does some group element map R(m) setwise onto the
  // subsystem generated by a subset of the simple roots?
  bool maps_to_standard_levi(const HeightSubsystem& sub) const;

 private:
  const RootSystem* rs_ = nullptr;
  int n_pos_ = 0;
  std::vector<std::vector<std::uint16_t>> perms_;  // images of roots 0..2P-1
};

// One-shot oracle for is_levi_type.  Enumerates W afresh; prefer holding
// a WeylGroup when sweeping many m for the same system.
bool weyl_orbit_levi_oracle(const HeightSubsystem& sub, long long budget = default_orbit_budget());

}  // namespace heightfilter
