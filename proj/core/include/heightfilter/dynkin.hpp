#pragma once

#include <string>
#include <vector>

#include "heightfilter/root_system.hpp"

namespace heightfilter {

// One connected component of a base, as an abstract label.  `rank` is the
// number of nodes (no D-parameter convention here).  `short_roots` is set
// when every root of the component is short in the ambient system;
// `dagger` marks the component containing the extra base root.
struct ComponentLabel {
  Family family = Family::A;
  int rank = 0;
  bool short_roots = false;
  bool dagger = false;

  std::string to_string() const;     // "A4", "A2(s)", "D8†"
  long long positive_count() const;  // number of positive roots of this type

  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

// Low-rank coincidences are folded into a single normal form so that
// computed and predicted types compare convention-free: D2 -> 2 A1,
// D3 -> A3, B1/C1 -> A1 (the short flag keeps the length class),
// C2 -> B2.  A dagger on a D2 stays on exactly one of the two A1's.
std::vector<ComponentLabel> normalize_component(const ComponentLabel& c);

// A normalized multiset of component labels in canonical order:
// rank descending, family, short components first, dagger last.
struct DynkinType {
  std::vector<ComponentLabel> components;

  static DynkinType of(std::vector<ComponentLabel> comps);  // normalizes and sorts

  std::string to_string() const;  // "A5 + A1†", "2A2 + A2†", "empty"
  long long positive_count() const;
  int node_count() const;
  bool has_dagger() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Recognize the finite type of a single connected base: `roots` must be
// pairwise non-positively paired, connected in the pairing graph, and a
// valid simple system.  Throws internal_error otherwise.
ComponentLabel recognize_component(const RootSystem& rs, const std::vector<Root>& roots);

// Connected components of the pairing graph on `roots`.
std::vector<std::vector<Root>> pairing_components(const RootSystem& rs,
                                                  const std::vector<Root>& roots);

}  // namespace heightfilter
