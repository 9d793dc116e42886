#pragma once

#include <optional>
#include <string>

#include "heightfilter/dynkin.hpp"

namespace heightfilter {

// Closed-form prediction of the classification of R(m): the normalized
// type, the daggered component and its undaggered remainder when R(m) is
// not of Levi type, the constant d, and the branch the prediction came
// from.  `d_alt` carries the independent d-formula for the B/D dagger
// case (it uses a different q than the table rows); verify checks the
// two agree instead of assuming it.
struct Prediction {
  DynkinType type;
  std::optional<ComponentLabel> x_dagger;
  std::optional<ComponentLabel> x_zero;
  long long d = 1;
  std::optional<long long> d_alt;
  bool levi = true;
  std::string source;
};

// Requires 2 <= m < h.  Sources are tagged "derived-table" where the
// classification is read off a positive-root table rather than a stated
// closed form (F4 with m in 8..11, G2 with m in 3..5).
Prediction predict(const SystemLabel& label, int m);

}  // namespace heightfilter
