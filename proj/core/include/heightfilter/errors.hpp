#pragma once

#include <stdexcept>
#include <string>

namespace heightfilter {

// Violation of a structural invariant the library maintains itself.
// Reaching one of these means a bug, not bad input; the CLI maps it to
// exit code 3.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A daggered component whose extra node sits in a position we have no
// closed dimension formula for.  Never fires on valid data.
struct unsupported_pattern : internal_error {
  using internal_error::internal_error;
};

// The Weyl group is too large to enumerate under the given budget.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace heightfilter
