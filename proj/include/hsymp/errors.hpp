#pragma once

#include <stdexcept>
#include <string>

namespace hsymp {

/// The caller's data is not what it claims to be (bad file, wrong shape,
/// degenerate form, failed precondition).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematically guaranteed identity failed on validated data.
/// Reaching this is always an implementation bug, never a data problem.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hsymp
