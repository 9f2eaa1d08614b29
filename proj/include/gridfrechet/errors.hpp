#pragma once

#include <stdexcept>

namespace gridfrechet {

// Invalid user-supplied data (bad file, bad flag, bad parameters).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two geometric objects of different dimension were combined.
struct dimension_mismatch : input_error {
    using input_error::input_error;
};

// A library invariant was violated; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gridfrechet
