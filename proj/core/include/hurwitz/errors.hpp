// errors.hpp -- exception types shared across the library.
//
// input_error:    caller passed something malformed or out of contract.
// budget_error:   a configured resource cap (element count, tuple count)
//                 would be exceeded; raise the cap to proceed.
// internal_error: an invariant the library maintains failed; always a bug.

#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hurwitz
