#pragma once

#include <stdexcept>

namespace cfon {

// Input text that does not match a documented format, or a bad
// family/parameter combination.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was invoked outside its contract (isolated vertices,
// dependent sets, empty intersections, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact search exceeded its node budget or an instance is beyond the
// supported scale. Never a wrong answer.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A postcondition or internal invariant failed; indicates a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cfon
