#pragma once

#include <stdexcept>
#include <string>

namespace uppertail {

// Exact-computation size guard exceeded. Guards are errors on purpose:
// the library never silently approximates a combinatorial quantity.
class size_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed preset strings, edge-list files or serialized payloads.
// The CLI maps these to exit code 2 (usage error); everything derived
// from std::invalid_argument maps to exit code 1 (domain error).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace uppertail
