#pragma once

#include <stdexcept>
#include <string>

namespace grinv {

// Thrown when caller-supplied data is malformed: unknown element ids,
// dimension mismatches, non-prime moduli, unparsable files.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's mathematical precondition fails, e.g. the
// limit-to-colimit map requested over a disconnected index, or a witness
// requested for an embedding that is already final.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation contradicts an invariant that should hold for
// every valid input. Indicates a bug, not a bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace grinv
