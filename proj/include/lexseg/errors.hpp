#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexseg {

// Invalid user-supplied value (bad monomial, wrong degree, index out of range, ...).
class argument_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Objects from incompatible ambient rings were mixed, or the context itself is invalid.
class context_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was asked for in a state where it is undefined
// (e.g. set(u_j) past a linear-quotients failure).
class state_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input exceeds a hard size cap (e.g. 2^m face enumeration).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested construction is not defined for this input
// (e.g. closed-form resolution of a segment without linear resolution).
class unsupported_construction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Monomial grammar violation; offset is the byte position of the problem.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace lexseg
