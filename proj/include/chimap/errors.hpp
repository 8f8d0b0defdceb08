#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chimap {

// Bad parameters: dimension out of range, mismatched operands, family
// constraints (m | n where a group is required, odd k for CHICHI, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public DomainError {
public:
    DimensionMismatch(int lhs, int rhs)
        : DomainError("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

// Thrown when an operation needs a bijection. Carries two inputs that
// collide under the offending table.
class NotAPermutation : public DomainError {
public:
    NotAPermutation(std::uint32_t first, std::uint32_t second)
        : DomainError("not a permutation: inputs " + std::to_string(first) + " and " +
                      std::to_string(second) + " share an image"),
          first_(first), second_(second) {}

    std::uint32_t first() const noexcept { return first_; }
    std::uint32_t second() const noexcept { return second_; }

private:
    std::uint32_t first_;
    std::uint32_t second_;
};

// A group operation received a combination whose constant coefficient is 0.
class NonUnitError : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed textual input (family specs, coefficient strings, CSV rows,
// serialized documents).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chimap
