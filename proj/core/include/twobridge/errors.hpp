#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAllowable : std::invalid_argument {
    explicit NotAllowable(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Signals that a count formula produced an odd value before halving. This
// must never fire on consistent inputs; it is the tripwire for a formula or
// orientability bug.
struct IntegralityViolation : std::logic_error {
    explicit IntegralityViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twobridge
