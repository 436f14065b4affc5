#pragma once

#include <stdexcept>
#include <string>

namespace logmonoid {

enum class ErrorCode {
    invalid_argument,
    dimension_mismatch,
    invalid_characteristic,
    not_a_homomorphism,
    empty_ideal,
    not_toric,
    not_pointed,
    not_simplicial,
    outside_support,
    not_affine,
};

/// A mathematical precondition of an operation is violated.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define LOGMONOID_CHECK(cond, msg)                                                   \
    do {                                                                            \
        if (!(cond)) throw ::logmonoid::InternalError(std::string(msg) + " (" #cond ")"); \
    } while (0)

}  // namespace logmonoid
