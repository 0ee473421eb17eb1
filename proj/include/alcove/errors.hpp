#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid root-system type or run configuration.
struct ConfigurationError : Error {
    using Error::Error;
};

/// A size cap (Weyl group order, table size) was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

/// Input outside the domain of an operation (point outside the alcove, bad generator, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Character quotient evaluated at a non-regular point other than the identity.
struct SingularPointError : Error {
    using Error::Error;
};

/// A sample point hits a pole; callers resample.
struct PoleError : Error {
    using Error::Error;
};

/// An affine/finite element pair does not correspond.
struct MismatchError : Error {
    using Error::Error;
};

/// Grid data cannot be a nonnegative-integer combination of level-k characters.
struct InconsistentInputError : Error {
    using Error::Error;
};

}  // namespace alcove
