#pragma once

#include <stdexcept>

namespace ffint {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Precondition violated (bad argument outside any more specific category).
struct InvalidArgument : Error { using Error::Error; };

// gf
struct BoundExceeded : Error { using Error::Error; };
struct NonPrimitivePolynomial : Error { using Error::Error; };
struct MixedFields : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// perm
struct NotABijection : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };

// families
struct NotAPermutation : Error { using Error::Error; };
struct PoleEncountered : Error { using Error::Error; };

// cycletheory
struct InconsistentCount : Error { using Error::Error; };

// skolem
struct MissingK : Error { using Error::Error; };
struct ExistenceViolated : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct BlockUnrealizable : Error { using Error::Error; };

}  // namespace ffint
