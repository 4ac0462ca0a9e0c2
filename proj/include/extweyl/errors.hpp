#pragma once

#include <stdexcept>
#include <string>

namespace extweyl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Checked integer arithmetic overflowed 64 bits.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what = "integer overflow") : Error(what) {}
};

/// Malformed input (bad arm tuple, bad index, bad permutation, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Operation is undefined for tubular diagrams (radical has dimension 2).
struct UnsupportedTypeError : Error {
    explicit UnsupportedTypeError(const std::string& what = "operation not supported for tubular type")
        : Error(what) {}
};

/// Two values from different diagram contexts were combined.
struct ContextError : Error {
    explicit ContextError(const std::string& what = "context mismatch") : Error(what) {}
};

/// A vector that was required to be a root (norm 2, sign dichotomy) is not one.
struct NotARootError : Error {
    explicit NotARootError(const std::string& what = "not a root") : Error(what) {}
};

/// A matrix that was required to be a group element fails form preservation
/// or does not fix the radical.
struct NotAnElementError : Error {
    explicit NotAnElementError(const std::string& what = "not a group element") : Error(what) {}
};

} // namespace extweyl
