#pragma once

#include <stdexcept>
#include <string>

namespace spinorlab {

/// Bad arguments: mismatched shapes, indices or parameters outside the
/// supported range.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called on input that violates its mathematical
/// precondition (a non-admissible one-form, a non-monogenic seed, ...).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed external input (descriptor documents, CSV/JSON tables).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant failed at runtime, e.g. a direct sum that turned
/// out not to be direct.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace spinorlab
