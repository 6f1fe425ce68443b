#pragma once

#include <stdexcept>
#include <string>

namespace gcw {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from different algebra signatures were combined.
struct SignatureMismatchError : Error {
    using Error::Error;
};

/// A generator name did not resolve in the signature at hand.
struct UnknownGeneratorError : Error {
    using Error::Error;
};

/// A substitution image or derivation image has the wrong total degree.
struct DegreeMismatchError : Error {
    using Error::Error;
};

/// A model constructor was fed data that fails its axioms (Jacobi,
/// invariance, nondegeneracy, ...). The message carries the witness.
struct BuildError : Error {
    using Error::Error;
};

/// An operation was called outside its domain (non-closed form passed to
/// the Poincare primitive, non-top-degree integrand, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Result of an operation exceeded the configured term budget.
struct TermBudgetError : Error {
    using Error::Error;
};

/// Term budget shared by Element and FieldForm arithmetic. 0 = unlimited.
/// Set from the CLI's --max-terms; thread-local so parallel pipelines
/// don't race.
std::size_t term_budget() noexcept;
void set_term_budget(std::size_t n) noexcept;

} // namespace gcw
