#pragma once

#include <stdexcept>
#include <string>

namespace sidef {

// Bad input: wrong parameter counts, malformed text, out-of-range indices.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bignum growth exceeded the configured coefficient-bit budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical precondition failures. The CLI maps these to exit status 3.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The factorization function vanishes inside the range of the algebraic
// variable, so the partner potential would be singular.
class NodefulFactorization : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Factorization energy is not strictly below the base spectrum.
class OrderingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Asymptotic L2 test hit a borderline case that exponents alone cannot settle.
class Undecidable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A closed form failed an exact identity it is supposed to satisfy.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Floating evaluation hit a pole or a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sidef
