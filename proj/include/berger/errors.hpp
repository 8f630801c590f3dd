#pragma once

#include <stdexcept>
#include <string>

namespace berger {

// Invalid constructor arguments or out-of-range inputs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A function was called outside the parameter range where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NoRootFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hamiltonian drift along an integrated geodesic exceeded the allowed bound.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConjugatePoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace berger
