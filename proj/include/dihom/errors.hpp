#pragma once

#include <stdexcept>
#include <string>

namespace dihom {

/// Malformed or inconsistent user input (bad ids, dimension mismatches, broken documents).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The topology relation closes to something that is not antisymmetric.
class NotT0Error : public InputError {
 public:
  using InputError::InputError;
};

/// A theorem's hypotheses do not hold for the supplied data, so the check was not attempted.
class HypothesisNotMet : public InputError {
 public:
  using InputError::InputError;
};

/// A structural check that must hold failed. Seeing this means an implementation bug.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_input(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw VerificationFailure(what);
}

}  // namespace dihom
