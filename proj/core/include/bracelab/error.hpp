#ifndef BRACELAB_ERROR_HPP_
#define BRACELAB_ERROR_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bracelab {

using Element = std::uint32_t;

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group presentation with an invariant factor below 2.
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

// An input exceeds a configured size bound (see Limits).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A permutation generator that is not a bijection of [0, degree).
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (e.g. a left power of index 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A postcondition the mathematics guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Polynomial arithmetic over a non-prime modulus or mixed moduli.
class FieldError : public Error {
 public:
  using Error::Error;
};

enum class BraceViolation {
  malformed_table,
  not_associative,
  identity_not_zero,
  missing_inverse,
  compatibility,
};

// Raised by validate_brace. `witness` holds the offending (a, b, c); unused
// trailing slots are zero.
class BraceAxiomError : public Error {
 public:
  BraceAxiomError(BraceViolation violation, std::array<Element, 3> witness,
                  std::string const& message)
      : Error(message), violation_(violation), witness_(witness) {}

  BraceViolation violation() const noexcept { return violation_; }
  std::array<Element, 3> const& witness() const noexcept { return witness_; }

 private:
  BraceViolation violation_;
  std::array<Element, 3> witness_;
};

enum class SolutionViolation {
  malformed_table,
  degenerate,
  not_involutive,
  braid,
};

class SolutionAxiomError : public Error {
 public:
  SolutionAxiomError(SolutionViolation violation, std::array<Element, 3> witness,
                     std::string const& message)
      : Error(message), violation_(violation), witness_(witness) {}

  SolutionViolation violation() const noexcept { return violation_; }
  std::array<Element, 3> const& witness() const noexcept { return witness_; }

 private:
  SolutionViolation violation_;
  std::array<Element, 3> witness_;
};

// A brace action that is not a homomorphism into brace automorphisms.
class ActionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bracelab

#endif  // BRACELAB_ERROR_HPP_
