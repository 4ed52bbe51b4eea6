#ifndef BRACELAB_FQ_POLY_HPP_
#define BRACELAB_FQ_POLY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "bracelab/error.hpp"

namespace bracelab {

// Dense polynomial over the prime field F_q. Coefficients are stored lowest
// degree first with trailing zeros trimmed; the zero polynomial is empty.
class FqPolynomial {
 public:
  // Throws FieldError if `modulus` is not prime. Coefficients are reduced.
  FqPolynomial(std::uint32_t modulus, std::vector<std::uint32_t> coefficients);

  static FqPolynomial zero(std::uint32_t modulus) { return {modulus, {}}; }
  static FqPolynomial one(std::uint32_t modulus) { return {modulus, {1}}; }
  static FqPolynomial x(std::uint32_t modulus) { return {modulus, {0, 1}}; }

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::span<std::uint32_t const> coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  std::uint32_t leading() const noexcept { return is_zero() ? 0 : coefficients_.back(); }
  std::uint32_t coefficient(std::size_t i) const noexcept {
    return i < coefficients_.size() ? coefficients_[i] : 0;
  }

  FqPolynomial monic() const;

  friend FqPolynomial operator+(FqPolynomial const& a, FqPolynomial const& b);
  friend FqPolynomial operator-(FqPolynomial const& a, FqPolynomial const& b);
  friend FqPolynomial operator*(FqPolynomial const& a, FqPolynomial const& b);
  bool operator==(FqPolynomial const&) const = default;

 private:
  void trim();

  std::uint32_t modulus_;
  std::vector<std::uint32_t> coefficients_;
};

struct PolynomialDivision {
  FqPolynomial quotient;
  FqPolynomial remainder;
};

// Throws DomainError on division by zero, FieldError on mixed moduli.
PolynomialDivision divide(FqPolynomial const& numerator, FqPolynomial const& denominator);
FqPolynomial remainder(FqPolynomial const& numerator, FqPolynomial const& denominator);

// Monic gcd; gcd(0, 0) = 0.
FqPolynomial gcd(FqPolynomial const& a, FqPolynomial const& b);

FqPolynomial power(FqPolynomial const& base, std::uint64_t exponent);

// (x + 1)^n - 1 over F_q, expanded by repeated multiplication with (x + 1).
FqPolynomial shifted_power(std::uint32_t modulus, std::uint64_t n);

// gcd over F_q of f(x) = (x+1)^(p^j) - 1 and
//   l(x) = (x+1)^m * prod_{i=1..m} ((x+1)^(q^i - 1) - 1)^m,
// which always has the form (x+1)^(p^k) - 1.
struct AnnihilatorExponent {
  unsigned k = 0;
  FqPolynomial gcd;
};

// Throws FieldError unless p, q are distinct primes, DomainError for j or
// m == 0, and InternalError if the gcd is not of the expected shape.
AnnihilatorExponent annihilator_exponent(std::uint32_t p, unsigned j, std::uint32_t q, unsigned m);

}  // namespace bracelab

#endif  // BRACELAB_FQ_POLY_HPP_
