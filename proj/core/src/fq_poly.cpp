#include "bracelab/fq_poly.hpp"

#include <algorithm>
#include <string>

#include "bracelab/arith.hpp"

namespace bracelab {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) {
  // q is prime: a^(q-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % q;
  for (std::uint32_t e = q - 2; e > 0; e >>= 1) {
    if (e & 1U) {
      result = result * base % q;
    }
    base = base * base % q;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_field(FqPolynomial const& a, FqPolynomial const& b) {
  if (a.modulus() != b.modulus()) {
    throw FieldError("polynomials over F_" + std::to_string(a.modulus()) + " and F_" +
                     std::to_string(b.modulus()));
  }
}

}  // namespace

FqPolynomial::FqPolynomial(std::uint32_t modulus, std::vector<std::uint32_t> coefficients)
    : modulus_(modulus), coefficients_(std::move(coefficients)) {
  if (!is_prime(modulus)) {
    throw FieldError(std::to_string(modulus) + " is not prime");
  }
  for (auto& c : coefficients_) {
    c %= modulus_;
  }
  trim();
}

void FqPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

FqPolynomial FqPolynomial::monic() const {
  if (is_zero()) {
    return *this;
  }
  std::uint64_t const inv = inverse_mod(leading(), modulus_);
  std::vector<std::uint32_t> c(coefficients_.begin(), coefficients_.end());
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(x * inv % modulus_);
  }
  return {modulus_, std::move(c)};
}

FqPolynomial operator+(FqPolynomial const& a, FqPolynomial const& b) {
  require_same_field(a, b);
  std::vector<std::uint32_t> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = (a.coefficient(i) + b.coefficient(i)) % a.modulus_;
  }
  return {a.modulus_, std::move(c)};
}

FqPolynomial operator-(FqPolynomial const& a, FqPolynomial const& b) {
  require_same_field(a, b);
  std::vector<std::uint32_t> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = (a.coefficient(i) + a.modulus_ - b.coefficient(i)) % a.modulus_;
  }
  return {a.modulus_, std::move(c)};
}

FqPolynomial operator*(FqPolynomial const& a, FqPolynomial const& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) {
    return FqPolynomial::zero(a.modulus_);
  }
  std::vector<std::uint64_t> acc(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coefficients_[i]} * b.coefficients_[j]) % a.modulus_;
    }
  }
  return {a.modulus_, std::vector<std::uint32_t>(acc.begin(), acc.end())};
}

PolynomialDivision divide(FqPolynomial const& numerator, FqPolynomial const& denominator) {
  require_same_field(numerator, denominator);
  std::uint32_t const q = numerator.modulus();
  if (denominator.is_zero()) {
    throw DomainError("polynomial division by zero");
  }
  std::vector<std::uint32_t> rem(numerator.coefficients().begin(), numerator.coefficients().end());
  auto const den = denominator.coefficients();
  std::size_t const dd = den.size() - 1;
  std::uint64_t const lead_inv = inverse_mod(denominator.leading(), q);
  std::vector<std::uint32_t> quot(rem.size() > dd ? rem.size() - dd : 0, 0);
  for (std::size_t top = rem.size(); top-- > dd;) {
    std::uint64_t const factor = rem[top] * lead_inv % q;
    if (factor == 0) {
      continue;
    }
    quot[top - dd] = static_cast<std::uint32_t>(factor);
    for (std::size_t i = 0; i <= dd; ++i) {
      std::uint64_t const sub = factor * den[i] % q;
      rem[top - dd + i] = static_cast<std::uint32_t>((rem[top - dd + i] + q - sub) % q);
    }
  }
  return {FqPolynomial(q, std::move(quot)), FqPolynomial(q, std::move(rem))};
}

FqPolynomial remainder(FqPolynomial const& numerator, FqPolynomial const& denominator) {
  return divide(numerator, denominator).remainder;
}

FqPolynomial gcd(FqPolynomial const& a, FqPolynomial const& b) {
  require_same_field(a, b);
  FqPolynomial x = a;
  FqPolynomial y = b;
  while (!y.is_zero()) {
    FqPolynomial r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPolynomial power(FqPolynomial const& base, std::uint64_t exponent) {
  FqPolynomial result = FqPolynomial::one(base.modulus());
  FqPolynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * b;
    }
    exponent >>= 1;
    if (exponent > 0) {
      b = b * b;
    }
  }
  return result;
}

FqPolynomial shifted_power(std::uint32_t modulus, std::uint64_t n) {
  FqPolynomial const x_plus_one(modulus, {1, 1});
  FqPolynomial result = FqPolynomial::one(modulus);
  for (std::uint64_t i = 0; i < n; ++i) {
    result = result * x_plus_one;
  }
  return result - FqPolynomial::one(modulus);
}

AnnihilatorExponent annihilator_exponent(std::uint32_t p, unsigned j, std::uint32_t q, unsigned m) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw FieldError("annihilator_exponent needs distinct primes, got " + std::to_string(p) + " and " +
                     std::to_string(q));
  }
  if (j == 0 || m == 0) {
    throw DomainError("annihilator_exponent needs j >= 1 and m >= 1");
  }
  FqPolynomial const x_plus_one(q, {1, 1});
  FqPolynomial const f = shifted_power(q, ipow(p, j));
  FqPolynomial product = FqPolynomial::one(q);
  std::uint64_t qi = 1;
  for (unsigned i = 1; i <= m; ++i) {
    qi *= q;
    product = product * shifted_power(q, qi - 1);
  }
  FqPolynomial const l = power(x_plus_one, m) * power(product, m);
  FqPolynomial t = gcd(f, l);

  for (unsigned k = 0; k <= j; ++k) {
    if (t == shifted_power(q, ipow(p, k)).monic()) {
      return {k, std::move(t)};
    }
  }
  throw InternalError("gcd over F_" + std::to_string(q) + " is not of the form (x+1)^(p^k) - 1");
}

}  // namespace bracelab
