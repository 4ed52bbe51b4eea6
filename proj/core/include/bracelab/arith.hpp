#ifndef BRACELAB_ARITH_HPP_
#define BRACELAB_ARITH_HPP_

#include <cstdint>
#include <utility>
#include <vector>

// Small integer helpers used throughout: primality, factorisation, valuations,
// and binomial coefficients reduced modulo a group exponent.

namespace bracelab {

bool is_prime(std::uint64_t n);

// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// No prime cube divides n. True for n = 1.
bool is_cube_free(std::uint64_t n);

// Largest s with p^s | n. n must be nonzero.
unsigned valuation(std::uint64_t p, std::uint64_t n);

// If n = p^e for a prime p (e >= 1) returns p, otherwise 0.
std::uint64_t prime_base(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exponent);

// max{ s >= 0 : p^s | q^t - 1 for some 1 <= t <= m }.
unsigned max_divisibility_exponent(std::uint64_t p, std::uint64_t q, unsigned m);

// Row n of Pascal's triangle reduced modulo `modulus` (entries 0..n).
std::vector<std::uint64_t> binomial_row_mod(unsigned n, std::uint64_t modulus);

}  // namespace bracelab

#endif  // BRACELAB_ARITH_HPP_
