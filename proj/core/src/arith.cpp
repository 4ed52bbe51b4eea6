#include "bracelab/arith.hpp"

#include <algorithm>

namespace bracelab {

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> result;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) {
      result.emplace_back(d, e);
    }
  }
  if (n > 1) {
    result.emplace_back(n, 1);
  }
  return result;
}

bool is_cube_free(std::uint64_t n) {
  auto const factors = factorize(n);
  return std::all_of(factors.begin(), factors.end(), [](auto const& f) { return f.second < 3; });
}

unsigned valuation(std::uint64_t p, std::uint64_t n) {
  unsigned s = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++s;
  }
  return s;
}

std::uint64_t prime_base(std::uint64_t n) {
  auto const factors = factorize(n);
  return factors.size() == 1 ? factors.front().first : 0;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  while (exponent-- > 0) {
    result *= base;
  }
  return result;
}

unsigned max_divisibility_exponent(std::uint64_t p, std::uint64_t q, unsigned m) {
  unsigned best = 0;
  std::uint64_t qt = 1;
  for (unsigned t = 1; t <= m; ++t) {
    qt *= q;
    best = std::max(best, valuation(p, qt - 1));
  }
  return best;
}

std::vector<std::uint64_t> binomial_row_mod(unsigned n, std::uint64_t modulus) {
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1 % modulus;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned k = i; k > 0; --k) {
      row[k] = (row[k] + row[k - 1]) % modulus;
    }
  }
  return row;
}

}  // namespace bracelab
