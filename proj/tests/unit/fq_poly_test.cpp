#include <doctest.h>

#include <algorithm>

#include "bracelab/arith.hpp"
#include "bracelab/fq_poly.hpp"

using namespace bracelab;

namespace {

FqPolynomial poly(std::uint32_t q, std::vector<std::uint32_t> c) { return {q, std::move(c)}; }

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK_THROWS_AS(poly(4, {1}), FieldError);
  CHECK_THROWS_AS(poly(2, {1}) + poly(3, {1}), FieldError);
  CHECK(poly(5, {1, 2, 0, 0}).degree() == 1);
  CHECK(FqPolynomial::zero(5).degree() == -1);
  CHECK(poly(5, {4, 1}) + poly(5, {1, 4}) == FqPolynomial::zero(5));
  CHECK(poly(3, {1, 1}) * poly(3, {2, 1}) == poly(3, {2, 0, 1}));
  CHECK(poly(7, {3, 0, 2}).monic() == poly(7, {5, 0, 1}));
  CHECK_THROWS_AS(divide(poly(3, {1}), FqPolynomial::zero(3)), DomainError);
}

TEST_CASE("division with remainder") {
  auto const a = poly(5, {1, 2, 3, 4, 1});
  auto const b = poly(5, {2, 0, 3});
  auto const [quotient, rem] = divide(a, b);
  CHECK(quotient * b + rem == a);
  CHECK(rem.degree() < b.degree());
}

TEST_CASE("shifted powers and gcd") {
  CHECK(shifted_power(2, 4) == poly(2, {0, 0, 0, 0, 1}));
  CHECK(shifted_power(3, 3) == poly(3, {0, 0, 0, 1}));
  CHECK(shifted_power(3, 2) == poly(3, {0, 2, 1}));
  CHECK(gcd(shifted_power(3, 3), shifted_power(3, 2)) == FqPolynomial::x(3));
  CHECK(gcd(poly(5, {2, 4}), FqPolynomial::zero(5)) == poly(5, {3, 1}));
  CHECK(gcd(FqPolynomial::zero(5), FqPolynomial::zero(5)).is_zero());
  CHECK(power(poly(7, {1, 1}), 7) - FqPolynomial::one(7) == shifted_power(7, 7));
}

TEST_CASE("annihilator exponents for the worked cases") {
  auto const a = annihilator_exponent(2, 2, 3, 1);
  CHECK(a.k == 1);
  CHECK(a.gcd == poly(3, {0, 2, 1}));
  auto const b = annihilator_exponent(3, 1, 2, 1);
  CHECK(b.k == 0);
  CHECK(b.gcd == FqPolynomial::x(2));
  CHECK(annihilator_exponent(2, 1, 5, 1).k == 1);
  CHECK(annihilator_exponent(2, 3, 5, 1).k == 2);
  CHECK_THROWS_AS(annihilator_exponent(3, 1, 3, 1), FieldError);
  CHECK_THROWS_AS(annihilator_exponent(4, 1, 3, 1), FieldError);
  CHECK_THROWS_AS(annihilator_exponent(2, 0, 3, 1), DomainError);
}

TEST_CASE("annihilator exponent equals min(j, k*) by integer divisibility") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) {
      if (p == q) {
        continue;
      }
      for (unsigned j = 1; j <= 3; ++j) {
        for (unsigned m = 1; m <= 2; ++m) {
          unsigned k_star = 0;
          std::uint64_t qt = 1;
          for (unsigned t = 1; t <= m; ++t) {
            qt *= q;
            unsigned s = 0;
            for (std::uint64_t v = qt - 1; v % p == 0; v /= p) {
              ++s;
            }
            k_star = std::max(k_star, s);
          }
          auto const result = annihilator_exponent(p, j, q, m);
          CAPTURE(p);
          CAPTURE(q);
          CAPTURE(j);
          CAPTURE(m);
          CHECK(result.k == std::min(j, k_star));
          CHECK(result.gcd == shifted_power(q, ipow(p, result.k)).monic());
        }
      }
    }
  }
}
