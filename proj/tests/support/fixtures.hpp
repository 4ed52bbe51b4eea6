#ifndef BRACELAB_TESTS_FIXTURES_HPP_
#define BRACELAB_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/enumerate.hpp"
#include "bracelab/products.hpp"

namespace fixtures {

using bracelab::Element;
using bracelab::LeftBrace;

inline LeftBrace trivial(std::vector<std::uint32_t> factors) {
  return LeftBrace::trivial(bracelab::FiniteAbelianGroup(std::move(factors)));
}

// Z/4 with a o b = a + b + 2ab.
inline LeftBrace b4() {
  std::vector<Element> circle(16);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      circle[a * 4 + b] = (a + b + 2 * a * b) % 4;
    }
  }
  return bracelab::validate_brace(bracelab::FiniteAbelianGroup({4}), circle);
}

// Z/3 x| Z/2 with the generator of Z/2 acting by negation; adjoint group S3.
inline bracelab::BraceAction negation_action() {
  auto const z3 = trivial({3});
  auto const z2 = trivial({2});
  return bracelab::BraceAction::validate(z3, z2, {bracelab::Permutation::identity(3), bracelab::Permutation({0, 2, 1})});
}

inline LeftBrace s3_brace() { return bracelab::semidirect(negation_action()); }

// Census of order n, computed once per process.
inline std::vector<bracelab::CensusEntry> const& census(std::size_t n) {
  static std::map<std::size_t, std::vector<bracelab::CensusEntry>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    bracelab::EnumerateOptions options;
    options.slow = true;
    it = cache.emplace(n, bracelab::enumerate_braces(n, options).classes).first;
  }
  return it->second;
}

inline std::vector<LeftBrace> census_braces(std::size_t n) {
  std::vector<LeftBrace> braces;
  for (auto const& entry : census(n)) {
    braces.push_back(entry.brace);
  }
  return braces;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline std::size_t uniform(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng());
}

}  // namespace fixtures

#endif  // BRACELAB_TESTS_FIXTURES_HPP_
