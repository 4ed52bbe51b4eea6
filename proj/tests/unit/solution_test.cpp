#include <doctest.h>

#include "bracelab/solution.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bracelab;

namespace {

SolutionViolation violation_of(std::size_t n, std::vector<Element> sigma, std::vector<Element> tau) {
  try {
    validate_solution(n, std::move(sigma), std::move(tau));
  } catch (SolutionAxiomError const& error) {
    return error.violation();
  }
  FAIL("expected a solution axiom violation");
  return SolutionViolation::malformed_table;
}

}  // namespace

TEST_CASE("validate_solution") {
  auto const flip = flip_solution(3);
  CHECK(flip.apply(1, 2) == std::pair<Element, Element>{2, 1});

  // sigma_x = tau_y = identity is the flip in this encoding: r(x, y) = (y, x).
  std::vector<Element> identity_rows = {0, 1, 0, 1};
  CHECK(validate_solution(2, identity_rows, identity_rows) == flip_solution(2));

  // r(x, y) = (x, y) has constant sigma_x and is degenerate.
  std::vector<Element> constant_rows = {0, 0, 1, 1};
  CHECK(violation_of(2, constant_rows, constant_rows) == SolutionViolation::degenerate);

  std::vector<Element> sigma = {0, 0, 0, 1};
  CHECK(violation_of(2, sigma, identity_rows) == SolutionViolation::degenerate);
  CHECK(violation_of(2, {0, 1, 0}, identity_rows) == SolutionViolation::malformed_table);
  CHECK(violation_of(2, {0, 1, 2, 0}, identity_rows) == SolutionViolation::malformed_table);

  // sigma_x = (0 1) for every x with tau trivial is non-degenerate but r^2 != id.
  std::vector<Element> swap_rows = {1, 0, 1, 0};
  CHECK(violation_of(2, swap_rows, identity_rows) == SolutionViolation::not_involutive);
}

TEST_CASE("a non-braided involutive map is rejected") {
  std::vector<Element> const sigma = {0, 2, 1, 0, 2, 1, 1, 2, 0};
  std::vector<Element> const tau = {0, 2, 1, 2, 0, 1, 0, 2, 1};
  CHECK(violation_of(3, sigma, tau) == SolutionViolation::braid);
}

TEST_CASE("solutions of braces") {
  CHECK(solution_from_brace(fixtures::trivial({5})) == flip_solution(5));
  auto const s = solution_from_brace(fixtures::b4());
  CHECK(s.apply(1, 1) == std::pair<Element, Element>{3, 3});
  CHECK(s.apply(3, 3) == std::pair<Element, Element>{1, 1});
  for (std::size_t n = 1; n <= 8; ++n) {
    for (auto const& brace : fixtures::census_braces(n)) {
      auto const solution = solution_from_brace(brace);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          CHECK(solution.sigma(x, y) == brace.lambda(x, y));
        }
      }
    }
  }
}

TEST_CASE("retraction") {
  CHECK(retract_solution(flip_solution(4)).size() == 1);
  CHECK(retract_solution(flip_solution(1)).size() == 1);
  CHECK(mpl_solution(flip_solution(1)) == 0);
  CHECK(mpl_solution(flip_solution(3)) == 1);
  auto const s = solution_from_brace(fixtures::b4());
  CHECK(retraction_tower(s) == std::vector<std::size_t>{4, 2, 1});
  CHECK(mpl_solution(s) == 2);
}

TEST_CASE("permutation groups of solutions") {
  CHECK(permutation_group_order(flip_solution(4)) == 1);
  CHECK(permutation_group_order(solution_from_brace(fixtures::trivial({2, 2}))) == 1);
  auto const s = solution_from_brace(fixtures::b4());
  std::vector<Permutation> generators;
  for (Element x = 0; x < 4; ++x) {
    generators.push_back(s.sigma_map(x));
  }
  auto const brute = oracle::closure(4, generators);
  CHECK(permutation_group_order(s) == brute.size());
  CHECK(brute.size() == retract_quotient(fixtures::b4()).order());
}

TEST_CASE("solution level matches brace level on small censuses") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (auto const& brace : fixtures::census_braces(n)) {
      CHECK(mpl_solution(solution_from_brace(brace)) == multipermutation_level(brace));
    }
  }
}
