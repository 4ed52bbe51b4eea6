#include <doctest.h>

#include <algorithm>

#include "bracelab/theorems.hpp"
#include "fixtures.hpp"

using namespace bracelab;

namespace {

Verdict verdict_of(std::vector<CheckReport> const& reports, std::string_view check) {
  auto it = std::find_if(reports.begin(), reports.end(), [&](CheckReport const& r) { return r.check == check; });
  REQUIRE(it != reports.end());
  return it->verdict;
}

// First census brace of order at most 24 whose retraction tower stalls.
std::optional<LeftBrace> infinite_level_brace() {
  for (std::size_t n = 2; n <= 24; ++n) {
    for (auto const& brace : fixtures::census_braces(n)) {
      if (!multipermutation_level(brace)) {
        return brace;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::fail) == "fail");
  CHECK(to_string(Verdict::hypothesis_not_met) == "hypothesis-not-met");
}

TEST_CASE("the S3 brace") {
  auto const reports = run_all_checks(fixtures::s3_brace(), "s3");
  CHECK(reports.size() == 8);
  CHECK(count_failures(reports) == 0);
  CHECK(verdict_of(reports, "sylow_annihilation") == Verdict::pass);
  CHECK(verdict_of(reports, "cubefree_socle") == Verdict::pass);
  CHECK(verdict_of(reports, "odd_minus_rule") == Verdict::hypothesis_not_met);
  CHECK(multipermutation_level(fixtures::s3_brace()) == 2);
}

TEST_CASE("order 15 and order 9") {
  for (auto const& brace : fixtures::census_braces(15)) {
    auto const reports = run_all_checks(brace, "15");
    CHECK(count_failures(reports) == 0);
    CHECK(verdict_of(reports, "sylow_annihilation") == Verdict::pass);
    CHECK(verdict_of(reports, "level_criteria") == Verdict::pass);
    CHECK(verdict_of(reports, "odd_minus_rule") == Verdict::pass);
  }
  for (auto const& brace : fixtures::census_braces(9)) {
    auto const reports = run_all_checks(brace, "9");
    CHECK(count_failures(reports) == 0);
    CHECK(verdict_of(reports, "sylow_annihilation") == Verdict::hypothesis_not_met);
  }
}

TEST_CASE("hypotheses that do not apply") {
  CHECK(check_cubefree(fixtures::trivial({2, 4})).verdict == Verdict::hypothesis_not_met);
  CHECK(check_odd_minus_rule(fixtures::b4()).verdict == Verdict::hypothesis_not_met);
  CHECK(check_sylow_annihilation(LeftBrace()).verdict == Verdict::hypothesis_not_met);
  CHECK(check_level_criteria(LeftBrace()).verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("every check passes on the small censuses") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<std::pair<std::string, LeftBrace>> named;
    for (auto const& brace : fixtures::census_braces(n)) {
      named.emplace_back(std::to_string(n) + "#" + std::to_string(named.size() + 1), brace);
    }
    auto const reports = run_suite(named);
    for (auto const& report : reports) {
      if (report.verdict == Verdict::fail) {
        FAIL_CHECK(report.check << " [" << report.subject << "]: " << report.witness);
      }
    }
    CHECK(std::is_sorted(reports.begin(), reports.end(), [](CheckReport const& a, CheckReport const& b) {
      return std::tie(a.subject, a.check) < std::tie(b.subject, b.check);
    }));
  }
}

TEST_CASE("product checks") {
  auto const action = fixtures::negation_action();
  auto const product = semidirect(action);
  auto const report = check_semidirect_levels(action.target(), action.acting(), product, "z3 x| z2");
  CHECK(report.verdict == Verdict::pass);

  auto const z2 = fixtures::trivial({2});
  CHECK(check_wreath_level(z2, z2, wreath(z2, z2)).verdict == Verdict::pass);
}

TEST_CASE("checks report a witness when the conclusion is false") {
  auto const stalled = infinite_level_brace();
  REQUIRE(stalled.has_value());
  auto const z2 = fixtures::trivial({2});
  auto const report = check_semidirect_levels(z2, z2, *stalled, "mismatched");
  CHECK(report.verdict == Verdict::fail);
  CHECK_FALSE(report.witness.empty());
  CHECK(check_wreath_level(z2, z2, *stalled).verdict == Verdict::fail);
}

TEST_CASE("solution checks") {
  CHECK(check_solution_cubefree(flip_solution(5)).verdict == Verdict::pass);
  CHECK(check_solution_correspondence(fixtures::b4()).verdict == Verdict::pass);
  auto const stalled = infinite_level_brace();
  REQUIRE(stalled.has_value());
  CHECK(check_solution_correspondence(*stalled).verdict == Verdict::pass);
  CHECK_FALSE(mpl_solution(solution_from_brace(*stalled)).has_value());
}
