#ifndef BRACELAB_THEOREMS_HPP_
#define BRACELAB_THEOREMS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/solution.hpp"

// Executable checks of structural facts about finite left braces. Each check
// evaluates its hypotheses on the given brace and, when they hold, verifies the
// conclusion exhaustively. A failing check always carries a concrete witness.

namespace bracelab {

enum class Verdict { pass, fail, hypothesis_not_met };

std::string_view to_string(Verdict verdict);

struct CheckReport {
  std::string check;
  std::string subject;
  Verdict verdict = Verdict::hypothesis_not_met;
  std::string witness;  // set on fail
  std::vector<std::string> notes;
};

// For Sylow components A_p (order p^n) and A_q (order q^m), p != q:
//  - if p divides no q^t - 1 (1 <= t <= m) then A_p . A_q = 0;
//  - with k = max{s : p^s | q^t - 1}, a^(o p^k) . b = 0 for a in A_p,
//    b in A_q, where k is capped by the exponent of (A_p, o) and
//    cross-checked against annihilator_exponent().
CheckReport check_sylow_annihilation(LeftBrace const& brace, std::string subject = {});

// Cube-free order implies a nonzero socle and finite multipermutation level.
CheckReport check_cubefree(LeftBrace const& brace, std::string subject = {});

// Arithmetic conditions on the Sylow data that force a nonzero socle or a
// finite multipermutation level.
CheckReport check_level_criteria(LeftBrace const& brace, std::string subject = {});

// (A, o) nilpotent iff some left power vanishes uniformly; and for a, b in
// distinct Sylow components, a vanishing left power of a + b forces
// a . b = b . a = 0.
CheckReport check_nil_equivalence(LeftBrace const& brace, std::string subject = {});

// Odd order with (-a) . b = -(a . b) implies a two-sided, ring-nilpotent brace.
CheckReport check_odd_minus_rule(LeftBrace const& brace, std::string subject = {});

// The binomial expansions of a^(o n) and a^(o n) . b in terms of left powers
// and e_i(a, b), and the cancellation a . (a . b) = 0 => a . b = 0 for a of
// p-power o-order and b of coprime q-power additive order.
CheckReport check_binomial_identities(LeftBrace const& brace, std::string subject = {});

// N x| H has finite level iff N and H do; when H^(m) = 0 and N^(m') = 0 the
// product satisfies A^(m + m') = 0.
CheckReport check_semidirect_levels(LeftBrace const& target, LeftBrace const& acting, LeftBrace const& product,
                                    std::string subject = {});

// A wreath product of finite-level braces has finite level.
CheckReport check_wreath_level(LeftBrace const& base, LeftBrace const& top, LeftBrace const& product,
                               std::string subject = {});

// A solution whose permutation group has cube-free order is a
// multipermutation solution.
CheckReport check_solution_cubefree(Solution const& solution, std::string subject = {});

// The solution of a brace is valid, and it is a multipermutation solution
// exactly when the brace has finite multipermutation level.
CheckReport check_solution_correspondence(LeftBrace const& brace, std::string subject = {});

// Every single-brace check, in a fixed order.
std::vector<CheckReport> run_all_checks(LeftBrace const& brace, std::string const& subject);

// Runs every check over named braces; reports sorted by subject then check.
std::vector<CheckReport> run_suite(std::span<std::pair<std::string, LeftBrace> const> braces);

std::size_t count_failures(std::span<CheckReport const> reports);

}  // namespace bracelab

#endif  // BRACELAB_THEOREMS_HPP_
