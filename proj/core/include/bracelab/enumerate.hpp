#ifndef BRACELAB_ENUMERATE_HPP_
#define BRACELAB_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/finite_abelian.hpp"
#include "bracelab/limits.hpp"

namespace bracelab {

struct EnumerateOptions {
  // Orders above `default_bound` need `slow`.
  bool slow = false;
  std::size_t default_bound = 16;
  // Visit search branches in reverse; the census must not change.
  bool reverse_search = false;
  Limits limits = {};
};

struct CensusEntry {
  LeftBrace brace;
  // (o-order, number of elements with that order), ascending.
  std::vector<std::pair<std::uint64_t, std::size_t>> adjoint_order_profile;
};

struct BraceCensus {
  std::size_t order = 0;
  std::vector<CensusEntry> classes;
  // Regular subgroups of holomorphs visited before deduplication.
  std::size_t candidates = 0;
};

// Lexicographically least circle table in the orbit of `brace` under the
// automorphisms of its additive group.
std::vector<Element> canonical_circle_table(LeftBrace const& brace, PermutationGroup const& automorphisms);

// Every brace on `group` up to isomorphism, as canonical tables sorted
// ascending. Works by searching the holomorph of `group` for regular
// subgroups.
std::vector<LeftBrace> braces_on(FiniteAbelianGroup const& group, EnumerateOptions const& options = {},
                                 std::size_t* candidates = nullptr);

// Every left brace of order n up to isomorphism. Classes are grouped by
// additive group (in abelian_groups order), then by canonical table. Throws
// ResourceLimit when n is above the applicable bound.
BraceCensus enumerate_braces(std::size_t n, EnumerateOptions const& options = {});

std::vector<std::pair<std::uint64_t, std::size_t>> adjoint_order_profile(LeftBrace const& brace);

// True iff an additive isomorphism also intertwines o.
bool are_isomorphic(LeftBrace const& a, LeftBrace const& b, Limits const& limits = {});

}  // namespace bracelab

#endif  // BRACELAB_ENUMERATE_HPP_
