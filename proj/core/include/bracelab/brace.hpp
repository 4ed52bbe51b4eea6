#ifndef BRACELAB_BRACE_HPP_
#define BRACELAB_BRACE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bracelab/error.hpp"
#include "bracelab/finite_abelian.hpp"
#include "bracelab/limits.hpp"
#include "bracelab/permutation.hpp"

namespace bracelab {

// A finite left brace: an abelian group (A, +) with a group operation o on the
// same set, identity 0, such that a o (b + c) + a == a o b + a o c.
//
// The derived products are
//   a . b  = a o b - a - b        (left distributive)
//   l_a(b) = a . b + b            (additive automorphism, a o b = a + l_a(b))
//
// Instances are immutable and always validated.
class LeftBrace {
 public:
  // The one-element brace.
  LeftBrace();

  // Trivial brace a o b = a + b on the given group.
  static LeftBrace trivial(FiniteAbelianGroup additive, Limits const& limits = {});

  std::size_t order() const noexcept { return order_; }
  FiniteAbelianGroup const& additive() const noexcept { return additive_; }
  std::span<Element const> circle_table() const noexcept { return circle_; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element scale(Element a, std::int64_t k) const { return additive_.scale(a, k); }
  std::uint64_t additive_order(Element a) const { return additive_.element_order(a); }

  Element circle(Element a, Element b) const { return circle_[a * order_ + b]; }
  Element dot(Element a, Element b) const { return dot_[a * order_ + b]; }
  Element lambda(Element a, Element b) const { return add(dot(a, b), b); }
  Element circle_inverse(Element a) const { return inverse_[a]; }
  std::uint64_t circle_order(Element a) const;

  // n-fold o-product of a; n == 0 gives 0.
  Element circle_power(Element a, std::uint64_t n) const;
  // a^1 = a, a^(i+1) = a . a^i. Throws DomainError for n == 0.
  Element left_power(Element a, std::uint64_t n) const;
  // (e_0, ..., e_n) with e_0 = b and e_(i+1) = a . e_i.
  std::vector<Element> e_sequence(Element a, Element b, std::size_t n) const;
  // sum_i coefficients[i] * e_i(a, b): the element attached to the integer
  // polynomial sum_i coefficients[i] x^i.
  Element e_combination(Element a, Element b, std::span<std::int64_t const> coefficients) const;

  Permutation lambda_map(Element a) const;

  bool operator==(LeftBrace const& other) const {
    return additive_ == other.additive_ && circle_ == other.circle_;
  }

 private:
  friend LeftBrace validate_brace(FiniteAbelianGroup, std::vector<Element>, Limits const&);

  LeftBrace(FiniteAbelianGroup additive, std::vector<Element> circle);

  FiniteAbelianGroup additive_;
  std::size_t order_ = 1;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<Element> circle_;
  std::vector<Element> dot_;
  std::vector<Element> inverse_;
};

// Checks o is a group with identity 0 and the brace law on all triples.
// Throws BraceAxiomError describing the first violation found, or
// ResourceLimit when the order exceeds limits.max_order.
LeftBrace validate_brace(FiniteAbelianGroup additive, std::vector<Element> circle_table,
                         Limits const& limits = {});

// Brace from l-maps: row a of `lambda_rows` lists l_a(0..n-1); converted to
// a o b = a + l_a(b) and validated.
LeftBrace brace_from_lambda(FiniteAbelianGroup additive, std::span<Element const> lambda_rows,
                            Limits const& limits = {});

// A brace given on an arbitrary labelling, moved onto a canonical additive
// presentation. `labels[g]` is the original label of canonical element g.
struct RelabeledBrace {
  LeftBrace brace;
  std::vector<Element> labels;
};

RelabeledBrace brace_from_tables(std::size_t size, std::span<Element const> add_table,
                                 std::span<Element const> circle_table, Element zero,
                                 Limits const& limits = {});

// Moves a brace onto the canonical presentation of its additive group (a no-op
// relabelling when it is already canonical).
RelabeledBrace canonical_presentation(LeftBrace const& brace, Limits const& limits = {});

// A subset of a brace's elements, sorted ascending.
struct BraceSubset {
  std::vector<Element> members;
  bool is_subgroup = false;
  bool is_ideal = false;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element e) const;
};

// Additive subgroup generated by `generators`.
std::vector<Element> additive_span(LeftBrace const& brace, std::span<Element const> generators);

// {a : a . b == 0 for all b}, verified to be an ideal.
BraceSubset socle(LeftBrace const& brace);

// Quotient by an ideal; cosets are represented by their smallest member and
// the result is put on the canonical additive presentation.
LeftBrace quotient(LeftBrace const& brace, BraceSubset const& ideal, Limits const& limits = {});

// A / Soc(A).
LeftBrace retract_quotient(LeftBrace const& brace, Limits const& limits = {});

// Both finiteness witnesses for the multipermutation level.
struct LevelAnalysis {
  // Orders along A, A/Soc(A), ... ending at 1 or at a fixed point.
  std::vector<std::size_t> socle_tower;
  // Orders of A^(1) = A, A^(n+1) = <A^(n) . A>, ending at 1 or a repeat.
  std::vector<std::size_t> product_chain;
  // Number of retractions reaching order 1, if any.
  std::optional<std::size_t> level;
  // Smallest n with A^(n) = 0, if any.
  std::optional<std::size_t> chain_length;
};

// Throws InternalError if the two chains disagree on finiteness.
LevelAnalysis analyze_level(LeftBrace const& brace, Limits const& limits = {});

std::optional<std::size_t> multipermutation_level(LeftBrace const& brace, Limits const& limits = {});

// Sub-brace of elements of p-power additive order.
struct SylowComponent {
  std::uint64_t prime = 0;
  unsigned exponent = 0;  // |A_p| = prime^exponent
  std::vector<Element> members;  // indices in the parent, ascending
  LeftBrace brace;
  std::vector<Element> labels;  // brace element g -> parent index
};

// One component per prime dividing the order, primes ascending.
std::vector<SylowComponent> sylow_decompose(LeftBrace const& brace, Limits const& limits = {});

// The adjoint group (A, o) as the left regular permutation representation.
PermutationGroup adjoint_group(LeftBrace const& brace);

struct BraceClassification {
  bool two_sided = false;
  // Smallest m with a^m = 0 for every a, searched up to order + 1.
  std::optional<std::size_t> left_nil_index;
  bool adjoint_nilpotent = false;
  bool minus_rule = false;
  // Only evaluated for two-sided braces.
  std::optional<bool> ring_nilpotent;

  bool is_left_nil() const noexcept { return left_nil_index.has_value(); }
};

BraceClassification classify(LeftBrace const& brace);

}  // namespace bracelab

#endif  // BRACELAB_BRACE_HPP_
