#ifndef BRACELAB_FINITE_ABELIAN_HPP_
#define BRACELAB_FINITE_ABELIAN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bracelab/error.hpp"
#include "bracelab/limits.hpp"
#include "bracelab/permutation.hpp"

namespace bracelab {

// Z/d_1 x ... x Z/d_k with elements indexed in mixed radix, most significant
// factor first: (a_1, ..., a_k) <-> sum_i a_i * prod_{j>i} d_j. Index 0 is
// the zero element. Any factors >= 2 are accepted; the canonical
// (invariant-factor) presentation has d_1 | d_2 | ... | d_k.
class FiniteAbelianGroup {
 public:
  // The trivial group.
  FiniteAbelianGroup() = default;

  // Throws InvalidPresentation if a factor is below 2.
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> factors);

  std::span<std::uint32_t const> factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  bool is_canonical() const noexcept;
  bool is_cyclic() const noexcept;

  std::vector<std::uint32_t> decode(Element e) const;
  Element encode(std::span<std::uint32_t const> coordinates) const;

  Element zero() const noexcept { return 0; }
  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  // k * a for any integer k (negative k scales -a).
  Element scale(Element a, std::int64_t k) const;

  // The i-th canonical generator (unit vector in coordinate i).
  Element generator(std::size_t i) const;
  std::uint64_t element_order(Element a) const;
  std::uint64_t exponent() const;

  // Row-major addition table.
  std::vector<Element> addition_table() const;

  bool operator==(FiniteAbelianGroup const& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::uint32_t> factors_;
  std::vector<std::size_t> weights_;  // prod_{j>i} d_j
  std::size_t order_ = 1;
};

FiniteAbelianGroup make_group(std::vector<std::uint32_t> factors);

// Every abelian group of order n in canonical presentation, sorted
// lexicographically by factor list.
std::vector<FiniteAbelianGroup> abelian_groups(std::size_t n);

// An abelian group given only by its addition table (row-major, size x size).
struct AbelianTable {
  std::size_t size = 0;
  Element zero = 0;
  std::vector<Element> add;

  Element sum(Element a, Element b) const { return add[a * size + b]; }
};

// Canonical presentation of a tabulated abelian group together with an
// isomorphism: `image[g]` is the table element matching canonical index g.
struct AbelianIdentification {
  FiniteAbelianGroup group;
  std::vector<Element> image;
};

// Throws InternalError if `table` is not an abelian group.
AbelianIdentification identify_abelian(AbelianTable const& table);

// All additive automorphisms of `group` as permutations of element indices,
// found by choosing images of the canonical generators. Throws ResourceLimit
// when the order exceeds limits.max_order or the group would exceed
// limits.max_automorphisms elements.
PermutationGroup automorphism_group(FiniteAbelianGroup const& group, Limits const& limits = {});

}  // namespace bracelab

#endif  // BRACELAB_FINITE_ABELIAN_HPP_
