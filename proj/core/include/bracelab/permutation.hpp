#ifndef BRACELAB_PERMUTATION_HPP_
#define BRACELAB_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bracelab/error.hpp"

namespace bracelab {

// A bijection of [0, degree).
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidGenerator unless `images` is a bijection of [0, size).
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  std::span<Element const> images() const noexcept { return images_; }

  // (*this * other)(x) == (*this)(other(x)).
  Permutation operator*(Permutation const& other) const;
  Permutation inverse() const;
  std::size_t order() const;
  bool is_identity() const noexcept;

  auto operator<=>(Permutation const&) const = default;
  bool operator==(Permutation const&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Element> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

// A finite permutation group, stored as its sorted list of elements.
class PermutationGroup {
 public:
  // The group {identity} of the given degree.
  static PermutationGroup trivial(std::size_t degree);

  // Wraps a set of permutations the caller guarantees to be a group. Sorts and
  // deduplicates. Used for groups produced by exhaustive constructions.
  static PermutationGroup from_closed_set(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::vector<Permutation> const& elements() const noexcept { return elements_; }
  bool contains(Permutation const& p) const;
  bool is_abelian() const;

  bool operator==(PermutationGroup const&) const = default;

 private:
  PermutationGroup(std::size_t degree, std::vector<Permutation> sorted)
      : degree_(degree), elements_(std::move(sorted)) {}

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

// Subgroup of Sym(degree) generated by `generators`. Throws InvalidGenerator if
// a generator has the wrong degree.
PermutationGroup closure(std::size_t degree, std::span<Permutation const> generators);

// Orders of the terms of the lower central series G = G_1 > G_2 > ... until
// the series becomes trivial or stabilises.
std::vector<std::size_t> lower_central_series(PermutationGroup const& group);

bool is_nilpotent_group(PermutationGroup const& group);

}  // namespace bracelab

#endif  // BRACELAB_PERMUTATION_HPP_
