#ifndef BRACELAB_SOLUTION_HPP_
#define BRACELAB_SOLUTION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/error.hpp"
#include "bracelab/permutation.hpp"

namespace bracelab {

// An involutive non-degenerate set-theoretic solution of the Yang-Baxter
// equation on {0, ..., n-1}, r(x, y) = (sigma_x(y), tau_y(x)).
//
// sigma is stored row-major with sigma[x * n + y] = sigma_x(y); tau likewise
// with tau[y * n + x] = tau_y(x).
class Solution {
 public:
  std::size_t size() const noexcept { return size_; }
  Element sigma(Element x, Element y) const { return sigma_[x * size_ + y]; }
  Element tau(Element y, Element x) const { return tau_[y * size_ + x]; }
  std::pair<Element, Element> apply(Element x, Element y) const { return {sigma(x, y), tau(y, x)}; }

  std::span<Element const> sigma_table() const noexcept { return sigma_; }
  std::span<Element const> tau_table() const noexcept { return tau_; }
  Permutation sigma_map(Element x) const;

  bool operator==(Solution const&) const = default;

 private:
  friend Solution validate_solution(std::size_t, std::vector<Element>, std::vector<Element>);

  Solution(std::size_t size, std::vector<Element> sigma, std::vector<Element> tau)
      : size_(size), sigma_(std::move(sigma)), tau_(std::move(tau)) {}

  std::size_t size_ = 0;
  std::vector<Element> sigma_;
  std::vector<Element> tau_;
};

// Checks non-degeneracy, involutivity and the braid relation exhaustively.
// Throws SolutionAxiomError naming the first violation.
Solution validate_solution(std::size_t size, std::vector<Element> sigma, std::vector<Element> tau);

// r(x, y) = (x.y + y, z o (x o y)) with z the o-inverse of x.y + y.
Solution solution_from_brace(LeftBrace const& brace);

// The flip r(x, y) = (y, x).
Solution flip_solution(std::size_t size);

// Quotient by x ~ y iff sigma_x == sigma_y. Classes are numbered in order of
// their smallest member.
Solution retract_solution(Solution const& solution);

// Sizes of solution, Ret(solution), ... until size 1 or a fixed point.
std::vector<std::size_t> retraction_tower(Solution const& solution);

std::optional<std::size_t> mpl_solution(Solution const& solution);

// The group generated by {sigma_x}.
PermutationGroup permutation_group(Solution const& solution);
std::size_t permutation_group_order(Solution const& solution);

}  // namespace bracelab

#endif  // BRACELAB_SOLUTION_HPP_
