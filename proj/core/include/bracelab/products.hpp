#ifndef BRACELAB_PRODUCTS_HPP_
#define BRACELAB_PRODUCTS_HPP_

#include <span>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/limits.hpp"
#include "bracelab/permutation.hpp"

namespace bracelab {

// A homomorphism from the adjoint group of `acting` into the brace
// automorphisms of `target`; image(h) is a permutation of target elements.
class BraceAction {
 public:
  // Verifies every image preserves + and o, image(0) is the identity and
  // image(h1 o h2) == image(h1) * image(h2). Throws ActionError otherwise.
  static BraceAction validate(LeftBrace target, LeftBrace acting, std::vector<Permutation> images);

  static BraceAction trivial(LeftBrace target, LeftBrace acting);

  LeftBrace const& target() const noexcept { return target_; }
  LeftBrace const& acting() const noexcept { return acting_; }
  Permutation const& image(Element h) const { return images_[h]; }
  std::span<Permutation const> images() const noexcept { return images_; }

 private:
  BraceAction(LeftBrace target, LeftBrace acting, std::vector<Permutation> images)
      : target_(std::move(target)), acting_(std::move(acting)), images_(std::move(images)) {}

  LeftBrace target_;
  LeftBrace acting_;
  std::vector<Permutation> images_;
};

// True if `map` preserves both + and o of `brace`.
bool is_brace_automorphism(LeftBrace const& brace, Permutation const& map);

// N x| H with (g1, h1) o (g2, h2) = (g1 o image(h1)(g2), h1 o h2).
//
// The additive group is presented by N's factors followed by H's, so the pair
// (g, h) has index g * |H| + h. Throws ResourceLimit if |N| |H| exceeds the
// order bound.
LeftBrace semidirect(BraceAction const& action, Limits const& limits = {});

// The brace of functions H -> G under pointwise + and o, with f encoded as
// the mixed-radix tuple (f(0), ..., f(|H|-1)).
LeftBrace function_brace(LeftBrace const& base, std::size_t arity, Limits const& limits = {});

// G wr H = W x| H with W = function_brace(G, |H|) and H acting by
// image(h)(f)(x) = f(x o h). Throws ResourceLimit when |G|^|H| |H| exceeds
// the order bound.
LeftBrace wreath(LeftBrace const& base, LeftBrace const& top, Limits const& limits = {});

// The action used by wreath().
BraceAction wreath_action(LeftBrace const& base, LeftBrace const& top, Limits const& limits = {});

}  // namespace bracelab

#endif  // BRACELAB_PRODUCTS_HPP_
