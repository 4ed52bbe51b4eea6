#ifndef BRACELAB_LIMITS_HPP_
#define BRACELAB_LIMITS_HPP_

#include <cstddef>

namespace bracelab {

// Size bounds shared by every operation that materialises tables or groups.
struct Limits {
  // Largest brace / group order accepted anywhere.
  std::size_t max_order = 64;
  // Largest automorphism group that automorphism_group() will enumerate.
  std::size_t max_automorphisms = 2'000'000;

  // Defaults, with max_order overridden by BRACELAB_MAX_ORDER when set to a
  // positive integer.
  static Limits from_environment();
};

}  // namespace bracelab

#endif  // BRACELAB_LIMITS_HPP_
