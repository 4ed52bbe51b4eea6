#include "bracelab/products.hpp"

#include <optional>
#include <string>

namespace bracelab {

bool is_brace_automorphism(LeftBrace const& brace, Permutation const& map) {
  std::size_t const n = brace.order();
  if (map.degree() != n) {
    return false;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (map(brace.add(a, b)) != brace.add(map(a), map(b)) ||
          map(brace.circle(a, b)) != brace.circle(map(a), map(b))) {
        return false;
      }
    }
  }
  return true;
}

BraceAction BraceAction::validate(LeftBrace target, LeftBrace acting, std::vector<Permutation> images) {
  std::size_t const h_order = acting.order();
  if (images.size() != h_order) {
    throw ActionError("action lists " + std::to_string(images.size()) + " images for a brace of order " +
                      std::to_string(h_order));
  }
  for (Element h = 0; h < h_order; ++h) {
    if (!is_brace_automorphism(target, images[h])) {
      throw ActionError("image of " + std::to_string(h) + " is not a brace automorphism");
    }
  }
  if (!images[0].is_identity()) {
    throw ActionError("image of 0 is not the identity");
  }
  for (Element h1 = 0; h1 < h_order; ++h1) {
    for (Element h2 = 0; h2 < h_order; ++h2) {
      if (images[acting.circle(h1, h2)] != images[h1] * images[h2]) {
        throw ActionError("action is not a homomorphism at (" + std::to_string(h1) + ", " + std::to_string(h2) +
                          ")");
      }
    }
  }
  return BraceAction(std::move(target), std::move(acting), std::move(images));
}

BraceAction BraceAction::trivial(LeftBrace target, LeftBrace acting) {
  std::vector<Permutation> images(acting.order(), Permutation::identity(target.order()));
  return BraceAction(std::move(target), std::move(acting), std::move(images));
}

namespace {

// base^exponent * factor, or nullopt when it exceeds `bound`.
std::optional<std::size_t> bounded_size(std::size_t base, std::size_t exponent, std::size_t factor,
                                        std::size_t bound) {
  std::size_t result = factor;
  if (result > bound) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > bound / base) {
      return std::nullopt;
    }
    result *= base;
  }
  return result <= bound ? std::optional{result} : std::nullopt;
}

std::string too_large(std::string const& what, std::size_t bound) {
  return what + " would exceed the order bound " + std::to_string(bound);
}

}  // namespace

LeftBrace semidirect(BraceAction const& action, Limits const& limits) {
  LeftBrace const& target = action.target();
  LeftBrace const& acting = action.acting();
  std::size_t const nn = target.order();
  std::size_t const hn = acting.order();
  if (!bounded_size(nn, 1, hn, limits.max_order)) {
    throw ResourceLimit(too_large("semidirect product", limits.max_order));
  }
  std::vector<std::uint32_t> factors(target.additive().factors().begin(), target.additive().factors().end());
  factors.insert(factors.end(), acting.additive().factors().begin(), acting.additive().factors().end());
  FiniteAbelianGroup additive(std::move(factors));

  std::size_t const n = nn * hn;
  std::vector<Element> circle(n * n);
  for (Element g1 = 0; g1 < nn; ++g1) {
    for (Element h1 = 0; h1 < hn; ++h1) {
      Permutation const& twist = action.image(h1);
      Element const left = static_cast<Element>(g1 * hn + h1);
      for (Element g2 = 0; g2 < nn; ++g2) {
        Element const g = target.circle(g1, twist(g2));
        for (Element h2 = 0; h2 < hn; ++h2) {
          circle[left * n + g2 * hn + h2] = static_cast<Element>(g * hn + acting.circle(h1, h2));
        }
      }
    }
  }
  return validate_brace(std::move(additive), std::move(circle), limits);
}

LeftBrace function_brace(LeftBrace const& base, std::size_t arity, Limits const& limits) {
  std::size_t const g = base.order();
  auto const size = bounded_size(g, arity, 1, limits.max_order);
  if (!size) {
    throw ResourceLimit(too_large("function brace", limits.max_order));
  }
  std::size_t const n = *size;
  std::vector<std::uint32_t> factors;
  for (std::size_t i = 0; i < arity; ++i) {
    factors.insert(factors.end(), base.additive().factors().begin(), base.additive().factors().end());
  }
  FiniteAbelianGroup additive(std::move(factors));

  // values[f * arity + x] = f(x).
  std::vector<Element> values(n * arity);
  for (std::size_t f = 0; f < n; ++f) {
    std::size_t rest = f;
    for (std::size_t x = arity; x-- > 0;) {
      values[f * arity + x] = static_cast<Element>(rest % g);
      rest /= g;
    }
  }
  std::vector<Element> circle(n * n);
  for (std::size_t f1 = 0; f1 < n; ++f1) {
    for (std::size_t f2 = 0; f2 < n; ++f2) {
      std::size_t index = 0;
      for (std::size_t x = 0; x < arity; ++x) {
        index = index * g + base.circle(values[f1 * arity + x], values[f2 * arity + x]);
      }
      circle[f1 * n + f2] = static_cast<Element>(index);
    }
  }
  return validate_brace(std::move(additive), std::move(circle), limits);
}

BraceAction wreath_action(LeftBrace const& base, LeftBrace const& top, Limits const& limits) {
  std::size_t const hn = top.order();
  if (!bounded_size(base.order(), hn, hn, limits.max_order)) {
    throw ResourceLimit(too_large("wreath product", limits.max_order));
  }
  LeftBrace functions = function_brace(base, hn, limits);
  std::size_t const g = base.order();
  std::size_t const n = functions.order();

  std::vector<Permutation> images;
  images.reserve(hn);
  std::vector<Element> f_values(hn);
  for (Element h = 0; h < hn; ++h) {
    std::vector<Element> map(n);
    for (std::size_t f = 0; f < n; ++f) {
      std::size_t rest = f;
      for (std::size_t x = hn; x-- > 0;) {
        f_values[x] = static_cast<Element>(rest % g);
        rest /= g;
      }
      std::size_t index = 0;
      for (Element x = 0; x < hn; ++x) {
        index = index * g + f_values[top.circle(x, h)];
      }
      map[f] = static_cast<Element>(index);
    }
    images.emplace_back(std::move(map));
  }
  return BraceAction::validate(std::move(functions), top, std::move(images));
}

LeftBrace wreath(LeftBrace const& base, LeftBrace const& top, Limits const& limits) {
  return semidirect(wreath_action(base, top, limits), limits);
}

}  // namespace bracelab
