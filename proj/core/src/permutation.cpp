#include "bracelab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace bracelab {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Element const x = images_[i];
    if (x >= images_.size() || seen[x]) {
      throw InvalidGenerator("not a bijection: position " + std::to_string(i) + " maps to " +
                             std::to_string(x));
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::operator*(Permutation const& other) const {
  std::vector<Element> images(other.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = images_[other.images_[i]];
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Element> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[images_[i]] = static_cast<Element>(i);
  }
  return Permutation(std::move(images), Unchecked{});
}

std::size_t Permutation::order() const {
  std::vector<bool> visited(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) {
      continue;
    }
    std::size_t length = 0;
    for (std::size_t x = start; !visited[x]; x = images_[x]) {
      visited[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Element x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup(degree, {Permutation::identity(degree)});
}

PermutationGroup PermutationGroup::from_closed_set(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return PermutationGroup(degree, std::move(elements));
}

bool PermutationGroup::contains(Permutation const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (elements_[i] * elements_[j] != elements_[j] * elements_[i]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Closure of `seed` (which must contain the identity) under right
// multiplication by `generators`.
std::vector<Permutation> close_under(std::vector<Permutation> seed, std::span<Permutation const> generators) {
  std::unordered_set<Permutation, PermutationHash> seen(seed.begin(), seed.end());
  std::vector<Permutation> elements;
  for (auto& p : seed) {
    if (std::find(elements.begin(), elements.end(), p) == elements.end()) {
      elements.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto const& g : generators) {
      Permutation next = elements[i] * g;
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace

PermutationGroup closure(std::size_t degree, std::span<Permutation const> generators) {
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw InvalidGenerator("generator of degree " + std::to_string(g.degree()) +
                             " in a group of degree " + std::to_string(degree));
    }
  }
  auto elements = close_under({Permutation::identity(degree)}, generators);
  return PermutationGroup::from_closed_set(degree, std::move(elements));
}

std::vector<std::size_t> lower_central_series(PermutationGroup const& group) {
  std::vector<std::size_t> orders{group.order()};
  std::vector<Permutation> current = group.elements();
  auto const& all = group.elements();
  while (current.size() > 1) {
    // [x, g] for x in the current term, g in G; the subgroup they generate.
    std::unordered_set<Permutation, PermutationHash> commutators;
    for (auto const& x : current) {
      Permutation const x_inv = x.inverse();
      for (auto const& g : all) {
        commutators.insert(x_inv * g.inverse() * x * g);
      }
    }
    std::vector<Permutation> gens(commutators.begin(), commutators.end());
    std::sort(gens.begin(), gens.end());
    auto next = closure(group.degree(), gens).elements();
    if (next.size() == current.size()) {
      break;
    }
    orders.push_back(next.size());
    current = std::move(next);
  }
  return orders;
}

bool is_nilpotent_group(PermutationGroup const& group) {
  return lower_central_series(group).back() == 1;
}

}  // namespace bracelab
