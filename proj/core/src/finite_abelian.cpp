#include "bracelab/finite_abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "bracelab/arith.hpp"

namespace bracelab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
  for (auto d : factors_) {
    if (d < 2) {
      throw InvalidPresentation("invariant factor " + std::to_string(d) + " is below 2");
    }
  }
  weights_.assign(factors_.size(), 1);
  order_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    weights_[i] = order_;
    order_ *= factors_[i];
  }
}

bool FiniteAbelianGroup::is_canonical() const noexcept {
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i] % factors_[i - 1] != 0) {
      return false;
    }
  }
  return true;
}

bool FiniteAbelianGroup::is_cyclic() const noexcept {
  std::uint64_t l = 1;
  for (auto d : factors_) {
    l = std::lcm(l, std::uint64_t{d});
  }
  return l == order_;
}

std::vector<std::uint32_t> FiniteAbelianGroup::decode(Element e) const {
  std::vector<std::uint32_t> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = static_cast<std::uint32_t>((e / weights_[i]) % factors_[i]);
  }
  return coords;
}

Element FiniteAbelianGroup::encode(std::span<std::uint32_t const> coordinates) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    e += static_cast<std::size_t>(coordinates[i] % factors_[i]) * weights_[i];
  }
  return static_cast<Element>(e);
}

Element FiniteAbelianGroup::add(Element a, Element b) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::size_t const x = (a / weights_[i]) % factors_[i];
    std::size_t const y = (b / weights_[i]) % factors_[i];
    e += ((x + y) % factors_[i]) * weights_[i];
  }
  return static_cast<Element>(e);
}

Element FiniteAbelianGroup::neg(Element a) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::size_t const x = (a / weights_[i]) % factors_[i];
    e += ((factors_[i] - x) % factors_[i]) * weights_[i];
  }
  return static_cast<Element>(e);
}

Element FiniteAbelianGroup::scale(Element a, std::int64_t k) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    auto const d = static_cast<std::int64_t>(factors_[i]);
    auto const x = static_cast<std::int64_t>((a / weights_[i]) % factors_[i]);
    std::int64_t const kk = ((k % d) + d) % d;
    e += static_cast<std::size_t>((kk * x) % d) * weights_[i];
  }
  return static_cast<Element>(e);
}

Element FiniteAbelianGroup::generator(std::size_t i) const { return static_cast<Element>(weights_.at(i)); }

std::uint64_t FiniteAbelianGroup::element_order(Element a) const {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t const x = (a / weights_[i]) % factors_[i];
    result = std::lcm(result, factors_[i] / std::gcd(std::uint64_t{factors_[i]}, x));
  }
  return result;
}

std::uint64_t FiniteAbelianGroup::exponent() const {
  std::uint64_t result = 1;
  for (auto d : factors_) {
    result = std::lcm(result, std::uint64_t{d});
  }
  return result;
}

std::vector<Element> FiniteAbelianGroup::addition_table() const {
  std::vector<Element> table(order_ * order_);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      table[a * order_ + b] = add(a, b);
    }
  }
  return table;
}

FiniteAbelianGroup make_group(std::vector<std::uint32_t> factors) { return FiniteAbelianGroup(std::move(factors)); }

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& prefix,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FiniteAbelianGroup> abelian_groups(std::size_t n) {
  if (n == 0) {
    return {};
  }
  // Combine one partition of each prime exponent; the i-th largest invariant
  // factor collects p^(i-th largest part) over all primes.
  std::vector<std::vector<std::uint32_t>> presentations{{}};
  for (auto const& [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> prefix;
    partitions(e, e, prefix, parts);
    std::vector<std::vector<std::uint32_t>> next;
    for (auto const& base : presentations) {
      for (auto const& partition : parts) {
        // base is ascending; align both from the largest end.
        std::size_t const k = std::max(base.size(), partition.size());
        std::vector<std::uint32_t> merged(k, 1);
        for (std::size_t i = 0; i < base.size(); ++i) {
          merged[k - base.size() + i] = base[i];
        }
        for (std::size_t i = 0; i < partition.size(); ++i) {
          merged[k - 1 - i] *= static_cast<std::uint32_t>(ipow(p, partition[i]));
        }
        next.push_back(std::move(merged));
      }
    }
    presentations = std::move(next);
  }
  std::sort(presentations.begin(), presentations.end());
  std::vector<FiniteAbelianGroup> groups;
  groups.reserve(presentations.size());
  for (auto& factors : presentations) {
    groups.emplace_back(std::move(factors));
  }
  return groups;
}

namespace {

std::uint64_t table_order(AbelianTable const& t, Element a) {
  std::uint64_t k = 1;
  for (Element x = a; x != t.zero; x = t.sum(x, a)) {
    if (++k > t.size) {
      throw InternalError("table of size " + std::to_string(t.size) + " is not an abelian group");
    }
  }
  return k;
}

// Enumerates images (x_1, ..., x_k) of the canonical generators of `group`
// inside `target` such that x_i has order d_i and the x_i generate a subgroup
// of order |group|, i.e. every isomorphism group -> target. The callback gets
// the full element map and returns false to stop.
void for_each_isomorphism(FiniteAbelianGroup const& group, AbelianTable const& target,
                          std::function<bool(std::vector<Element> const&)> const& visit) {
  std::size_t const n = target.size;
  auto const factors = group.factors();
  std::size_t const k = factors.size();

  std::vector<std::uint64_t> orders(n);
  for (Element a = 0; a < n; ++a) {
    orders[a] = table_order(target, a);
  }

  // span[i] lists the subgroup generated by x_1..x_i as the image of the
  // canonical elements whose coordinates i.. are zero, in index order of the
  // quotient by those coordinates. We build it directly as a map from
  // coordinate tuples (prefix) to elements.
  std::vector<Element> images(k, 0);
  std::vector<std::vector<Element>> spans(k + 1);
  spans[0] = {target.zero};
  std::vector<bool> in_span(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == k) {
      // spans[k] is indexed by the prefix value of coordinates (1..k) in
      // mixed radix, which is exactly the canonical element index.
      return visit(spans[k]);
    }
    std::fill(in_span.begin(), in_span.end(), false);
    for (Element e : spans[i]) {
      in_span[e] = true;
    }
    std::uint32_t const d = factors[i];
    for (Element x = 0; x < n; ++x) {
      if (orders[x] != d) {
        continue;
      }
      bool independent = true;
      Element multiple = x;
      for (std::uint32_t c = 1; c < d; ++c) {
        if (in_span[multiple]) {
          independent = false;
          break;
        }
        multiple = target.sum(multiple, x);
      }
      if (!independent) {
        continue;
      }
      images[i] = x;
      // New prefix index = old_prefix * d + c.
      std::vector<Element> next;
      next.reserve(spans[i].size() * d);
      for (Element base : spans[i]) {
        Element v = base;
        for (std::uint32_t c = 0; c < d; ++c) {
          next.push_back(v);
          v = target.sum(v, x);
        }
      }
      spans[i + 1] = std::move(next);
      if (!extend(i + 1)) {
        return false;
      }
      // `in_span` is clobbered by deeper levels.
      std::fill(in_span.begin(), in_span.end(), false);
      for (Element e : spans[i]) {
        in_span[e] = true;
      }
    }
    return true;
  };
  extend(0);
}

std::map<std::uint64_t, std::size_t> order_profile(AbelianTable const& t) {
  std::map<std::uint64_t, std::size_t> profile;
  for (Element a = 0; a < t.size; ++a) {
    ++profile[table_order(t, a)];
  }
  return profile;
}

AbelianTable tabulate(FiniteAbelianGroup const& g) { return {g.order(), 0, g.addition_table()}; }

}  // namespace

AbelianIdentification identify_abelian(AbelianTable const& table) {
  auto const profile = order_profile(table);
  for (auto const& candidate : abelian_groups(table.size)) {
    if (order_profile(tabulate(candidate)) != profile) {
      continue;
    }
    std::vector<Element> found;
    for_each_isomorphism(candidate, table, [&](std::vector<Element> const& image) {
      found = image;
      return false;
    });
    if (found.size() == table.size) {
      return {candidate, std::move(found)};
    }
  }
  throw InternalError("table of size " + std::to_string(table.size) + " is not an abelian group");
}

PermutationGroup automorphism_group(FiniteAbelianGroup const& group, Limits const& limits) {
  if (group.order() > limits.max_order) {
    throw ResourceLimit("group order " + std::to_string(group.order()) + " exceeds the bound " +
                        std::to_string(limits.max_order));
  }
  std::vector<Permutation> automorphisms;
  for_each_isomorphism(group, tabulate(group), [&](std::vector<Element> const& image) {
    if (automorphisms.size() >= limits.max_automorphisms) {
      throw ResourceLimit("automorphism group of " + std::to_string(group.order()) +
                          "-element group exceeds " + std::to_string(limits.max_automorphisms) +
                          " elements");
    }
    automorphisms.emplace_back(image);
    return true;
  });
  return PermutationGroup::from_closed_set(group.order(), std::move(automorphisms));
}

}  // namespace bracelab
