#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

namespace {

bool preserves_addition(FiniteAbelianGroup const& group, Table const& f) {
  std::size_t const n = group.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (f[group.add(a, b)] != group.add(f[a], f[b])) {
        return false;
      }
    }
  }
  return true;
}

Table compose(Table const& f, Table const& g) {
  Table h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    h[x] = f[g[x]];
  }
  return h;
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<Table> automorphisms(FiniteAbelianGroup const& group) {
  std::size_t const n = group.order();
  Table f(n);
  std::iota(f.begin(), f.end(), Element{0});
  std::vector<Table> result;
  do {
    if (preserves_addition(group, f)) {
      result.push_back(f);
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return result;
}

std::vector<Permutation> closure(std::size_t degree, std::vector<Permutation> const& generators) {
  std::set<Permutation> elements{Permutation::identity(degree)};
  elements.insert(generators.begin(), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> const current(elements.begin(), elements.end());
    for (auto const& a : current) {
      for (auto const& b : current) {
        grew |= elements.insert(a * b).second;
      }
    }
  }
  return {elements.begin(), elements.end()};
}

bool is_left_brace(FiniteAbelianGroup const& group, Table const& circle) {
  std::size_t const n = group.order();
  if (circle.size() != n * n) {
    return false;
  }
  auto const o = [&](Element a, Element b) { return circle[a * n + b]; };
  for (Element a = 0; a < n; ++a) {
    if (o(0, a) != a || o(a, 0) != a) {
      return false;
    }
    std::vector<bool> seen(n, false);
    for (Element b = 0; b < n; ++b) {
      if (circle[a * n + b] >= n || seen[o(a, b)]) {
        return false;
      }
      seen[o(a, b)] = true;
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (o(o(a, b), c) != o(a, o(b, c))) {
          return false;
        }
        if (group.add(o(a, group.add(b, c)), a) != group.add(o(a, b), o(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Table> all_braces(FiniteAbelianGroup const& group) {
  std::size_t const n = group.order();
  auto const auts = automorphisms(group);
  std::size_t const identity = static_cast<std::size_t>(
      std::find_if(auts.begin(), auts.end(),
                   [](Table const& f) {
                     for (std::size_t x = 0; x < f.size(); ++x) {
                       if (f[x] != x) {
                         return false;
                       }
                     }
                     return true;
                   }) -
      auts.begin());
  std::map<Table, std::size_t> index;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    index.emplace(auts[i], i);
  }
  std::vector<std::vector<std::size_t>> product(auts.size(), std::vector<std::size_t>(auts.size()));
  for (std::size_t i = 0; i < auts.size(); ++i) {
    for (std::size_t j = 0; j < auts.size(); ++j) {
      product[i][j] = index.at(compose(auts[i], auts[j]));
    }
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> lambda(n, unset);
  lambda[0] = identity;
  std::vector<Table> result;

  // Checks l_(a + l_a(b)) = l_a l_b for every pair whose three maps are set.
  auto const consistent = [&](Element newest) {
    for (Element a = 0; a < n; ++a) {
      if (lambda[a] == unset) {
        continue;
      }
      for (Element b = 0; b < n; ++b) {
        if (lambda[b] == unset || (a != newest && b != newest)) {
          continue;
        }
        Element const c = group.add(a, auts[lambda[a]][b]);
        if (lambda[c] != unset && lambda[c] != product[lambda[a]][lambda[b]]) {
          return false;
        }
      }
    }
    for (Element c = 0; c < n; ++c) {
      if (lambda[c] == unset) {
        continue;
      }
      for (Element a = 0; a < n; ++a) {
        if (lambda[a] == unset || (a != newest && c != newest)) {
          continue;
        }
        // b = l_a^-1(c - a) closes the remaining triples.
        Table const& la = auts[lambda[a]];
        Element const target = group.sub(c, a);
        Element b = 0;
        while (la[b] != target) {
          ++b;
        }
        if (lambda[b] != unset && lambda[c] != product[lambda[a]][lambda[b]]) {
          return false;
        }
      }
    }
    return true;
  };

  auto const search = [&](auto&& self, Element next) -> void {
    if (next == n) {
      Table circle(n * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          circle[a * n + b] = group.add(a, auts[lambda[a]][b]);
        }
      }
      result.push_back(std::move(circle));
      return;
    }
    for (std::size_t f = 0; f < auts.size(); ++f) {
      lambda[next] = f;
      if (consistent(next)) {
        self(self, next + 1);
      }
    }
    lambda[next] = unset;
  };
  if (n == 1) {
    result.push_back(Table{0});
    return result;
  }
  search(search, 1);
  return result;
}

std::size_t count_classes(FiniteAbelianGroup const& group) {
  std::size_t const n = group.order();
  auto const braces = all_braces(group);
  auto const auts = automorphisms(group);
  std::map<Table, std::size_t> index;
  for (std::size_t i = 0; i < braces.size(); ++i) {
    index.emplace(braces[i], i);
  }
  std::vector<std::size_t> parent(braces.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < braces.size(); ++i) {
    for (auto const& f : auts) {
      Table image(n * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          image[f[a] * n + f[b]] = f[braces[i][a * n + b]];
        }
      }
      std::size_t const j = index.at(image);
      parent[find(parent, i)] = find(parent, j);
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < braces.size(); ++i) {
    roots += find(parent, i) == i ? 1 : 0;
  }
  return roots;
}

std::size_t count_braces(std::size_t n) {
  std::size_t total = 0;
  for (auto const& group : bracelab::abelian_groups(n)) {
    total += count_classes(group);
  }
  return total;
}

Element circle_power(bracelab::LeftBrace const& brace, Element a, std::size_t n) {
  Element x = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x = brace.circle(x, a);
  }
  return x;
}

bool isomorphic_by_bijection(bracelab::LeftBrace const& a, bracelab::LeftBrace const& b) {
  if (!(a.additive() == b.additive())) {
    return false;
  }
  std::size_t const n = a.order();
  for (auto const& f : automorphisms(a.additive())) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        ok = f[a.circle(x, y)] == b.circle(f[x], f[y]);
      }
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

}  // namespace oracle
