#include "bracelab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "bracelab/arith.hpp"

namespace bracelab {

namespace {

struct VectorHash {
  std::size_t operator()(std::vector<Element> const& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Element x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// Depth-first search for regular subgroups of Hol(A) = A x| Aut(A), acting on
// A by x -> t + f(x). A regular subgroup holds exactly one element moving 0 to
// each t; slot t stores it. At every step the least uncovered t is chosen, so
// every regular subgroup is reached along exactly one path.
class RegularSubgroupSearch {
 public:
  RegularSubgroupSearch(FiniteAbelianGroup const& group, PermutationGroup const& automorphisms, bool reverse)
      : n_(group.order()), add_(group.addition_table()), reverse_(reverse) {
    for (auto const& f : automorphisms.elements()) {
      auts_.emplace_back(f.images().begin(), f.images().end());
    }
    slots_.assign(n_ * n_, 0);
    filled_.assign(n_, false);
    build_admissible();
  }

  template <typename Visit>
  void run(Visit&& visit) {
    std::iota(slots_.begin(), slots_.begin() + n_, Element{0});
    filled_[0] = true;
    members_ = {0};
    if (n_ == 1) {
      visit(slots_);
      return;
    }
    auto roots = root_candidates();
    search(roots, visit);
  }

 private:
  std::vector<Element> holomorph(Element t, std::uint32_t f) const {
    std::vector<Element> g(n_);
    for (Element x = 0; x < n_; ++x) {
      g[x] = add_[t * n_ + auts_[f][x]];
    }
    return g;
  }

  // (t, f) is admissible when <(t, f)> acts semiregularly and has order
  // dividing n: the orbit of 0 has the same length as the element's order.
  void build_admissible() {
    admissible_.assign(n_, {});
    std::vector<Element> power(n_);
    for (Element t = 1; t < n_; ++t) {
      for (std::uint32_t f = 0; f < auts_.size(); ++f) {
        auto const g = holomorph(t, f);
        std::size_t length = 1;
        for (Element x = g[0]; x != 0; x = g[x]) {
          ++length;
        }
        if (n_ % length != 0) {
          continue;
        }
        std::iota(power.begin(), power.end(), Element{0});
        for (std::size_t i = 0; i < length; ++i) {
          for (Element x = 0; x < n_; ++x) {
            power[x] = g[power[x]];
          }
        }
        bool identity = true;
        for (Element x = 0; x < n_ && identity; ++x) {
          identity = power[x] == x;
        }
        if (identity) {
          admissible_[t].push_back(f);
        }
      }
    }
  }

  // Candidates for the element moving 0 to 1: one per orbit of the stabiliser
  // of 1 in Aut(A) acting by conjugation. Conjugating a regular subgroup by
  // such an automorphism gives an isomorphic brace.
  std::vector<std::uint32_t> root_candidates() const {
    auto const& candidates = admissible_[1];
    std::unordered_map<std::vector<Element>, std::uint32_t, VectorHash> index;
    for (std::uint32_t f = 0; f < auts_.size(); ++f) {
      index.emplace(auts_[f], f);
    }
    std::vector<std::size_t> stabiliser;
    for (std::size_t phi = 0; phi < auts_.size(); ++phi) {
      if (auts_[phi][1] == 1) {
        stabiliser.push_back(phi);
      }
    }
    std::vector<bool> admissible(auts_.size(), false);
    for (auto f : candidates) {
      admissible[f] = true;
    }
    std::vector<bool> covered(auts_.size(), false);
    std::vector<std::uint32_t> roots;
    std::vector<Element> conjugate(n_);
    std::vector<Element> inverse(n_);
    auto const visit_orbit = [&](std::uint32_t f) {
      for (auto phi : stabiliser) {
        auto const& p = auts_[phi];
        for (Element x = 0; x < n_; ++x) {
          inverse[p[x]] = x;
        }
        for (Element x = 0; x < n_; ++x) {
          conjugate[x] = p[auts_[f][inverse[x]]];
        }
        covered[index.at(conjugate)] = true;
      }
    };
    if (reverse_) {
      for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        if (!covered[*it]) {
          roots.push_back(*it);
          visit_orbit(*it);
        }
      }
    } else {
      for (auto f : candidates) {
        if (!covered[f]) {
          roots.push_back(f);
          visit_orbit(f);
        }
      }
    }
    return roots;
  }

  Element const* slot(Element t) const { return slots_.data() + t * n_; }

  // 1 inserted, 0 already present, -1 conflicting with the present element.
  int insert(std::vector<Element> const& g) {
    Element const t = g[0];
    Element* row = slots_.data() + t * n_;
    if (filled_[t]) {
      return std::equal(g.begin(), g.end(), row) ? 0 : -1;
    }
    std::copy(g.begin(), g.end(), row);
    filled_[t] = true;
    members_.push_back(t);
    return 1;
  }

  void rollback(std::size_t size) {
    for (std::size_t i = size; i < members_.size(); ++i) {
      filled_[members_[i]] = false;
    }
    members_.resize(size);
  }

  // Closes the current subgroup together with g. Returns false on a clash
  // (two elements moving 0 to the same point) or when the size does not
  // divide n; the state is rolled back in that case.
  bool extend_with(std::vector<Element> const& g) {
    std::size_t const start = members_.size();
    std::vector<Element> product(n_);
    auto const multiply = [&](Element const* e, std::vector<Element> const& s) {
      for (Element x = 0; x < n_; ++x) {
        product[x] = e[s[x]];
      }
      return insert(product) >= 0;
    };
    for (std::size_t i = 0; i < start; ++i) {
      if (!multiply(slot(members_[i]), g)) {
        rollback(start);
        return false;
      }
    }
    for (std::size_t i = start; i < members_.size(); ++i) {
      Element const* e = slot(members_[i]);
      for (auto const& s : generators_) {
        if (!multiply(e, s)) {
          rollback(start);
          return false;
        }
      }
      if (!multiply(slot(members_[i]), g)) {
        rollback(start);
        return false;
      }
    }
    if (n_ % members_.size() != 0) {
      rollback(start);
      return false;
    }
    return true;
  }

  template <typename Visit>
  void search(std::vector<std::uint32_t> const& candidates, Visit& visit) {
    Element t = 0;
    while (t < n_ && filled_[t]) {
      ++t;
    }
    if (t == n_) {
      visit(slots_);
      return;
    }
    auto const try_candidate = [&](std::uint32_t f) {
      auto g = holomorph(t, f);
      std::size_t const size = members_.size();
      if (!extend_with(g)) {
        return;
      }
      generators_.push_back(std::move(g));
      Element next = 0;
      while (next < n_ && filled_[next]) {
        ++next;
      }
      search(next < n_ ? admissible_[next] : admissible_[0], visit);
      generators_.pop_back();
      rollback(size);
    };
    if (reverse_) {
      for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        try_candidate(*it);
      }
    } else {
      for (auto f : candidates) {
        try_candidate(f);
      }
    }
  }

  std::size_t n_;
  std::vector<Element> add_;
  bool reverse_;
  std::vector<std::vector<Element>> auts_;
  std::vector<std::vector<std::uint32_t>> admissible_;
  std::vector<Element> slots_;
  std::vector<bool> filled_;
  std::vector<Element> members_;
  std::vector<std::vector<Element>> generators_;
};

void check_enumeration_bound(std::size_t n, EnumerateOptions const& options) {
  if (n == 0) {
    throw DomainError("brace order must be positive");
  }
  if (n > options.limits.max_order) {
    throw ResourceLimit("order " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(options.limits.max_order));
  }
  if (n > options.default_bound && !options.slow) {
    throw ResourceLimit("order " + std::to_string(n) + " exceeds the default enumeration bound " +
                        std::to_string(options.default_bound) + "; pass the slow flag to allow it");
  }
}

// Lex-least image of `table` under x -> phi(x), comparing against `best` and
// replacing it when smaller.
void improve_canonical(std::span<Element const> table, std::size_t n, std::vector<Element> const& phi,
                       std::vector<Element> const& phi_inverse, std::vector<Element>& best,
                       std::vector<Element>& scratch) {
  bool smaller = false;
  // Row 0 is the identity row in every image.
  for (std::size_t i = 1; i < n; ++i) {
    Element const pi = phi_inverse[i];
    for (std::size_t j = 0; j < n; ++j) {
      Element const value = phi[table[pi * n + phi_inverse[j]]];
      std::size_t const at = i * n + j;
      if (smaller) {
        scratch[at] = value;
      } else if (value < best[at]) {
        smaller = true;
        std::copy(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(at), scratch.begin());
        scratch[at] = value;
      } else if (value > best[at]) {
        return;
      }
    }
  }
  if (smaller) {
    best.swap(scratch);
  }
}

struct AutomorphismTables {
  std::vector<std::vector<Element>> forward;
  std::vector<std::vector<Element>> inverse;
};

AutomorphismTables tabulate(PermutationGroup const& automorphisms) {
  AutomorphismTables t;
  for (auto const& f : automorphisms.elements()) {
    t.forward.emplace_back(f.images().begin(), f.images().end());
    auto const inv = f.inverse();
    t.inverse.emplace_back(inv.images().begin(), inv.images().end());
  }
  return t;
}

std::vector<Element> canonical_table(std::span<Element const> table, std::size_t n, AutomorphismTables const& auts) {
  std::vector<Element> best(table.begin(), table.end());
  std::vector<Element> scratch(n * n);
  for (std::size_t k = 0; k < auts.forward.size(); ++k) {
    improve_canonical(table, n, auts.forward[k], auts.inverse[k], best, scratch);
  }
  return best;
}

}  // namespace

std::vector<Element> canonical_circle_table(LeftBrace const& brace, PermutationGroup const& automorphisms) {
  return canonical_table(brace.circle_table(), brace.order(), tabulate(automorphisms));
}

std::vector<LeftBrace> braces_on(FiniteAbelianGroup const& group, EnumerateOptions const& options,
                                 std::size_t* candidates) {
  check_enumeration_bound(group.order(), options);
  auto const automorphisms = automorphism_group(group, options.limits);
  auto const auts = tabulate(automorphisms);
  std::size_t const n = group.order();

  std::set<std::vector<Element>> classes;
  std::size_t visited = 0;
  RegularSubgroupSearch search(group, automorphisms, options.reverse_search);
  search.run([&](std::vector<Element> const& slots) {
    ++visited;
    // Slot t holds g_t with g_t(0) = t, so t o b = g_t(b).
    std::span<Element const> table(slots.data(), n * n);
    classes.insert(canonical_table(table, n, auts));
  });
  if (candidates != nullptr) {
    *candidates += visited;
  }

  std::vector<LeftBrace> result;
  result.reserve(classes.size());
  for (auto const& table : classes) {
    try {
      result.push_back(validate_brace(group, table, options.limits));
    } catch (BraceAxiomError const& error) {
      throw InternalError(std::string("regular subgroup produced an invalid brace: ") + error.what());
    }
  }
  return result;
}

std::vector<std::pair<std::uint64_t, std::size_t>> adjoint_order_profile(LeftBrace const& brace) {
  std::map<std::uint64_t, std::size_t> counts;
  for (Element a = 0; a < brace.order(); ++a) {
    ++counts[brace.circle_order(a)];
  }
  return {counts.begin(), counts.end()};
}

BraceCensus enumerate_braces(std::size_t n, EnumerateOptions const& options) {
  check_enumeration_bound(n, options);
  BraceCensus census;
  census.order = n;
  for (auto const& group : abelian_groups(n)) {
    for (auto& brace : braces_on(group, options, &census.candidates)) {
      auto profile = adjoint_order_profile(brace);
      census.classes.push_back({std::move(brace), std::move(profile)});
    }
  }
  return census;
}

namespace {

std::size_t socle_size(LeftBrace const& brace) { return socle(brace).size(); }

}  // namespace

bool are_isomorphic(LeftBrace const& a, LeftBrace const& b, Limits const& limits) {
  if (a.order() != b.order()) {
    return false;
  }
  auto const ca = canonical_presentation(a, limits);
  auto const cb = canonical_presentation(b, limits);
  LeftBrace const& x = ca.brace;
  LeftBrace const& y = cb.brace;
  if (!(x.additive() == y.additive())) {
    return false;
  }
  if (socle_size(x) != socle_size(y) || adjoint_order_profile(x) != adjoint_order_profile(y)) {
    return false;
  }
  std::size_t const n = x.order();
  auto const automorphisms = automorphism_group(x.additive(), limits);
  for (auto const& phi : automorphisms.elements()) {
    bool intertwines = true;
    for (Element s = 0; s < n && intertwines; ++s) {
      for (Element t = 0; t < n; ++t) {
        if (phi(x.circle(s, t)) != y.circle(phi(s), phi(t))) {
          intertwines = false;
          break;
        }
      }
    }
    if (intertwines) {
      return true;
    }
  }
  return false;
}

}  // namespace bracelab
