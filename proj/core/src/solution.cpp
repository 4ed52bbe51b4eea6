#include "bracelab/solution.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace bracelab {

namespace {

std::string pair_text(Element x, Element y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

}  // namespace

Permutation Solution::sigma_map(Element x) const {
  return Permutation(std::vector<Element>(sigma_.begin() + x * size_, sigma_.begin() + (x + 1) * size_));
}

Solution validate_solution(std::size_t size, std::vector<Element> sigma, std::vector<Element> tau) {
  std::size_t const n = size;
  if (sigma.size() != n * n || tau.size() != n * n) {
    throw SolutionAxiomError(SolutionViolation::malformed_table, {},
                             "sigma/tau tables must have " + std::to_string(n * n) + " entries");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (sigma[i] >= n || tau[i] >= n) {
      throw SolutionAxiomError(SolutionViolation::malformed_table,
                               {static_cast<Element>(i / n), static_cast<Element>(i % n), 0},
                               "table entry out of range at " + pair_text(static_cast<Element>(i / n),
                                                                          static_cast<Element>(i % n)));
    }
  }

  std::vector<bool> seen(n);
  auto check_rows = [&](std::vector<Element> const& table, char const* name) {
    for (Element x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), false);
      for (Element y = 0; y < n; ++y) {
        Element const image = table[x * n + y];
        if (seen[image]) {
          throw SolutionAxiomError(SolutionViolation::degenerate, {x, y, 0},
                                   std::string(name) + "_" + std::to_string(x) + " is not a bijection (repeats " +
                                       std::to_string(image) + ")");
        }
        seen[image] = true;
      }
    }
  };
  check_rows(sigma, "sigma");
  check_rows(tau, "tau");

  auto const r = [&](Element x, Element y) { return std::pair{sigma[x * n + y], tau[y * n + x]}; };

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto const [u, v] = r(x, y);
      if (r(u, v) != std::pair{x, y}) {
        throw SolutionAxiomError(SolutionViolation::not_involutive, {x, y, 0},
                                 "r^2 moves " + pair_text(x, y));
      }
    }
  }

  // (r x id)(id x r)(r x id) == (id x r)(r x id)(id x r), applied right to left.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        auto [a1, b1] = r(x, y);
        Element c1 = z;
        std::tie(b1, c1) = r(b1, c1);
        std::tie(a1, b1) = r(a1, b1);

        Element a2 = x;
        auto [b2, c2] = r(y, z);
        std::tie(a2, b2) = r(a2, b2);
        std::tie(b2, c2) = r(b2, c2);

        if (a1 != a2 || b1 != b2 || c1 != c2) {
          throw SolutionAxiomError(SolutionViolation::braid, {x, y, z},
                                   "braid relation fails at (" + std::to_string(x) + ", " + std::to_string(y) +
                                       ", " + std::to_string(z) + ")");
        }
      }
    }
  }
  return Solution(n, std::move(sigma), std::move(tau));
}

Solution flip_solution(std::size_t size) {
  std::vector<Element> table(size * size);
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      table[x * size + y] = y;
    }
  }
  return validate_solution(size, table, table);
}

Solution solution_from_brace(LeftBrace const& brace) {
  std::size_t const n = brace.order();
  std::vector<Element> sigma(n * n);
  std::vector<Element> tau(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element const xy = brace.dot(x, y);
      Element const u = brace.add(xy, y);
      Element const z = brace.circle_inverse(u);
      Element const w = brace.add(brace.add(xy, x), y);
      Element const v = brace.add(brace.add(brace.dot(z, w), w), z);
      sigma[x * n + y] = u;
      tau[y * n + x] = v;
    }
  }
  try {
    return validate_solution(n, std::move(sigma), std::move(tau));
  } catch (SolutionAxiomError const& error) {
    throw InternalError(std::string("solution of a brace failed validation: ") + error.what());
  }
}

Solution retract_solution(Solution const& solution) {
  std::size_t const n = solution.size();
  std::vector<Element> class_of(n);
  std::vector<Element> representatives;
  for (Element x = 0; x < n; ++x) {
    auto const row = solution.sigma_table().subspan(x * n, n);
    bool matched = false;
    for (std::size_t c = 0; c < representatives.size() && !matched; ++c) {
      auto const other = solution.sigma_table().subspan(representatives[c] * n, n);
      if (std::equal(row.begin(), row.end(), other.begin())) {
        class_of[x] = static_cast<Element>(c);
        matched = true;
      }
    }
    if (!matched) {
      class_of[x] = static_cast<Element>(representatives.size());
      representatives.push_back(x);
    }
  }
  std::size_t const k = representatives.size();
  std::size_t constexpr unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> sigma(k * k, unset);
  std::vector<std::size_t> tau(k * k, unset);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      std::size_t const cx = class_of[x];
      std::size_t const cy = class_of[y];
      std::size_t const s = class_of[solution.sigma(x, y)];
      std::size_t const t = class_of[solution.tau(y, x)];
      auto& sigma_slot = sigma[cx * k + cy];
      auto& tau_slot = tau[cy * k + cx];
      if ((sigma_slot != unset && sigma_slot != s) || (tau_slot != unset && tau_slot != t)) {
        throw InternalError("retraction is not well defined at " + pair_text(x, y));
      }
      sigma_slot = s;
      tau_slot = t;
    }
  }
  return validate_solution(k, std::vector<Element>(sigma.begin(), sigma.end()),
                           std::vector<Element>(tau.begin(), tau.end()));
}

std::vector<std::size_t> retraction_tower(Solution const& solution) {
  std::vector<std::size_t> sizes{solution.size()};
  Solution current = solution;
  while (current.size() > 1) {
    Solution next = retract_solution(current);
    if (next.size() == current.size()) {
      break;
    }
    sizes.push_back(next.size());
    current = std::move(next);
  }
  return sizes;
}

std::optional<std::size_t> mpl_solution(Solution const& solution) {
  auto const tower = retraction_tower(solution);
  if (tower.back() > 1) {
    return std::nullopt;
  }
  return tower.size() - 1;
}

PermutationGroup permutation_group(Solution const& solution) {
  std::vector<Permutation> generators;
  generators.reserve(solution.size());
  for (Element x = 0; x < solution.size(); ++x) {
    generators.push_back(solution.sigma_map(x));
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return closure(solution.size(), generators);
}

std::size_t permutation_group_order(Solution const& solution) { return permutation_group(solution).order(); }

}  // namespace bracelab
