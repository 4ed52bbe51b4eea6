#include "bracelab/brace.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bracelab/arith.hpp"

namespace bracelab {

namespace {

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

void check_order(std::size_t n, Limits const& limits) {
  if (n > limits.max_order) {
    throw ResourceLimit("brace order " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(limits.max_order));
  }
}

}  // namespace

LeftBrace::LeftBrace() : LeftBrace(FiniteAbelianGroup{}, std::vector<Element>{0}) {}

LeftBrace::LeftBrace(FiniteAbelianGroup additive, std::vector<Element> circle)
    : additive_(std::move(additive)), order_(additive_.order()), circle_(std::move(circle)) {
  std::size_t const n = order_;
  add_ = additive_.addition_table();
  neg_.resize(n);
  for (Element a = 0; a < n; ++a) {
    neg_[a] = additive_.neg(a);
  }
  dot_.resize(n * n);
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element const ab = circle_[a * n + b];
      dot_[a * n + b] = sub(sub(ab, a), b);
      if (ab == 0) {
        inverse_[a] = b;
      }
    }
  }
}

LeftBrace LeftBrace::trivial(FiniteAbelianGroup additive, Limits const& limits) {
  auto table = additive.addition_table();
  return validate_brace(std::move(additive), std::move(table), limits);
}

std::uint64_t LeftBrace::circle_order(Element a) const {
  std::uint64_t k = 1;
  for (Element x = a; x != 0; x = circle(x, a)) {
    ++k;
  }
  return k;
}

Element LeftBrace::circle_power(Element a, std::uint64_t n) const {
  n %= circle_order(a);
  Element x = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    x = circle(x, a);
  }
  return x;
}

Element LeftBrace::left_power(Element a, std::uint64_t n) const {
  if (n == 0) {
    throw DomainError("left powers start at exponent 1");
  }
  Element x = a;
  for (std::uint64_t i = 1; i < n && x != 0; ++i) {
    x = dot(a, x);
  }
  return x;
}

std::vector<Element> LeftBrace::e_sequence(Element a, Element b, std::size_t n) const {
  std::vector<Element> e(n + 1);
  e[0] = b;
  for (std::size_t i = 1; i <= n; ++i) {
    e[i] = dot(a, e[i - 1]);
  }
  return e;
}

Element LeftBrace::e_combination(Element a, Element b, std::span<std::int64_t const> coefficients) const {
  Element total = 0;
  Element e = b;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i > 0) {
      e = dot(a, e);
    }
    total = add(total, scale(e, coefficients[i]));
  }
  return total;
}

Permutation LeftBrace::lambda_map(Element a) const {
  std::vector<Element> images(order_);
  for (Element b = 0; b < order_; ++b) {
    images[b] = lambda(a, b);
  }
  return Permutation(std::move(images));
}

LeftBrace validate_brace(FiniteAbelianGroup additive, std::vector<Element> circle_table, Limits const& limits) {
  std::size_t const n = additive.order();
  check_order(n, limits);
  if (circle_table.size() != n * n) {
    throw BraceAxiomError(BraceViolation::malformed_table, {},
                          "circle table has " + std::to_string(circle_table.size()) + " entries, expected " +
                              std::to_string(n * n));
  }
  for (std::size_t i = 0; i < circle_table.size(); ++i) {
    if (circle_table[i] >= n) {
      auto const a = static_cast<Element>(i / n);
      auto const b = static_cast<Element>(i % n);
      throw BraceAxiomError(BraceViolation::malformed_table, {a, b, 0},
                            "circle table entry " + std::to_string(circle_table[i]) + " at (" +
                                std::to_string(a) + ", " + std::to_string(b) + ") is out of range");
    }
  }
  auto const circ = [&](Element a, Element b) { return circle_table[a * n + b]; };
  auto const add = additive.addition_table();
  auto const plus = [&](Element a, Element b) { return add[a * n + b]; };

  for (Element a = 0; a < n; ++a) {
    if (circ(0, a) != a || circ(a, 0) != a) {
      throw BraceAxiomError(BraceViolation::identity_not_zero, {a, 0, 0},
                            "0 is not a two-sided identity for o at element " + std::to_string(a));
    }
  }
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      found = circ(a, b) == 0 && circ(b, a) == 0;
    }
    if (!found) {
      throw BraceAxiomError(BraceViolation::missing_inverse, {a, 0, 0},
                            "element " + std::to_string(a) + " has no inverse for o");
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element const ab = circ(a, b);
      for (Element c = 0; c < n; ++c) {
        if (circ(ab, c) != circ(a, circ(b, c))) {
          throw BraceAxiomError(BraceViolation::not_associative, {a, b, c},
                                "o is not associative at " + triple(a, b, c));
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (plus(circ(a, plus(b, c)), a) != plus(circ(a, b), circ(a, c))) {
          throw BraceAxiomError(BraceViolation::compatibility, {a, b, c},
                                "a o (b + c) + a != a o b + a o c at " + triple(a, b, c));
        }
      }
    }
  }
  return LeftBrace(std::move(additive), std::move(circle_table));
}

LeftBrace brace_from_lambda(FiniteAbelianGroup additive, std::span<Element const> lambda_rows, Limits const& limits) {
  std::size_t const n = additive.order();
  check_order(n, limits);
  if (lambda_rows.size() != n * n) {
    throw BraceAxiomError(BraceViolation::malformed_table, {},
                          "lambda table has " + std::to_string(lambda_rows.size()) + " entries, expected " +
                              std::to_string(n * n));
  }
  std::vector<Element> circle(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element const image = lambda_rows[a * n + b];
      if (image >= n) {
        throw BraceAxiomError(BraceViolation::malformed_table, {a, b, 0},
                              "lambda table entry " + std::to_string(image) + " is out of range");
      }
      circle[a * n + b] = additive.add(a, image);
    }
  }
  return validate_brace(std::move(additive), std::move(circle), limits);
}

RelabeledBrace brace_from_tables(std::size_t size, std::span<Element const> add_table,
                                 std::span<Element const> circle_table, Element zero, Limits const& limits) {
  check_order(size, limits);
  AbelianTable table{size, zero, std::vector<Element>(add_table.begin(), add_table.end())};
  auto identified = identify_abelian(table);
  std::vector<Element> to_canonical(size);
  for (Element g = 0; g < size; ++g) {
    to_canonical[identified.image[g]] = g;
  }
  std::vector<Element> circle(size * size);
  for (Element g = 0; g < size; ++g) {
    for (Element h = 0; h < size; ++h) {
      circle[g * size + h] = to_canonical[circle_table[identified.image[g] * size + identified.image[h]]];
    }
  }
  return {validate_brace(std::move(identified.group), std::move(circle), limits), std::move(identified.image)};
}

RelabeledBrace canonical_presentation(LeftBrace const& brace, Limits const& limits) {
  if (brace.additive().is_canonical()) {
    std::vector<Element> labels(brace.order());
    std::iota(labels.begin(), labels.end(), Element{0});
    return {brace, std::move(labels)};
  }
  return brace_from_tables(brace.order(), brace.additive().addition_table(), brace.circle_table(), 0, limits);
}

bool BraceSubset::contains(Element e) const { return std::binary_search(members.begin(), members.end(), e); }

std::vector<Element> additive_span(LeftBrace const& brace, std::span<Element const> generators) {
  std::vector<bool> seen(brace.order(), false);
  std::vector<Element> elements{0};
  seen[0] = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Element g : generators) {
      Element const next = brace.add(elements[i], g);
      if (!seen[next]) {
        seen[next] = true;
        elements.push_back(next);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

BraceSubset socle(LeftBrace const& brace) {
  std::size_t const n = brace.order();
  BraceSubset result;
  for (Element a = 0; a < n; ++a) {
    bool annihilates = true;
    for (Element b = 0; b < n && annihilates; ++b) {
      annihilates = brace.dot(a, b) == 0;
    }
    if (annihilates) {
      result.members.push_back(a);
    }
  }
  for (Element s : result.members) {
    for (Element t : result.members) {
      if (!result.contains(brace.add(s, t))) {
        throw InternalError("socle is not closed under addition");
      }
    }
    for (Element a = 0; a < n; ++a) {
      Element const conjugate = brace.circle(brace.circle(a, s), brace.circle_inverse(a));
      if (!result.contains(conjugate) || !result.contains(brace.lambda(a, s))) {
        throw InternalError("socle is not an ideal at element " + std::to_string(a));
      }
    }
  }
  result.is_subgroup = true;
  result.is_ideal = true;
  return result;
}

LeftBrace quotient(LeftBrace const& brace, BraceSubset const& ideal, Limits const& limits) {
  std::size_t const n = brace.order();
  std::vector<Element> representative(n);
  for (Element x = 0; x < n; ++x) {
    Element best = x;
    for (Element s : ideal.members) {
      best = std::min(best, brace.add(x, s));
    }
    representative[x] = best;
  }
  std::vector<Element> reps(representative);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::size_t const k = reps.size();
  std::vector<Element> class_of(n);
  for (Element x = 0; x < n; ++x) {
    class_of[x] = static_cast<Element>(std::lower_bound(reps.begin(), reps.end(), representative[x]) - reps.begin());
  }
  std::vector<Element> add(k * k);
  std::vector<Element> circle(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      add[i * k + j] = class_of[brace.add(reps[i], reps[j])];
      circle[i * k + j] = class_of[brace.circle(reps[i], reps[j])];
    }
  }
  return brace_from_tables(k, add, circle, 0, limits).brace;
}

LeftBrace retract_quotient(LeftBrace const& brace, Limits const& limits) {
  return quotient(brace, socle(brace), limits);
}

LevelAnalysis analyze_level(LeftBrace const& brace, Limits const& limits) {
  LevelAnalysis result;

  LeftBrace current = brace;
  result.socle_tower.push_back(current.order());
  std::size_t retractions = 0;
  bool reached_point = current.order() == 1;
  while (!reached_point) {
    auto const soc = socle(current);
    if (soc.size() == 1) {
      break;
    }
    current = quotient(current, soc, limits);
    ++retractions;
    result.socle_tower.push_back(current.order());
    reached_point = current.order() == 1;
  }
  if (reached_point) {
    result.level = retractions;
  }

  std::size_t const n = brace.order();
  std::vector<Element> chain(n);
  std::iota(chain.begin(), chain.end(), Element{0});
  result.product_chain.push_back(n);
  for (std::size_t index = 1;; ++index) {
    if (chain.size() == 1) {
      result.chain_length = index;
      break;
    }
    std::vector<bool> is_product(n, false);
    for (Element x : chain) {
      for (Element a = 0; a < n; ++a) {
        is_product[brace.dot(x, a)] = true;
      }
    }
    std::vector<Element> products;
    for (Element e = 0; e < n; ++e) {
      if (is_product[e]) {
        products.push_back(e);
      }
    }
    auto next = additive_span(brace, products);
    if (next == chain) {
      break;
    }
    result.product_chain.push_back(next.size());
    chain = std::move(next);
  }

  if (result.level.has_value() != result.chain_length.has_value()) {
    throw InternalError("socle tower and product chain disagree on finiteness of the multipermutation level");
  }
  return result;
}

std::optional<std::size_t> multipermutation_level(LeftBrace const& brace, Limits const& limits) {
  return analyze_level(brace, limits).level;
}

std::vector<SylowComponent> sylow_decompose(LeftBrace const& brace, Limits const& limits) {
  std::size_t const n = brace.order();
  std::vector<SylowComponent> components;
  for (auto const& [p, e] : factorize(n)) {
    SylowComponent component;
    component.prime = p;
    component.exponent = e;
    for (Element a = 0; a < n; ++a) {
      auto const order = brace.additive_order(a);
      if (order == 1 || prime_base(order) == p) {
        component.members.push_back(a);
      }
    }
    std::size_t const size = component.members.size();
    if (size != ipow(p, e)) {
      throw InternalError("Sylow " + std::to_string(p) + "-subgroup has the wrong order");
    }
    std::vector<Element> local(n, static_cast<Element>(n));
    for (std::size_t i = 0; i < size; ++i) {
      local[component.members[i]] = static_cast<Element>(i);
    }
    std::vector<Element> add(size * size);
    std::vector<Element> circle(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        Element const s = local[brace.add(component.members[i], component.members[j])];
        Element const c = local[brace.circle(component.members[i], component.members[j])];
        if (s == n || c == n) {
          throw InternalError("Sylow " + std::to_string(p) + "-subgroup is not a sub-brace");
        }
        add[i * size + j] = s;
        circle[i * size + j] = c;
      }
    }
    try {
      auto relabeled = brace_from_tables(size, add, circle, 0, limits);
      component.brace = std::move(relabeled.brace);
      component.labels.resize(size);
      for (std::size_t g = 0; g < size; ++g) {
        component.labels[g] = component.members[relabeled.labels[g]];
      }
    } catch (BraceAxiomError const& error) {
      throw InternalError(std::string("Sylow sub-brace failed validation: ") + error.what());
    }
    components.push_back(std::move(component));
  }
  return components;
}

PermutationGroup adjoint_group(LeftBrace const& brace) {
  std::vector<Permutation> elements;
  elements.reserve(brace.order());
  for (Element a = 0; a < brace.order(); ++a) {
    std::vector<Element> images(brace.order());
    for (Element b = 0; b < brace.order(); ++b) {
      images[b] = brace.circle(a, b);
    }
    elements.emplace_back(std::move(images));
  }
  return PermutationGroup::from_closed_set(brace.order(), std::move(elements));
}

BraceClassification classify(LeftBrace const& brace) {
  std::size_t const n = brace.order();
  BraceClassification result;

  result.two_sided = true;
  for (Element a = 0; a < n && result.two_sided; ++a) {
    for (Element b = 0; b < n && result.two_sided; ++b) {
      Element const sum = brace.add(a, b);
      for (Element c = 0; c < n; ++c) {
        if (brace.dot(sum, c) != brace.add(brace.dot(a, c), brace.dot(b, c))) {
          result.two_sided = false;
          break;
        }
      }
    }
  }

  std::size_t nil_index = 1;
  for (Element a = 0; a < n; ++a) {
    std::size_t m = 1;
    Element x = a;
    while (x != 0 && m <= n + 1) {
      x = brace.dot(a, x);
      ++m;
    }
    if (x != 0) {
      nil_index = 0;
      break;
    }
    nil_index = std::max(nil_index, m);
  }
  if (nil_index != 0) {
    result.left_nil_index = nil_index;
  }

  result.adjoint_nilpotent = is_nilpotent_group(adjoint_group(brace));

  result.minus_rule = true;
  for (Element a = 0; a < n && result.minus_rule; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (brace.dot(brace.neg(a), b) != brace.neg(brace.dot(a, b))) {
        result.minus_rule = false;
        break;
      }
    }
  }

  if (result.two_sided) {
    std::vector<Element> power(n);
    std::iota(power.begin(), power.end(), Element{0});
    for (;;) {
      if (power.size() == 1) {
        result.ring_nilpotent = true;
        break;
      }
      std::vector<Element> products;
      for (Element x = 0; x < n; ++x) {
        for (Element y : power) {
          products.push_back(brace.dot(x, y));
        }
      }
      std::sort(products.begin(), products.end());
      products.erase(std::unique(products.begin(), products.end()), products.end());
      auto next = additive_span(brace, products);
      if (next == power) {
        result.ring_nilpotent = false;
        break;
      }
      power = std::move(next);
    }
  }
  return result;
}

}  // namespace bracelab
