#include <doctest.h>

#include "bracelab/enumerate.hpp"
#include "bracelab/products.hpp"
#include "bracelab/solution.hpp"
#include "fixtures.hpp"

using namespace bracelab;
using fixtures::uniform;

namespace {

constexpr int draws = 300;

LeftBrace random_brace(std::size_t max_order = 16) {
  while (true) {
    std::size_t const n = 1 + uniform(max_order);
    auto const& census = fixtures::census(n);
    if (!census.empty()) {
      return census[uniform(census.size())].brace;
    }
  }
}

Element random_element(LeftBrace const& brace) { return static_cast<Element>(uniform(brace.order())); }

// The brace carried through a random additive automorphism.
LeftBrace random_relabel(LeftBrace const& brace) {
  auto const automorphisms = automorphism_group(brace.additive());
  auto const& f = automorphisms.elements()[uniform(automorphisms.order())];
  std::vector<Element> circle(brace.order() * brace.order());
  for (Element a = 0; a < brace.order(); ++a) {
    for (Element b = 0; b < brace.order(); ++b) {
      circle[f(a) * brace.order() + f(b)] = f(brace.circle(a, b));
    }
  }
  return validate_brace(brace.additive(), std::move(circle));
}

}  // namespace

TEST_CASE("lambda is an action by additive automorphisms") {
  for (int i = 0; i < draws; ++i) {
    auto const brace = random_brace();
    Element const a = random_element(brace);
    Element const b = random_element(brace);
    Element const c = random_element(brace);
    CHECK(brace.lambda(a, brace.add(b, c)) == brace.add(brace.lambda(a, b), brace.lambda(a, c)));
    CHECK(brace.lambda(brace.circle(a, b), c) == brace.lambda(a, brace.lambda(b, c)));
    CHECK(brace.dot(a, brace.add(b, c)) == brace.add(brace.dot(a, b), brace.dot(a, c)));
    CHECK(brace.circle(a, brace.circle_inverse(a)) == 0);
  }
}

TEST_CASE("isomorphism invariants survive relabelling") {
  for (int i = 0; i < draws / 3; ++i) {
    auto const brace = random_brace();
    auto const image = random_relabel(brace);
    CHECK(are_isomorphic(brace, image));
    auto const automorphisms = automorphism_group(brace.additive());
    CHECK(canonical_circle_table(brace, automorphisms) == canonical_circle_table(image, automorphisms));
    CHECK(socle(brace).size() == socle(image).size());
    CHECK(multipermutation_level(brace) == multipermutation_level(image));
    CHECK(adjoint_order_profile(brace) == adjoint_order_profile(image));
  }
}

TEST_CASE("socle and retraction") {
  for (int i = 0; i < draws / 3; ++i) {
    auto const brace = random_brace(24);
    auto const s = socle(brace);
    CHECK(s.is_ideal);
    CHECK(brace.order() % s.size() == 0);
    auto const r = retract_quotient(brace);
    CHECK(r.order() * s.size() == brace.order());
    auto const level = multipermutation_level(brace);
    auto const retracted = multipermutation_level(r);
    if (brace.order() > 1 && level) {
      REQUIRE(retracted.has_value());
      CHECK(*retracted + 1 == *level);
    }
  }
}

TEST_CASE("solutions of braces satisfy the braid relation") {
  for (int i = 0; i < draws / 3; ++i) {
    auto const brace = random_brace();
    auto const s = solution_from_brace(brace);
    for (int j = 0; j < 20; ++j) {
      Element const x = random_element(brace);
      Element const y = random_element(brace);
      Element const z = random_element(brace);
      auto const r12 = [&](std::array<Element, 3> t) {
        auto const [u, v] = s.apply(t[0], t[1]);
        return std::array<Element, 3>{u, v, t[2]};
      };
      auto const r23 = [&](std::array<Element, 3> t) {
        auto const [u, v] = s.apply(t[1], t[2]);
        return std::array<Element, 3>{t[0], u, v};
      };
      std::array<Element, 3> const t{x, y, z};
      CHECK(r12(r23(r12(t))) == r23(r12(r23(t))));
      auto const [u, v] = s.apply(x, y);
      CHECK(s.apply(u, v) == std::pair<Element, Element>{x, y});
    }
  }
}

TEST_CASE("direct sums of random braces") {
  for (int i = 0; i < draws / 10; ++i) {
    auto const n = random_brace(8);
    auto const h = random_brace(8);
    auto const product = semidirect(BraceAction::trivial(n, h));
    CHECK(product.order() == n.order() * h.order());
    auto const ln = analyze_level(n).chain_length;
    auto const lh = analyze_level(h).chain_length;
    auto const lp = analyze_level(product).chain_length;
    CHECK(lp.has_value() == (ln && lh));
    if (lp && ln && lh) {
      CHECK(*lp == std::max(*ln, *lh));
    }
  }
}
