#include "bracelab/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include "bracelab/arith.hpp"
#include "bracelab/fq_poly.hpp"

namespace bracelab {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::hypothesis_not_met:
      return "hypothesis-not-met";
  }
  return "unknown";
}

namespace {

CheckReport make_report(std::string check, std::string subject) {
  CheckReport report;
  report.check = std::move(check);
  report.subject = std::move(subject);
  return report;
}

CheckReport failed(CheckReport report, std::string witness) {
  report.verdict = Verdict::fail;
  report.witness = std::move(witness);
  return report;
}

template <typename... Parts>
std::string text(Parts const&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// Largest j with some o-order in the component equal to p^j.
unsigned adjoint_exponent(LeftBrace const& brace, SylowComponent const& component) {
  std::uint64_t largest = 1;
  for (Element a : component.members) {
    largest = std::max(largest, brace.circle_order(a));
  }
  return valuation(component.prime, largest);
}

bool all_products_vanish(LeftBrace const& brace, std::span<Element const> left, std::span<Element const> right,
                         std::string& witness) {
  for (Element a : left) {
    for (Element b : right) {
      if (brace.dot(a, b) != 0) {
        witness = text("a=", a, " b=", b, " a.b=", brace.dot(a, b));
        return false;
      }
    }
  }
  return true;
}

}  // namespace

CheckReport check_sylow_annihilation(LeftBrace const& brace, std::string subject) {
  auto report = make_report("sylow_annihilation", std::move(subject));
  auto const components = sylow_decompose(brace);
  if (components.size() < 2) {
    report.notes.push_back("fewer than two Sylow components");
    return report;
  }
  bool literal_reading_holds = true;
  for (auto const& P : components) {
    for (auto const& Q : components) {
      if (P.prime == Q.prime) {
        continue;
      }
      std::uint64_t const p = P.prime;
      std::uint64_t const q = Q.prime;
      unsigned const m = Q.exponent;
      unsigned const k_star = max_divisibility_exponent(p, q, m);

      if (k_star == 0) {
        std::string witness;
        if (!all_products_vanish(brace, P.members, Q.members, witness)) {
          return failed(std::move(report), text("A_", p, " . A_", q, " != 0 at ", witness));
        }
      }

      unsigned const j = adjoint_exponent(brace, P);
      unsigned const k = std::min(j, k_star);
      unsigned const k_poly = annihilator_exponent(static_cast<std::uint32_t>(p), j, static_cast<std::uint32_t>(q), m).k;
      if (k_poly != k) {
        return failed(std::move(report), text("exponent mismatch for p=", p, " q=", q, ": divisibility gives ", k,
                                              ", gcd gives ", k_poly));
      }
      std::uint64_t const power = ipow(p, k);
      for (Element a : P.members) {
        Element const a_power = brace.circle_power(a, power);
        for (Element b : Q.members) {
          if (brace.dot(a_power, b) != 0) {
            return failed(std::move(report), text("a^(o ", power, ") . b != 0 with a=", a, " in A_", p, ", b=", b,
                                                  " in A_", q));
          }
        }
      }
      for (Element a = 0; a < brace.order() && literal_reading_holds; ++a) {
        Element const a_power = brace.circle_power(a, power);
        for (Element b : Q.members) {
          if (brace.dot(a_power, b) != 0) {
            literal_reading_holds = false;
            break;
          }
        }
      }
      report.notes.push_back(text("p=", p, " q=", q, " m=", m, " k=", k));
    }
  }
  report.notes.push_back(text("all-a reading ", literal_reading_holds ? "holds" : "does not hold"));
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_cubefree(LeftBrace const& brace, std::string subject) {
  auto report = make_report("cubefree_socle", std::move(subject));
  if (!is_cube_free(brace.order())) {
    return report;
  }
  if (brace.order() > 1 && socle(brace).size() == 1) {
    return failed(std::move(report), "socle is zero");
  }
  if (!multipermutation_level(brace)) {
    return failed(std::move(report), "multipermutation level is infinite");
  }
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_level_criteria(LeftBrace const& brace, std::string subject) {
  auto report = make_report("level_criteria", std::move(subject));
  auto const components = sylow_decompose(brace);
  if (components.empty()) {
    return report;
  }
  auto const divides_some = [](std::uint64_t p, std::uint64_t r, unsigned up_to) {
    std::uint64_t power = 1;
    for (unsigned i = 1; i <= up_to; ++i) {
      power *= r;
      if ((power - 1) % p == 0) {
        return true;
      }
    }
    return false;
  };

  bool applied = false;
  bool const socle_nonzero = socle(brace).size() > 1;
  auto const level = multipermutation_level(brace);

  // A Sylow component with nonzero socle whose prime divides no p_j^i - 1.
  for (auto const& candidate : components) {
    bool coprime = std::none_of(components.begin(), components.end(), [&](SylowComponent const& other) {
      return divides_some(candidate.prime, other.prime, other.exponent);
    });
    if (coprime && socle(candidate.brace).size() > 1) {
      applied = true;
      report.notes.push_back(text("socle criterion via p=", candidate.prime));
      if (!socle_nonzero) {
        return failed(std::move(report), text("socle is zero although A_", candidate.prime, " qualifies"));
      }
      break;
    }
  }

  // An ordering p_1, ..., p_n with p_i dividing no p_k^t - 1 (k < i, t <= a_k)
  // and every Sylow component of finite level.
  std::vector<std::size_t> order(components.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  bool ordering_found = false;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i) {
      for (std::size_t k = 0; k < i && ok; ++k) {
        auto const& pi = components[order[i]];
        auto const& pk = components[order[k]];
        ok = !divides_some(pi.prime, pk.prime, pk.exponent);
      }
    }
    ordering_found = ok;
  } while (!ordering_found && std::next_permutation(order.begin(), order.end()));
  bool const components_finite = std::all_of(components.begin(), components.end(), [](SylowComponent const& c) {
    return multipermutation_level(c.brace).has_value();
  });
  if (ordering_found && components_finite) {
    applied = true;
    report.notes.push_back("ordering criterion applies");
    if (!level) {
      return failed(std::move(report), "level is infinite although the prime ordering criterion holds");
    }
  }

  // Cyclic Sylow components with vanishing self-products.
  bool const cyclic_zero = std::all_of(components.begin(), components.end(), [](SylowComponent const& c) {
    if (!c.brace.additive().is_cyclic()) {
      return false;
    }
    for (Element a = 0; a < c.brace.order(); ++a) {
      for (Element b = 0; b < c.brace.order(); ++b) {
        if (c.brace.dot(a, b) != 0) {
          return false;
        }
      }
    }
    return true;
  });
  if (cyclic_zero) {
    applied = true;
    report.notes.push_back("cyclic trivial-component criterion applies");
    if (!level) {
      return failed(std::move(report), "level is infinite although every Sylow component is cyclic and trivial");
    }
  }

  report.verdict = applied ? Verdict::pass : Verdict::hypothesis_not_met;
  return report;
}

CheckReport check_nil_equivalence(LeftBrace const& brace, std::string subject) {
  auto report = make_report("nil_equivalence", std::move(subject));
  auto const flags = classify(brace);
  if (flags.adjoint_nilpotent != flags.is_left_nil()) {
    return failed(std::move(report), text("adjoint group nilpotent=", flags.adjoint_nilpotent,
                                          " but uniform vanishing left powers=", flags.is_left_nil()));
  }
  std::size_t const n = brace.order();
  auto const components = sylow_decompose(brace);
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (i == j) {
        continue;
      }
      for (Element a : components[i].members) {
        for (Element b : components[j].members) {
          Element const s = brace.add(a, b);
          Element x = s;
          for (std::size_t power = 1; power <= n + 1 && x != 0; ++power) {
            x = brace.dot(s, x);
          }
          if (x == 0 && (brace.dot(a, b) != 0 || brace.dot(b, a) != 0)) {
            return failed(std::move(report), text("(a+b) has a vanishing left power but a.b or b.a is nonzero at a=",
                                                  a, " b=", b));
          }
        }
      }
    }
  }
  report.notes.push_back(flags.adjoint_nilpotent ? "adjoint nilpotent" : "adjoint not nilpotent");
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_odd_minus_rule(LeftBrace const& brace, std::string subject) {
  auto report = make_report("odd_minus_rule", std::move(subject));
  std::size_t const n = brace.order();

  // Observation only: does (a.a).b = a.(a.b) hold?
  bool square_associative = true;
  for (Element a = 0; a < n && square_associative; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (brace.dot(brace.dot(a, a), b) != brace.dot(a, brace.dot(a, b))) {
        square_associative = false;
        break;
      }
    }
  }
  report.notes.push_back(text("(a.a).b = a.(a.b) ", square_associative ? "holds" : "does not hold"));

  auto const flags = classify(brace);
  if (n % 2 == 0 || !flags.minus_rule) {
    return report;
  }
  if (!flags.two_sided) {
    return failed(std::move(report), "minus rule holds but the brace is not two-sided");
  }
  if (!flags.ring_nilpotent.value_or(false)) {
    return failed(std::move(report), "two-sided but the ring is not nilpotent");
  }
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_binomial_identities(LeftBrace const& brace, std::string subject) {
  auto report = make_report("binomial_identities", std::move(subject));
  std::size_t const n = brace.order();
  std::uint64_t const modulus = brace.additive().exponent();

  std::vector<std::vector<std::uint64_t>> binomials(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    binomials[k] = binomial_row_mod(k, modulus);
  }
  auto const combination = [&](std::span<Element const> terms, std::size_t k) {
    Element total = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      total = brace.add(total, brace.scale(terms[i], static_cast<std::int64_t>(binomials[k][i])));
    }
    return total;
  };

  for (Element a = 0; a < n; ++a) {
    // left_powers[i] = a^i for i >= 1.
    std::vector<Element> left_powers(n + 1, 0);
    left_powers[1] = a;
    for (std::size_t i = 2; i <= n; ++i) {
      left_powers[i] = brace.dot(a, left_powers[i - 1]);
    }
    Element circle_power = 0;
    std::vector<Element> circle_powers(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
      circle_power = brace.circle(circle_power, a);
      circle_powers[k] = circle_power;
      if (combination(left_powers, k) != circle_power) {
        return failed(std::move(report), text("a^(o ", k, ") != sum C(", k, ",i) a^i at a=", a));
      }
    }
    for (Element b = 0; b < n; ++b) {
      auto const e = brace.e_sequence(a, b, n);
      for (std::size_t k = 1; k <= n; ++k) {
        if (brace.dot(circle_powers[k], b) != combination(e, k)) {
          return failed(std::move(report), text("a^(o ", k, ") . b != sum C(", k, ",i) e_i at a=", a, " b=", b));
        }
      }
    }
  }

  // Vanishing criterion for prime-power exponents, a, b nonzero.
  for (auto const& [p, e] : factorize(n)) {
    for (std::uint64_t pj = p; pj <= n; pj *= p) {
      for (Element a = 1; a < n; ++a) {
        Element const a_power = brace.circle_power(a, pj);
        for (Element b = 1; b < n; ++b) {
          auto const seq = brace.e_sequence(a, b, pj);
          bool const lhs = brace.dot(a_power, b) == 0;
          bool const rhs = combination(seq, pj) == 0;
          if (lhs != rhs) {
            return failed(std::move(report), text("vanishing criterion differs for p^j=", pj, " a=", a, " b=", b));
          }
        }
      }
    }
  }

  // a of p-power o-order, b of q-power additive order, p != q.
  for (Element a = 1; a < n; ++a) {
    std::uint64_t const p = prime_base(brace.circle_order(a));
    if (p == 0) {
      continue;
    }
    for (Element b = 1; b < n; ++b) {
      std::uint64_t const q = prime_base(brace.additive_order(b));
      if (q == 0 || q == p) {
        continue;
      }
      if (brace.dot(a, brace.dot(a, b)) == 0 && brace.dot(a, b) != 0) {
        return failed(std::move(report), text("a.(a.b) = 0 but a.b != 0 at a=", a, " b=", b));
      }
    }
  }

  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_semidirect_levels(LeftBrace const& target, LeftBrace const& acting, LeftBrace const& product,
                                    std::string subject) {
  auto report = make_report("semidirect_levels", std::move(subject));
  auto const n = analyze_level(target);
  auto const h = analyze_level(acting);
  auto const a = analyze_level(product);
  bool const factors_finite = n.chain_length && h.chain_length;
  if (a.chain_length.has_value() != factors_finite) {
    return failed(std::move(report), text("product level finite=", a.chain_length.has_value(),
                                          " but factor levels finite=", factors_finite));
  }
  if (factors_finite) {
    std::size_t const bound = *h.chain_length + *n.chain_length;
    if (*a.chain_length > bound) {
      return failed(std::move(report), text("A^(", bound, ") != 0; the chain vanishes at ", *a.chain_length));
    }
    report.notes.push_back(text("chain lengths N=", *n.chain_length, " H=", *h.chain_length,
                                " product=", *a.chain_length));
  }
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_wreath_level(LeftBrace const& base, LeftBrace const& top, LeftBrace const& product,
                               std::string subject) {
  auto report = make_report("wreath_level", std::move(subject));
  if (!multipermutation_level(base) || !multipermutation_level(top)) {
    return report;
  }
  if (!multipermutation_level(product)) {
    return failed(std::move(report), "wreath product of finite-level braces has infinite level");
  }
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_solution_cubefree(Solution const& solution, std::string subject) {
  auto report = make_report("solution_cubefree", std::move(subject));
  std::size_t const group_order = permutation_group_order(solution);
  if (!is_cube_free(group_order)) {
    return report;
  }
  if (!mpl_solution(solution)) {
    return failed(std::move(report), text("permutation group of order ", group_order,
                                          " is cube-free but the retraction tower stalls"));
  }
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_solution_correspondence(LeftBrace const& brace, std::string subject) {
  auto report = make_report("solution_correspondence", std::move(subject));
  std::optional<Solution> solution;
  try {
    solution = solution_from_brace(brace);
  } catch (InternalError const& error) {
    return failed(std::move(report), error.what());
  }
  bool const brace_finite = multipermutation_level(brace).has_value();
  bool const solution_finite = mpl_solution(*solution).has_value();
  if (brace_finite != solution_finite) {
    return failed(std::move(report), text("brace level finite=", brace_finite, " but solution level finite=",
                                          solution_finite));
  }
  report.verdict = Verdict::pass;
  return report;
}

std::vector<CheckReport> run_all_checks(LeftBrace const& brace, std::string const& subject) {
  std::vector<CheckReport> reports{
      check_sylow_annihilation(brace, subject), check_cubefree(brace, subject),
      check_level_criteria(brace, subject),     check_nil_equivalence(brace, subject),
      check_odd_minus_rule(brace, subject),     check_binomial_identities(brace, subject),
      check_solution_correspondence(brace, subject),
  };
  if (reports.back().verdict == Verdict::pass) {
    reports.push_back(check_solution_cubefree(solution_from_brace(brace), subject));
  }
  return reports;
}

std::vector<CheckReport> run_suite(std::span<std::pair<std::string, LeftBrace> const> braces) {
  std::vector<CheckReport> reports;
  for (auto const& [name, brace] : braces) {
    auto batch = run_all_checks(brace, name);
    reports.insert(reports.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  std::stable_sort(reports.begin(), reports.end(), [](CheckReport const& a, CheckReport const& b) {
    return std::tie(a.subject, a.check) < std::tie(b.subject, b.check);
  });
  return reports;
}

std::size_t count_failures(std::span<CheckReport const> reports) {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(),
                                                [](CheckReport const& r) { return r.verdict == Verdict::fail; }));
}

}  // namespace bracelab
