#include "bracelab/cli/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bracelab/cli/documents.hpp"
#include "bracelab/enumerate.hpp"
#include "bracelab/products.hpp"
#include "bracelab/solution.hpp"
#include "bracelab/theorems.hpp"

namespace bracelab::cli {

namespace {

namespace fs = std::filesystem;

// Verification orders beyond the default bound, enabled by --slow.
constexpr std::size_t slow_orders[] = {36, 45};

struct Options {
  std::string file;
  std::string second_file;
  std::string action_file;
  bool json = false;
  bool tower = false;
  bool slow = false;
  std::size_t order = 0;
  std::optional<std::string> out_dir;
};

class FileError : public Error {
 public:
  using Error::Error;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError("cannot read " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Attaches the file name to parse errors.
template <typename F>
auto load(std::string const& path, F&& parse) {
  std::string const text = read_file(path);
  try {
    return parse(text);
  } catch (ParseError const& error) {
    throw error.in(path);
  }
}

LeftBrace load_brace(std::string const& path, Limits const& limits) {
  return to_brace(load(path, parse_brace_document), limits);
}

Solution load_solution(std::string const& path) { return to_solution(load(path, parse_solution_document)); }

template <typename T>
nlohmann::ordered_json nullable(std::optional<T> const& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

std::string join(std::vector<std::size_t> const& values, std::string_view separator) {
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    joined += (i == 0 ? "" : std::string(separator)) + std::to_string(values[i]);
  }
  return joined;
}

int cmd_validate(Options const& options, Limits const& limits, std::ostream& out) {
  auto const brace = load_brace(options.file, limits);
  out << "valid brace of order " << brace.order() << "\n";
  return exit_ok;
}

int cmd_analyze(Options const& options, Limits const& limits, std::ostream& out) {
  auto const brace = load_brace(options.file, limits);
  auto const level = multipermutation_level(brace, limits);
  auto const flags = classify(brace);
  std::vector<std::size_t> factors(brace.additive().factors().begin(), brace.additive().factors().end());
  std::vector<std::size_t> sylow_orders;
  for (auto const& component : sylow_decompose(brace, limits)) {
    sylow_orders.push_back(component.members.size());
  }
  std::size_t const socle_size = socle(brace).size();

  if (options.json) {
    nlohmann::ordered_json report;
    report["order"] = brace.order();
    report["invariant_factors"] = factors;
    report["socle"] = socle_size;
    report["multipermutation_level"] = nullable(level);
    report["sylow_orders"] = sylow_orders;
    report["two_sided"] = flags.two_sided;
    report["left_nil_index"] = nullable(flags.left_nil_index);
    report["adjoint_nilpotent"] = flags.adjoint_nilpotent;
    report["minus_rule"] = flags.minus_rule;
    report["ring_nilpotent"] = nullable(flags.ring_nilpotent);
    out << report.dump(2) << "\n";
    return exit_ok;
  }
  auto const yes_no = [](bool value) { return value ? "yes" : "no"; };
  out << "order: " << brace.order() << "\n";
  out << "invariant factors: [" << join(factors, ", ") << "]\n";
  out << "socle: " << socle_size << "\n";
  out << "multipermutation level: " << (level ? std::to_string(*level) : "infinite") << "\n";
  out << "sylow orders: [" << join(sylow_orders, ", ") << "]\n";
  out << "two-sided: " << yes_no(flags.two_sided) << "\n";
  out << "left nil index: " << (flags.left_nil_index ? std::to_string(*flags.left_nil_index) : "none") << "\n";
  out << "adjoint group nilpotent: " << yes_no(flags.adjoint_nilpotent) << "\n";
  out << "minus rule: " << yes_no(flags.minus_rule) << "\n";
  out << "ring nilpotent: " << (flags.ring_nilpotent ? yes_no(*flags.ring_nilpotent) : "n/a") << "\n";
  return exit_ok;
}

int cmd_enumerate(Options const& options, Limits const& limits, std::ostream& out) {
  EnumerateOptions enumerate;
  enumerate.slow = options.slow;
  enumerate.limits = limits;
  auto const census = enumerate_braces(options.order, enumerate);
  if (options.out_dir) {
    fs::path const dir(*options.out_dir);
    fs::create_directories(dir);
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
      std::ostringstream name;
      name << "order" << census.order << "-" << std::setw(4) << std::setfill('0') << (i + 1) << ".json";
      std::ofstream file(dir / name.str(), std::ios::binary);
      file << serialize(to_document(census.classes[i].brace));
      if (!file) {
        throw FileError("cannot write " + (dir / name.str()).string());
      }
    }
  }
  out << "order " << census.order << ": " << census.classes.size() << " classes\n";
  return exit_ok;
}

int cmd_solution_from_brace(Options const& options, Limits const& limits, std::ostream& out) {
  out << serialize(to_document(solution_from_brace(load_brace(options.file, limits))));
  return exit_ok;
}

int cmd_solution_check(Options const& options, std::ostream& out) {
  auto const solution = load_solution(options.file);
  out << "valid solution of size " << solution.size() << "\n";
  return exit_ok;
}

int cmd_solution_retract(Options const& options, std::ostream& out) {
  auto const solution = load_solution(options.file);
  if (!options.tower) {
    out << serialize(to_document(retract_solution(solution)));
    return exit_ok;
  }
  auto const tower = retraction_tower(solution);
  out << join(tower, " → ") << "\n";
  if (tower.back() > 1) {
    out << "not a multipermutation solution\n";
  }
  return exit_ok;
}

int cmd_semidirect(Options const& options, Limits const& limits, std::ostream& out) {
  auto const target = load_brace(options.file, limits);
  auto const acting = load_brace(options.second_file, limits);
  auto const action = to_action(load(options.action_file, parse_action_document), target, acting);
  out << serialize(to_document(semidirect(action, limits)));
  return exit_ok;
}

int cmd_wreath(Options const& options, Limits const& limits, std::ostream& out) {
  auto const base = load_brace(options.file, limits);
  auto const top = load_brace(options.second_file, limits);
  out << serialize(to_document(wreath(base, top, limits)));
  return exit_ok;
}

int cmd_verify(Options const& options, Limits const& limits, std::ostream& out) {
  EnumerateOptions enumerate;
  enumerate.slow = options.slow;
  enumerate.limits = limits;
  if (options.order > enumerate.default_bound && !options.slow) {
    throw ResourceLimit("verification above order " + std::to_string(enumerate.default_bound) + " needs --slow");
  }
  std::vector<std::size_t> orders;
  for (std::size_t n = 1; n <= std::min(options.order, enumerate.default_bound); ++n) {
    orders.push_back(n);
  }
  if (options.slow) {
    for (std::size_t n : slow_orders) {
      if (n <= options.order) {
        orders.push_back(n);
      }
    }
  }

  std::size_t total_failures = 0;
  std::size_t total_braces = 0;
  for (std::size_t n : orders) {
    auto const census = enumerate_braces(n, enumerate);
    std::size_t reports = 0;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
      std::string const subject = "order " + std::to_string(n) + " #" + std::to_string(i + 1);
      for (auto const& report : run_all_checks(census.classes[i].brace, subject)) {
        ++reports;
        if (report.verdict == Verdict::fail) {
          ++failures;
          out << "FAIL " << report.check << " [" << report.subject << "]: " << report.witness << "\n";
        }
      }
    }
    out << "order " << n << ": " << census.classes.size() << " classes, " << reports << " checks, " << failures
        << " failures\n";
    total_failures += failures;
    total_braces += census.classes.size();
  }
  out << "verified " << total_braces << " braces over " << orders.size() << " orders: " << total_failures
      << " failures\n";
  return total_failures == 0 ? exit_ok : exit_check_failed;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Finite left braces and set-theoretic solutions of the Yang-Baxter equation", "bracelab"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check a brace file against the brace axioms");
  validate->add_option("brace", options.file, "Brace document")->required();

  auto* analyze = app.add_subcommand("analyze", "Report structural invariants of a brace");
  analyze->add_option("brace", options.file, "Brace document")->required();
  analyze->add_flag("--json", options.json, "Emit JSON");

  auto* enumerate = app.add_subcommand("enumerate", "List all braces of an order up to isomorphism");
  enumerate->add_option("--order", options.order, "Brace order")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--slow", options.slow, "Allow orders above the default bound");
  enumerate->add_option("--out", options.out_dir, "Write one brace document per class into this directory");

  auto* solution = app.add_subcommand("solution", "Set-theoretic solutions");
  solution->require_subcommand(1);
  auto* from_brace = solution->add_subcommand("from-brace", "Solution associated with a brace");
  from_brace->add_option("brace", options.file, "Brace document")->required();
  auto* check = solution->add_subcommand("check", "Validate a solution file");
  check->add_option("solution", options.file, "Solution document")->required();
  auto* retract = solution->add_subcommand("retract", "Retract a solution");
  retract->add_option("solution", options.file, "Solution document")->required();
  retract->add_flag("--tower", options.tower, "Print the sizes of the full retraction tower");

  auto* product = app.add_subcommand("product", "Brace products");
  product->require_subcommand(1);
  auto* semidirect_cmd = product->add_subcommand("semidirect", "Semidirect product N x| H");
  semidirect_cmd->add_option("N", options.file, "Normal factor")->required();
  semidirect_cmd->add_option("H", options.second_file, "Acting factor")->required();
  semidirect_cmd->add_option("--action", options.action_file, "Action document")->required();
  auto* wreath_cmd = product->add_subcommand("wreath", "Wreath product G wr H");
  wreath_cmd->add_option("G", options.file, "Base brace")->required();
  wreath_cmd->add_option("H", options.second_file, "Top brace")->required();

  auto* verify = app.add_subcommand("verify", "Run the theorem checks over every census brace");
  verify->add_option("--order-max", options.order, "Largest order")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--slow", options.slow, "Include orders 36 and 45");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::ParseError const& error) {
    return app.exit(error, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    Limits const limits = Limits::from_environment();
    if (validate->parsed()) {
      return cmd_validate(options, limits, out);
    }
    if (analyze->parsed()) {
      return cmd_analyze(options, limits, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(options, limits, out);
    }
    if (from_brace->parsed()) {
      return cmd_solution_from_brace(options, limits, out);
    }
    if (check->parsed()) {
      return cmd_solution_check(options, out);
    }
    if (retract->parsed()) {
      return cmd_solution_retract(options, out);
    }
    if (semidirect_cmd->parsed()) {
      return cmd_semidirect(options, limits, out);
    }
    if (wreath_cmd->parsed()) {
      return cmd_wreath(options, limits, out);
    }
    if (verify->parsed()) {
      return cmd_verify(options, limits, out);
    }
  } catch (ParseError const& error) {
    err << "bracelab: parse error: " << error.what() << "\n";
    return exit_usage;
  } catch (FileError const& error) {
    err << "bracelab: " << error.what() << "\n";
    return exit_usage;
  } catch (InvalidPresentation const& error) {
    err << "bracelab: " << error.what() << "\n";
    return exit_usage;
  } catch (ResourceLimit const& error) {
    err << "bracelab: resource limit: " << error.what() << "\n";
    return exit_resource_limit;
  } catch (BraceAxiomError const& error) {
    err << "bracelab: not a brace: " << error.what() << "\n";
    return exit_check_failed;
  } catch (SolutionAxiomError const& error) {
    err << "bracelab: not a solution: " << error.what() << "\n";
    return exit_check_failed;
  } catch (Error const& error) {
    err << "bracelab: " << error.what() << "\n";
    return exit_check_failed;
  } catch (std::filesystem::filesystem_error const& error) {
    err << "bracelab: " << error.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace bracelab::cli
