#ifndef BRACELAB_CLI_DOCUMENTS_HPP_
#define BRACELAB_CLI_DOCUMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/limits.hpp"
#include "bracelab/products.hpp"
#include "bracelab/solution.hpp"

// Text formats for braces, solutions and actions. Documents are JSON with a
// fixed key order; element indices follow the mixed-radix encoding of the
// additive group. serialize(parse(text)) reproduces canonical text exactly.

namespace bracelab::cli {

// Bad document text. `line` and `column` are 1-based for syntax errors and 0
// when the problem is with a field's value; `field` is a JSON path such as
// table[2][1].
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string field, std::string detail, std::string source = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& field() const noexcept { return field_; }
  std::string const& detail() const noexcept { return detail_; }

  // The same error, attributed to a named source such as a file path.
  ParseError in(std::string source) const;

 private:
  std::size_t line_;
  std::size_t column_;
  std::string field_;
  std::string detail_;
};

enum class TableKind { circle_table, lambda_table };

struct BraceDocument {
  std::size_t order = 0;
  std::vector<std::uint32_t> invariant_factors;
  TableKind operation = TableKind::circle_table;
  std::vector<std::vector<Element>> table;
};

struct SolutionDocument {
  std::size_t size = 0;
  std::vector<std::vector<Element>> sigma;
  std::vector<std::vector<Element>> tau;
};

// images[h] is the automorphism of the target attached to h.
struct ActionDocument {
  std::vector<std::vector<Element>> images;
};

BraceDocument parse_brace_document(std::string_view text);
SolutionDocument parse_solution_document(std::string_view text);
ActionDocument parse_action_document(std::string_view text);

std::string serialize(BraceDocument const& document);
std::string serialize(SolutionDocument const& document);
std::string serialize(ActionDocument const& document);

// Validates against the brace axioms; lambda tables are converted first.
LeftBrace to_brace(BraceDocument const& document, Limits const& limits = {});
BraceDocument to_document(LeftBrace const& brace);

Solution to_solution(SolutionDocument const& document);
SolutionDocument to_document(Solution const& solution);

BraceAction to_action(ActionDocument const& document, LeftBrace const& target, LeftBrace const& acting);

}  // namespace bracelab::cli

#endif  // BRACELAB_CLI_DOCUMENTS_HPP_
