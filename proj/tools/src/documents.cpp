#include "bracelab/cli/documents.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bracelab::cli {

namespace {

using nlohmann::json;

std::string describe(std::size_t line, std::size_t column, std::string const& field, std::string const& detail,
                     std::string const& source) {
  std::string text = source.empty() ? "" : source + ": ";
  if (line > 0) {
    text += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  } else if (!field.empty()) {
    text += "field " + field + ": ";
  }
  return text + detail;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (json::parse_error const& error) {
    std::size_t const byte = std::min<std::size_t>(error.byte == 0 ? 0 : error.byte - 1, text.size());
    auto const begin = text.begin();
    std::size_t const line = 1 + static_cast<std::size_t>(std::count(begin, begin + static_cast<std::ptrdiff_t>(byte), '\n'));
    std::size_t const line_start = text.rfind('\n', byte == 0 ? 0 : byte - 1);
    std::size_t const column = line_start == std::string_view::npos || line == 1 ? byte + 1 : byte - line_start;
    std::string detail = error.what();
    // Keep only the description after "... parse error at line L, column C: ".
    if (auto const colon = detail.find(": "); colon != std::string::npos) {
      detail.erase(0, colon + 2);
    }
    throw ParseError(line, column, {}, detail);
  }
}

void require_keys(json const& root, std::initializer_list<char const*> keys) {
  if (!root.is_object()) {
    throw ParseError(0, 0, "$", "document must be a JSON object");
  }
  for (auto const* key : keys) {
    if (!root.contains(key)) {
      throw ParseError(0, 0, key, "missing field");
    }
  }
  for (auto const& item : root.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](char const* key) { return item.key() == key; })) {
      throw ParseError(0, 0, item.key(), "unknown field");
    }
  }
}

std::uint64_t natural(json const& value, std::string const& field) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw ParseError(0, 0, field, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

std::vector<std::vector<Element>> square_rows(json const& value, std::string const& field, std::size_t n) {
  if (!value.is_array() || value.size() != n) {
    throw ParseError(0, 0, field, "expected " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<Element>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string const row_field = field + "[" + std::to_string(i) + "]";
    json const& row = value[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(0, 0, row_field, "expected " + std::to_string(n) + " entries");
    }
    rows[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::string const entry_field = row_field + "[" + std::to_string(j) + "]";
      std::uint64_t const entry = natural(row[j], entry_field);
      if (entry >= n) {
        throw ParseError(0, 0, entry_field, "entry " + std::to_string(entry) + " is not below " + std::to_string(n));
      }
      rows[i].push_back(static_cast<Element>(entry));
    }
  }
  return rows;
}

void write_rows(std::ostringstream& out, std::vector<std::vector<Element>> const& rows) {
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out << (j == 0 ? "" : ", ") << rows[i][j];
    }
    out << (i + 1 < rows.size() ? "],\n" : "]\n");
  }
  out << "  ]";
}

std::vector<Element> flatten(std::vector<std::vector<Element>> const& rows) {
  std::vector<Element> flat;
  for (auto const& row : rows) {
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

std::vector<std::vector<Element>> split(std::span<Element const> flat, std::size_t n) {
  std::vector<std::vector<Element>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                   flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return rows;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string field, std::string detail, std::string source)
    : Error(describe(line, column, field, detail, source)),
      line_(line),
      column_(column),
      field_(std::move(field)),
      detail_(std::move(detail)) {}

ParseError ParseError::in(std::string source) const {
  return ParseError(line_, column_, field_, detail_, std::move(source));
}

BraceDocument parse_brace_document(std::string_view text) {
  json const root = parse_json(text);
  require_keys(root, {"order", "invariant_factors", "operation", "table"});
  BraceDocument document;
  document.order = natural(root["order"], "order");
  if (document.order == 0) {
    throw ParseError(0, 0, "order", "order must be positive");
  }

  json const& factors = root["invariant_factors"];
  if (!factors.is_array()) {
    throw ParseError(0, 0, "invariant_factors", "expected an array");
  }
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::string const field = "invariant_factors[" + std::to_string(i) + "]";
    std::uint64_t const d = natural(factors[i], field);
    if (d < 2) {
      throw ParseError(0, 0, field, "invariant factor must be at least 2");
    }
    if (d > document.order / product) {
      throw ParseError(0, 0, "invariant_factors", "product of factors exceeds the order");
    }
    product *= d;
    document.invariant_factors.push_back(static_cast<std::uint32_t>(d));
  }
  if (product != document.order) {
    throw ParseError(0, 0, "invariant_factors",
                     "product " + std::to_string(product) + " differs from order " + std::to_string(document.order));
  }

  json const& operation = root["operation"];
  if (operation == "circle_table") {
    document.operation = TableKind::circle_table;
  } else if (operation == "lambda_table") {
    document.operation = TableKind::lambda_table;
  } else {
    throw ParseError(0, 0, "operation", "expected \"circle_table\" or \"lambda_table\"");
  }
  document.table = square_rows(root["table"], "table", document.order);
  return document;
}

SolutionDocument parse_solution_document(std::string_view text) {
  json const root = parse_json(text);
  require_keys(root, {"size", "sigma", "tau"});
  SolutionDocument document;
  document.size = natural(root["size"], "size");
  if (document.size == 0) {
    throw ParseError(0, 0, "size", "size must be positive");
  }
  document.sigma = square_rows(root["sigma"], "sigma", document.size);
  document.tau = square_rows(root["tau"], "tau", document.size);
  return document;
}

ActionDocument parse_action_document(std::string_view text) {
  json const root = parse_json(text);
  require_keys(root, {"images"});
  json const& images = root["images"];
  if (!images.is_array() || images.empty()) {
    throw ParseError(0, 0, "images", "expected a non-empty array of permutations");
  }
  ActionDocument document;
  for (std::size_t h = 0; h < images.size(); ++h) {
    std::string const field = "images[" + std::to_string(h) + "]";
    json const& image = images[h];
    if (!image.is_array()) {
      throw ParseError(0, 0, field, "expected an array");
    }
    std::vector<Element> row;
    for (std::size_t x = 0; x < image.size(); ++x) {
      std::string const entry_field = field + "[" + std::to_string(x) + "]";
      std::uint64_t const entry = natural(image[x], entry_field);
      if (entry > std::numeric_limits<Element>::max()) {
        throw ParseError(0, 0, entry_field, "entry is out of range");
      }
      row.push_back(static_cast<Element>(entry));
    }
    document.images.push_back(std::move(row));
  }
  return document;
}

std::string serialize(BraceDocument const& document) {
  std::ostringstream out;
  out << "{\n  \"order\": " << document.order << ",\n  \"invariant_factors\": [";
  for (std::size_t i = 0; i < document.invariant_factors.size(); ++i) {
    out << (i == 0 ? "" : ", ") << document.invariant_factors[i];
  }
  out << "],\n  \"operation\": \""
      << (document.operation == TableKind::circle_table ? "circle_table" : "lambda_table") << "\",\n  \"table\": ";
  write_rows(out, document.table);
  out << "\n}\n";
  return out.str();
}

std::string serialize(SolutionDocument const& document) {
  std::ostringstream out;
  out << "{\n  \"size\": " << document.size << ",\n  \"sigma\": ";
  write_rows(out, document.sigma);
  out << ",\n  \"tau\": ";
  write_rows(out, document.tau);
  out << "\n}\n";
  return out.str();
}

std::string serialize(ActionDocument const& document) {
  std::ostringstream out;
  out << "{\n  \"images\": ";
  write_rows(out, document.images);
  out << "\n}\n";
  return out.str();
}

LeftBrace to_brace(BraceDocument const& document, Limits const& limits) {
  FiniteAbelianGroup additive(document.invariant_factors);
  auto flat = flatten(document.table);
  if (document.operation == TableKind::lambda_table) {
    return brace_from_lambda(std::move(additive), flat, limits);
  }
  return validate_brace(std::move(additive), std::move(flat), limits);
}

BraceDocument to_document(LeftBrace const& brace) {
  BraceDocument document;
  document.order = brace.order();
  document.invariant_factors.assign(brace.additive().factors().begin(), brace.additive().factors().end());
  document.operation = TableKind::circle_table;
  document.table = split(brace.circle_table(), brace.order());
  return document;
}

Solution to_solution(SolutionDocument const& document) {
  return validate_solution(document.size, flatten(document.sigma), flatten(document.tau));
}

SolutionDocument to_document(Solution const& solution) {
  return {solution.size(), split(solution.sigma_table(), solution.size()), split(solution.tau_table(), solution.size())};
}

BraceAction to_action(ActionDocument const& document, LeftBrace const& target, LeftBrace const& acting) {
  if (document.images.size() != acting.order()) {
    throw ParseError(0, 0, "images",
                     "expected one image per element of the acting brace (" + std::to_string(acting.order()) + ")");
  }
  std::vector<Permutation> images;
  for (std::size_t h = 0; h < document.images.size(); ++h) {
    auto const& image = document.images[h];
    std::string const field = "images[" + std::to_string(h) + "]";
    if (image.size() != target.order()) {
      throw ParseError(0, 0, field, "expected " + std::to_string(target.order()) + " entries");
    }
    try {
      images.emplace_back(image);
    } catch (InvalidGenerator const& error) {
      throw ParseError(0, 0, field, error.what());
    }
  }
  return BraceAction::validate(target, acting, std::move(images));
}

}  // namespace bracelab::cli
