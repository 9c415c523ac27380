#include "cayley/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

// Significant lines only: comments and blank lines removed, 1-based numbers
// kept for error reports.
struct Line {
  std::string text;
  int number;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos || raw[start] == '#') continue;
    const std::size_t end = raw.find_last_not_of(" \t\r");
    out.push_back({raw.substr(start, end - start + 1), number});
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream ss(text);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_label(const std::string& tok, int line_number) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_number) + ": '" + tok +
                     "' is not an integer label");
  }
  if (used != tok.size())
    throw ParseError("line " + std::to_string(line_number) + ": '" + tok +
                     "' is not an integer label");
  return value;
}

std::vector<std::int64_t> parse_elements_line(const std::vector<Line>& lines, std::size_t at) {
  if (at >= lines.size()) throw ParseError("missing 'elements:' line");
  const Line& line = lines[at];
  std::vector<std::string> toks = tokens_of(line.text);
  if (toks.empty() || toks[0] != "elements:")
    throw ParseError("line " + std::to_string(line.number) + ": expected 'elements: l1 l2 ...'");
  std::vector<std::int64_t> labels;
  for (std::size_t i = 1; i < toks.size(); ++i)
    labels.push_back(parse_label(toks[i], line.number));
  if (labels.empty())
    throw ParseError("line " + std::to_string(line.number) + ": no labels after 'elements:'");
  return labels;
}

std::vector<std::int64_t> parse_row(const Line& line, std::size_t n) {
  const std::vector<std::string> toks = tokens_of(line.text);
  if (toks.size() != n)
    throw ParseError("line " + std::to_string(line.number) + ": expected " + std::to_string(n) +
                     " entries, got " + std::to_string(toks.size()));
  std::vector<std::int64_t> row;
  row.reserve(n);
  for (const std::string& tok : toks) row.push_back(parse_label(tok, line.number));
  return row;
}

std::vector<std::vector<std::int64_t>> parse_rows(const std::vector<Line>& lines, std::size_t at,
                                                  std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (at + i >= lines.size())
      throw ParseError("table truncated: expected " + std::to_string(n) + " rows, got " +
                       std::to_string(i));
    rows.push_back(parse_row(lines[at + i], n));
  }
  return rows;
}

void expect_marker(const std::vector<Line>& lines, std::size_t at, const std::string& marker) {
  if (at >= lines.size()) throw ParseError("missing '" + marker + "' marker");
  if (lines[at].text != marker)
    throw ParseError("line " + std::to_string(lines[at].number) + ": expected '" + marker + "'");
}

void expect_end(const std::vector<Line>& lines, std::size_t at) {
  if (at < lines.size())
    throw ParseError("line " + std::to_string(lines[at].number) + ": unexpected trailing content");
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

CayleyTable parse_table(std::istream& in) {
  const std::vector<Line> lines = significant_lines(in);
  std::vector<std::int64_t> labels = parse_elements_line(lines, 0);
  const std::size_t n = labels.size();
  std::vector<std::vector<std::int64_t>> rows = parse_rows(lines, 1, n);
  expect_end(lines, 1 + n);
  return CayleyTable(std::move(labels), rows);
}

CayleyTable parse_table_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return parse_table(in);
}

RingTable parse_ring(std::istream& in) {
  const std::vector<Line> lines = significant_lines(in);
  std::vector<std::int64_t> labels = parse_elements_line(lines, 0);
  const std::size_t n = labels.size();
  expect_marker(lines, 1, "add:");
  std::vector<std::vector<std::int64_t>> add = parse_rows(lines, 2, n);
  expect_marker(lines, 2 + n, "mul:");
  std::vector<std::vector<std::int64_t>> mul = parse_rows(lines, 3 + n, n);
  expect_end(lines, 3 + 2 * n);
  return RingTable(std::move(labels), add, mul);
}

RingTable parse_ring_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return parse_ring(in);
}

std::string render_table(const CayleyTable& t, std::string_view symbol) {
  const int n = t.size();
  std::size_t width = symbol.size();
  std::vector<std::string> cells(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cells[static_cast<std::size_t>(i)] = std::to_string(t.label(i));
    width = std::max(width, cells[static_cast<std::size_t>(i)].size());
  }
  auto pad = [width](std::string_view s) {
    return std::string(width - s.size(), ' ') + std::string(s);
  };

  std::string out = pad(symbol) + " |";
  for (int j = 0; j < n; ++j) out += " " + pad(cells[static_cast<std::size_t>(j)]);
  out += "\n";
  for (int i = 0; i < n; ++i) {
    out += pad(cells[static_cast<std::size_t>(i)]) + " |";
    for (int j = 0; j < n; ++j) out += " " + pad(cells[static_cast<std::size_t>(t.op(i, j))]);
    out += "\n";
  }
  return out;
}

}  // namespace cayley
