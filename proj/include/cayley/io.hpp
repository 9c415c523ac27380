#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "cayley/rings.hpp"
#include "cayley/table.hpp"

namespace cayley {

/// Cayley-table text format: a line `elements: l1 l2 ... ln`, then n rows of
/// n labels each (row i lists the products label_i * label_j). Lines starting
/// with `#` and blank lines are skipped. Throws ParseError on malformed
/// input, plus the CayleyTable construction errors.
CayleyTable parse_table(std::istream& in);
CayleyTable parse_table_file(const std::string& path);

/// Ring text format: an `elements:` line, an `add:` marker followed by n
/// rows, then a `mul:` marker followed by n rows, row conventions as above.
RingTable parse_ring(std::istream& in);
RingTable parse_ring_file(const std::string& path);

/// ASCII rendering with the operation symbol in the corner, row and column
/// labels in carrier order, cells right-aligned to the widest label, single
/// spaces between columns and ` | ` after the row label. Every line is
/// newline-terminated.
std::string render_table(const CayleyTable& t, std::string_view symbol = "x");

}  // namespace cayley
