#pragma once

#include <cstdint>
#include <vector>

#include "cayley/table.hpp"

namespace cayley {

/// \brief Eventual periodicity of the power sequence a^1, a^2, ... (mod n).
///
/// `tail` is the smallest exponent s whose residue recurs and `period` the
/// smallest p >= 1 with a^(s+p) = a^s (mod n); both are minimal. `residues`
/// lists a^1 .. a^(s+p-1), all pairwise distinct.
struct OrbitSummary {
  std::int64_t base = 0;
  std::int64_t modulus = 1;
  int tail = 1;
  int period = 1;
  std::vector<std::int64_t> residues;
};

/// Iterates x -> a*x (mod n) recording first occurrences; n >= 1, a reduced
/// mod n. No cycle-detection heuristics: the first repeat pins (s, p) exactly.
OrbitSummary power_orbit(std::int64_t a, std::int64_t n);

/// Multiplicative subsemigroup of Z_n generated by a. The carrier is the
/// power orbit in order of first appearance, so the table row/column order
/// follows the generated sequence. Always closed and associative.
CayleyTable generated_mul_semigroup(std::int64_t a, std::int64_t n);

enum class ZnLaw { Add, Mul };

/// Induced table on a subset of Z_n residues under + or * mod n. Labels are
/// sorted ascending. Throws NotClosedError with the offending pair if the
/// subset is not closed, EmptySubsetError, UnknownLabelError for residues
/// outside [0, n).
CayleyTable zn_table(std::vector<std::int64_t> subset, std::int64_t n, ZnLaw law);

}  // namespace cayley
