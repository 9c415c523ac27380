#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cayley {

enum class ScanKind { SpecialSemigroup, SpecialRing, SpecialIdeal };

std::string_view scan_kind_name(ScanKind k);

/// Parameters of a batch scan. The modulus range must be nonempty; an empty
/// generator range is allowed and yields no work. `max_carrier` caps the
/// carrier size a scan will process (TooLargeError beyond). `threads` = 0
/// picks the hardware concurrency; results never depend on it.
struct SearchSpec {
  ScanKind kind = ScanKind::SpecialSemigroup;
  std::int64_t n_lo = 2;
  std::int64_t n_hi = 2;
  std::optional<std::pair<std::int64_t, std::int64_t>> generator_range;  // semigroup scans
  int min_group_order = 2;
  int max_carrier = 4096;
  unsigned threads = 0;
};

/// One special structure found by a scan. Exactly one of `a` (generator) and
/// `d` (divisor) is present. `witness` is the top witness of the verdict and
/// `witness_identity` its identity (group) or unity (field). Re-running the
/// predicate on (n, a/d) reproduces the verdict.
struct Finding {
  std::string kind;
  std::int64_t n = 0;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> d;
  std::vector<std::int64_t> carrier;  // sorted ascending
  std::vector<std::int64_t> witness;  // sorted ascending
  std::int64_t witness_identity = 0;
  std::string classification;

  bool operator==(const Finding&) const = default;
};

/// For each n in the modulus range and each a in the generator range
/// (defaults to [0, n)), tests the multiplicative semigroup generated by a
/// in Z_n with is_special_semigroup. Findings sorted by (n, a). Throws
/// InvalidSpecError on a wrong kind, an empty modulus range, or
/// min_group_order < 1.
std::vector<Finding> scan_special_semigroups(const SearchSpec& spec);

/// For each n, tests Z_n (d = 1) and every divisor subring dZ_n (1 < d < n)
/// with is_special_ring. Findings sorted by (n, d).
std::vector<Finding> scan_special_rings(const SearchSpec& spec);

/// For each n, tests every proper ideal dZ_n of Z_n (1 < d < n) with
/// is_special_ideal. Findings sorted by (n, d).
std::vector<Finding> scan_special_ideals(const SearchSpec& spec);

/// One-line JSON record, keys in the fixed order: kind, n, a or d, carrier,
/// witness, witness_identity, classification.
std::string finding_to_json(const Finding& f);

/// Writes one record per line; byte-identical output for identical lists.
/// Returns the number of lines written; throws SinkFailureError on a failed
/// stream.
std::size_t emit_findings(const std::vector<Finding>& findings, std::ostream& out);

}  // namespace cayley
