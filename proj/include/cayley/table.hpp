#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

/// \brief Full multiplication table of a finite binary operation.
///
/// The carrier is a list of distinct integer labels; internally every element
/// is an index into that list, so the table is closed by construction and a
/// product is one array lookup. Row = left operand, column = right operand.
/// Instances are immutable after construction and safe to share across
/// threads.
class CayleyTable {
public:
  /// Validates labelled entries and converts them to indices.
  /// Throws DuplicateLabelError, ShapeMismatchError (non-square entries or
  /// wrong side), NotClosedError (an entry label outside the carrier).
  CayleyTable(std::vector<std::int64_t> labels,
              const std::vector<std::vector<std::int64_t>>& entries);

  /// Builds from an index matrix (row-major, values already in [0, size)).
  static CayleyTable from_indices(std::vector<std::int64_t> labels, std::vector<int> entries);

  int size() const { return size_; }
  std::span<const std::int64_t> labels() const { return labels_; }
  std::int64_t label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Product of element indices.
  int op(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                    static_cast<std::size_t>(j)];
  }

  /// Product at the label level; throws UnknownLabelError.
  std::int64_t op_label(std::int64_t x, std::int64_t y) const;

  std::optional<int> index_of(std::int64_t label) const;

  bool operator==(const CayleyTable& other) const = default;

private:
  CayleyTable() = default;

  int size_ = 0;
  std::vector<std::int64_t> labels_;
  std::vector<int> entries_;  // size_ * size_, row-major
};

/// Structure kinds along the single-operation axiom chain.
enum class Kind {
  Magma,
  Semigroup,
  CommutativeSemigroup,
  Monoid,
  CommutativeMonoid,
  Group,
  AbelianGroup,
};

std::string_view kind_name(Kind k);

/// Classification result: the strongest applicable kind plus the data that
/// witnesses it. `identity` is present exactly when kind is Monoid or
/// stronger; `idempotents` is the full diagonal scan, sorted ascending.
struct StructureClass {
  Kind kind = Kind::Magma;
  std::optional<std::int64_t> identity;
  std::vector<std::int64_t> idempotents;
  bool commutative = false;
};

/// One failing instance of (x*y)*z = x*(y*z), as labels.
struct AssociativityFailure {
  std::int64_t x, y, z;
};

/// Light's associativity test: checks the derived tables (x*g)*y vs x*(g*y)
/// for every g in a greedily chosen generating set. Returns a genuine
/// counterexample triple on failure.
std::optional<AssociativityFailure> associativity_counterexample(const CayleyTable& t);

bool is_associative(const CayleyTable& t);

/// A greedy generating set: scans elements in index order, keeping those not
/// already in the product closure of the elements kept so far.
std::vector<int> generating_set(const CayleyTable& t);

StructureClass classify(const CayleyTable& t);

/// Induced table on a subset of labels, keeping the ambient label order.
/// Throws EmptySubsetError, UnknownLabelError, and NotClosedError with the
/// offending pair when the subset is not closed.
CayleyTable restrict_to(const CayleyTable& t, std::span<const std::int64_t> subset);

/// Strict refinement between kinds: every axiom of `weaker` is an axiom of
/// `stronger` and `stronger` has at least one more. Incomparable kinds
/// (e.g. CommutativeSemigroup vs Monoid) compare false.
bool is_refinement(Kind weaker, Kind stronger);

}  // namespace cayley
