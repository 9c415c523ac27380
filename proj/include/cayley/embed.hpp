#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cayley/table.hpp"

namespace cayley {

/// A subgroup found inside an ambient table, identified by its carrier
/// (sorted ascending) and its identity, an idempotent of the ambient table.
struct GroupWitness {
  std::vector<std::int64_t> carrier;
  std::int64_t identity = 0;

  int order() const { return static_cast<int>(carrier.size()); }
  bool operator==(const GroupWitness&) const = default;
};

enum class SpecialReason {
  IsAlreadyTargetKind,  // the whole structure already is the stronger kind
  NoWitness,
  Witnessed,
};

std::string_view reason_name(SpecialReason r);

/// Verdict of a special-structure predicate. `special` holds exactly when
/// `witnesses` is nonempty; every witness carrier is a proper subset: not the
/// whole carrier, not empty, and not the singleton of the ambient identity
/// when one exists.
template <typename Witness>
struct SpecialVerdict {
  bool special = false;
  std::vector<Witness> witnesses;
  SpecialReason reason = SpecialReason::NoWitness;
};

/// Maximal subgroup with identity e: the unit group of the local monoid
/// eSe = { e*x*e : x in carrier }. Throws NotAssociativeError,
/// NotIdempotentError.
GroupWitness maximal_subgroup_at(const CayleyTable& t, std::int64_t e);

/// One witness per idempotent whose maximal subgroup has order >= min_order,
/// sorted by (order descending, then lexicographic carrier).
std::vector<GroupWitness> embedded_groups(const CayleyTable& t, int min_order);

/// Exhaustive ground truth: every subset of size <= max_size that is closed
/// and forms a group under the induced operation. Guarded by t.size() <= 20
/// (2^size enumeration); throws TooLargeError beyond. Same witness ordering
/// as embedded_groups.
std::vector<GroupWitness> brute_force_groups(const CayleyTable& t, int max_size);

/// A semigroup, itself not a group, with a proper subset that is a group of
/// order >= min_order under the induced operation. Throws
/// NotAssociativeError.
SpecialVerdict<GroupWitness> is_special_semigroup(const CayleyTable& t, int min_order = 2);

/// Same predicate on a monoid; requires a two-sided identity (throws
/// NotMonoidError) and excludes the identity singleton from witnesses.
SpecialVerdict<GroupWitness> is_special_monoid(const CayleyTable& t, int min_order = 2);

}  // namespace cayley
