#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cayley/embed.hpp"
#include "cayley/table.hpp"

namespace cayley {

/// \brief A finite ring given by two Cayley tables over one carrier.
///
/// Construction verifies the full axiom set: (carrier, add) is an abelian
/// group, mul is associative, and both distributive laws hold. Non-unital
/// rings are first-class; nothing here requires a multiplicative identity.
class RingTable {
public:
  /// Throws AddNotAbelianGroupError, MulNotAssociativeError, and
  /// NotDistributiveError carrying a counterexample triple, plus the
  /// CayleyTable shape/closure errors.
  RingTable(std::vector<std::int64_t> labels,
            const std::vector<std::vector<std::int64_t>>& add,
            const std::vector<std::vector<std::int64_t>>& mul);

  /// Same validation, starting from already-built tables with equal labels.
  RingTable(CayleyTable add, CayleyTable mul);

  int size() const { return add_.size(); }
  std::span<const std::int64_t> labels() const { return add_.labels(); }
  std::int64_t label(int i) const { return add_.label(i); }
  std::optional<int> index_of(std::int64_t l) const { return add_.index_of(l); }

  const CayleyTable& add_table() const { return add_; }
  const CayleyTable& mul_table() const { return mul_; }
  int add(int i, int j) const { return add_.op(i, j); }
  int mul(int i, int j) const { return mul_.op(i, j); }

  /// Additive identity label.
  std::int64_t zero() const { return add_.label(zero_); }
  int zero_index() const { return zero_; }

private:
  void validate();

  CayleyTable add_;
  CayleyTable mul_;
  int zero_ = 0;
};

enum class RingKind {
  Rng,  // no multiplicative identity required
  CommutativeRng,
  UnitalRing,
  CommutativeUnitalRing,
  Field,
};

std::string_view ring_kind_name(RingKind k);

struct RingClass {
  RingKind kind = RingKind::Rng;
  std::optional<std::int64_t> unity;  // present iff kind >= UnitalRing
};

/// A proper subset forming a field under the induced operations. `unity` is
/// an idempotent of the ambient mul table, independent of any ambient unity.
struct FieldWitness {
  std::vector<std::int64_t> carrier;  // sorted ascending
  std::int64_t zero = 0;
  std::int64_t unity = 0;

  int order() const { return static_cast<int>(carrier.size()); }
  bool operator==(const FieldWitness&) const = default;
};

/// Strongest applicable kind. Field requires commutativity, a unity, order
/// >= 2, and an inverse for every non-zero element.
RingClass classify_ring(const RingTable& rt);

/// Induced ring on a subset closed under both operations, ambient label
/// order kept. Throws NotClosedError (reporting the first offending pair of
/// either law), EmptySubsetError, UnknownLabelError.
RingTable restrict_ring(const RingTable& rt, std::span<const std::int64_t> subset);

/// All proper subsets of the carrier that form fields under the induced
/// operations, sorted by (order descending, lexicographic carrier).
/// Candidates are the additive subgroups (every field witness must be one),
/// enumerated by closure; throws TooLargeError past the enumeration guard.
std::vector<FieldWitness> embedded_fields(const RingTable& rt);

/// Additive subgroup absorbing ambient multiplication on both sides.
bool is_ideal(const RingTable& ambient, std::span<const std::int64_t> subset);

/// A ring, itself not a field, with a proper subset that is a field.
SpecialVerdict<FieldWitness> is_special_ring(const RingTable& rt);

/// A special ring sitting as a proper subset inside another special ring;
/// the subset must be closed under both induced operations (NotClosedError).
SpecialVerdict<FieldWitness> is_special_subring(const RingTable& ambient,
                                                std::span<const std::int64_t> subset);

/// An ideal of the ambient ring, itself not a field, with a proper subset
/// that is a field. Non-ideals yield special = false rather than an error.
SpecialVerdict<FieldWitness> is_special_ideal(const RingTable& ambient,
                                              std::span<const std::int64_t> subset);

/// The residue ring dZ_n inside Z_n under + and * mod n (d = 1 gives Z_n).
/// d must divide n.
RingTable zn_ring(std::int64_t n, std::int64_t d = 1);

}  // namespace cayley
