#include "cayley/rings.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/modular.hpp"

namespace cayley {

namespace {

// Deduped ambient indices of the subset labels, in first-mention order.
std::vector<int> resolve_subset(const RingTable& rt, std::span<const std::int64_t> subset) {
  std::vector<char> seen(static_cast<std::size_t>(rt.size()), 0);
  std::vector<int> out;
  for (std::int64_t l : subset) {
    const auto idx = rt.index_of(l);
    if (!idx) throw UnknownLabelError(l);
    if (!seen[static_cast<std::size_t>(*idx)]) {
      seen[static_cast<std::size_t>(*idx)] = 1;
      out.push_back(*idx);
    }
  }
  return out;
}

void sort_field_witnesses(std::vector<FieldWitness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const FieldWitness& a, const FieldWitness& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.carrier < b.carrier;
  });
}

// Subgroup enumeration cap; past this the ring is outside desk scale.
constexpr std::size_t kMaxAdditiveSubgroups = 4096;

// All additive subgroups as sorted index vectors, found by closing {0} and
// repeatedly adjoining one extra generator. Nonempty + closed under a finite
// group operation already implies a subgroup.
std::vector<std::vector<int>> additive_subgroups(const RingTable& rt) {
  const CayleyTable& add = rt.add_table();
  const int n = rt.size();

  auto close = [&](const std::vector<int>& base, int extra) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> elems;
    auto push = [&](int i) {
      if (!in[static_cast<std::size_t>(i)]) {
        in[static_cast<std::size_t>(i)] = 1;
        elems.push_back(i);
      }
    };
    for (int i : base) push(i);
    push(extra);
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (std::size_t j = 0; j <= head; ++j) push(add.op(elems[head], elems[j]));
    std::sort(elems.begin(), elems.end());
    return elems;
  };

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  frontier.push_back({rt.zero_index()});
  found.insert(frontier.back());
  while (!frontier.empty()) {
    const std::vector<int> h = std::move(frontier.back());
    frontier.pop_back();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int i : h) in[static_cast<std::size_t>(i)] = 1;
    for (int x = 0; x < n; ++x) {
      if (in[static_cast<std::size_t>(x)]) continue;
      std::vector<int> k = close(h, x);
      if (found.insert(k).second) {
        if (found.size() > kMaxAdditiveSubgroups)
          throw TooLargeError("additive subgroup enumeration exceeded " +
                              std::to_string(kMaxAdditiveSubgroups) + " subgroups");
        frontier.push_back(std::move(k));
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

RingTable::RingTable(std::vector<std::int64_t> labels,
                     const std::vector<std::vector<std::int64_t>>& add,
                     const std::vector<std::vector<std::int64_t>>& mul)
    : add_(labels, add), mul_(std::move(labels), mul) {
  validate();
}

RingTable::RingTable(CayleyTable add, CayleyTable mul)
    : add_(std::move(add)), mul_(std::move(mul)) {
  validate();
}

void RingTable::validate() {
  if (!std::equal(add_.labels().begin(), add_.labels().end(), mul_.labels().begin(),
                  mul_.labels().end()))
    throw ShapeMismatchError("add and mul tables have different carriers");

  const StructureClass ac = classify(add_);
  if (ac.kind != Kind::AbelianGroup)
    throw AddNotAbelianGroupError("additive table classifies as " +
                                  std::string(kind_name(ac.kind)) + ", not abelian group");
  zero_ = *add_.index_of(*ac.identity);

  if (!is_associative(mul_)) throw MulNotAssociativeError("multiplicative table is not associative");

  const int n = add_.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (mul_.op(x, add_.op(y, z)) != add_.op(mul_.op(x, y), mul_.op(x, z)))
          throw NotDistributiveError(label(x), label(y), label(z), true);
        if (mul_.op(add_.op(y, z), x) != add_.op(mul_.op(y, x), mul_.op(z, x)))
          throw NotDistributiveError(label(x), label(y), label(z), false);
      }
}

std::string_view ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::Rng: return "rng";
    case RingKind::CommutativeRng: return "commutative rng";
    case RingKind::UnitalRing: return "unital ring";
    case RingKind::CommutativeUnitalRing: return "commutative unital ring";
    case RingKind::Field: return "field";
  }
  return "unknown";
}

RingClass classify_ring(const RingTable& rt) {
  const StructureClass mc = classify(rt.mul_table());
  RingClass out;
  if (!mc.identity) {
    out.kind = mc.commutative ? RingKind::CommutativeRng : RingKind::Rng;
    return out;
  }
  out.unity = *mc.identity;
  out.kind = mc.commutative ? RingKind::CommutativeUnitalRing : RingKind::UnitalRing;
  if (!mc.commutative) return out;

  const int n = rt.size();
  if (n < 2) return out;
  const int e = *rt.index_of(*mc.identity);
  for (int i = 0; i < n; ++i) {
    if (i == rt.zero_index()) continue;
    bool invertible = false;
    for (int j = 0; j < n; ++j)
      if (rt.mul(i, j) == e) {
        invertible = true;
        break;
      }
    if (!invertible) return out;
  }
  out.kind = RingKind::Field;
  return out;
}

RingTable restrict_ring(const RingTable& rt, std::span<const std::int64_t> subset) {
  CayleyTable add = restrict_to(rt.add_table(), subset);
  CayleyTable mul = restrict_to(rt.mul_table(), subset);
  return RingTable(std::move(add), std::move(mul));
}

std::vector<FieldWitness> embedded_fields(const RingTable& rt) {
  const int n = rt.size();
  std::vector<FieldWitness> out;
  for (const std::vector<int>& h : additive_subgroups(rt)) {
    if (static_cast<int>(h.size()) >= n || h.size() < 2) continue;

    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int i : h) in[static_cast<std::size_t>(i)] = 1;
    bool mul_closed = true;
    for (int a : h) {
      for (int b : h)
        if (!in[static_cast<std::size_t>(rt.mul(a, b))]) {
          mul_closed = false;
          break;
        }
      if (!mul_closed) break;
    }
    if (!mul_closed) continue;

    std::vector<std::int64_t> labels;
    labels.reserve(h.size());
    for (int i : h) labels.push_back(rt.label(i));
    const RingTable sub = restrict_ring(rt, labels);
    const RingClass rc = classify_ring(sub);
    if (rc.kind != RingKind::Field) continue;

    std::sort(labels.begin(), labels.end());
    out.push_back(FieldWitness{std::move(labels), sub.zero(), *rc.unity});
  }
  sort_field_witnesses(out);
  return out;
}

bool is_ideal(const RingTable& ambient, std::span<const std::int64_t> subset) {
  if (subset.empty()) throw EmptySubsetError();
  const std::vector<int> elems = resolve_subset(ambient, subset);
  const int n = ambient.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int i : elems) in[static_cast<std::size_t>(i)] = 1;

  // finite and nonempty, so closure under + alone makes an additive subgroup
  for (int a : elems)
    for (int b : elems)
      if (!in[static_cast<std::size_t>(ambient.add(a, b))]) return false;
  for (int a : elems)
    for (int r = 0; r < n; ++r)
      if (!in[static_cast<std::size_t>(ambient.mul(r, a))] ||
          !in[static_cast<std::size_t>(ambient.mul(a, r))])
        return false;
  return true;
}

SpecialVerdict<FieldWitness> is_special_ring(const RingTable& rt) {
  SpecialVerdict<FieldWitness> v;
  if (classify_ring(rt).kind == RingKind::Field) {
    v.reason = SpecialReason::IsAlreadyTargetKind;
    return v;
  }
  v.witnesses = embedded_fields(rt);
  v.special = !v.witnesses.empty();
  v.reason = v.special ? SpecialReason::Witnessed : SpecialReason::NoWitness;
  return v;
}

SpecialVerdict<FieldWitness> is_special_subring(const RingTable& ambient,
                                                std::span<const std::int64_t> subset) {
  SpecialVerdict<FieldWitness> v;
  const std::vector<int> elems = resolve_subset(ambient, subset);

  // proper subset: not everything, not empty, not the bare unity
  if (elems.empty() || static_cast<int>(elems.size()) == ambient.size()) return v;
  if (elems.size() == 1) {
    const RingClass ac = classify_ring(ambient);
    if (ac.unity && *ac.unity == ambient.label(elems[0])) return v;
  }

  std::vector<std::int64_t> labels;
  labels.reserve(elems.size());
  for (int i : elems) labels.push_back(ambient.label(i));
  const RingTable sub = restrict_ring(ambient, labels);

  const SpecialVerdict<FieldWitness> subv = is_special_ring(sub);
  if (!subv.special) {
    v.reason = subv.reason;
    return v;
  }
  const SpecialVerdict<FieldWitness> ambv = is_special_ring(ambient);
  if (!ambv.special) {
    v.reason = ambv.reason;
    return v;
  }
  v.special = true;
  v.witnesses = subv.witnesses;
  v.reason = SpecialReason::Witnessed;
  return v;
}

SpecialVerdict<FieldWitness> is_special_ideal(const RingTable& ambient,
                                              std::span<const std::int64_t> subset) {
  SpecialVerdict<FieldWitness> v;
  if (subset.empty()) return v;
  if (!is_ideal(ambient, subset)) return v;

  // an ideal is closed under both operations, so the restriction is a ring
  const std::vector<int> elems = resolve_subset(ambient, subset);
  std::vector<std::int64_t> labels;
  labels.reserve(elems.size());
  for (int i : elems) labels.push_back(ambient.label(i));
  const RingTable sub = restrict_ring(ambient, labels);

  if (classify_ring(sub).kind == RingKind::Field) {
    v.reason = SpecialReason::IsAlreadyTargetKind;
    return v;
  }
  v.witnesses = embedded_fields(sub);
  v.special = !v.witnesses.empty();
  v.reason = v.special ? SpecialReason::Witnessed : SpecialReason::NoWitness;
  return v;
}

RingTable zn_ring(std::int64_t n, std::int64_t d) {
  if (n < 1) throw InvalidSpecError("modulus must be >= 1");
  if (d < 1 || n % d != 0)
    throw InvalidSpecError("divisor " + std::to_string(d) + " does not divide modulus " +
                           std::to_string(n));
  std::vector<std::int64_t> labels;
  labels.reserve(static_cast<std::size_t>(n / d));
  for (std::int64_t x = 0; x < n; x += d) labels.push_back(x);
  CayleyTable add = zn_table(labels, n, ZnLaw::Add);
  CayleyTable mul = zn_table(std::move(labels), n, ZnLaw::Mul);
  return RingTable(std::move(add), std::move(mul));
}

}  // namespace cayley
