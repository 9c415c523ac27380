#include "cayley/embed.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace cayley {

std::string_view reason_name(SpecialReason r) {
  switch (r) {
    case SpecialReason::IsAlreadyTargetKind: return "is-already-target-kind";
    case SpecialReason::NoWitness: return "no-witness";
    case SpecialReason::Witnessed: return "witnessed";
  }
  return "?";
}

namespace {

void sort_witnesses(std::vector<GroupWitness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const GroupWitness& a, const GroupWitness& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.carrier < b.carrier;
  });
}

GroupWitness maximal_subgroup_at_index(const CayleyTable& t, int e) {
  const int n = t.size();
  // local monoid eSe
  std::vector<char> in_local(static_cast<std::size_t>(n), 0);
  std::vector<int> local;
  for (int x = 0; x < n; ++x) {
    const int m = t.op(t.op(e, x), e);
    if (!in_local[static_cast<std::size_t>(m)]) {
      in_local[static_cast<std::size_t>(m)] = 1;
      local.push_back(m);
    }
  }
  // units of the local monoid form the maximal subgroup at e
  GroupWitness w;
  w.identity = t.label(e);
  for (int m : local) {
    for (int y : local) {
      if (t.op(m, y) == e && t.op(y, m) == e) {
        w.carrier.push_back(t.label(m));
        break;
      }
    }
  }
  std::sort(w.carrier.begin(), w.carrier.end());
  return w;
}

}  // namespace

GroupWitness maximal_subgroup_at(const CayleyTable& t, std::int64_t e) {
  if (!is_associative(t)) throw NotAssociativeError();
  auto ei = t.index_of(e);
  if (!ei) throw UnknownLabelError(e);
  const int sq = t.op(*ei, *ei);
  if (sq != *ei) throw NotIdempotentError(e, t.label(sq));
  return maximal_subgroup_at_index(t, *ei);
}

std::vector<GroupWitness> embedded_groups(const CayleyTable& t, int min_order) {
  if (!is_associative(t)) throw NotAssociativeError();
  std::vector<GroupWitness> out;
  for (int e = 0; e < t.size(); ++e) {
    if (t.op(e, e) != e) continue;
    GroupWitness w = maximal_subgroup_at_index(t, e);
    if (w.order() >= min_order) out.push_back(std::move(w));
  }
  sort_witnesses(out);
  return out;
}

std::vector<GroupWitness> brute_force_groups(const CayleyTable& t, int max_size) {
  if (!is_associative(t)) throw NotAssociativeError();
  const int n = t.size();
  if (n > 20)
    throw TooLargeError("brute-force subset enumeration is limited to 20 elements, table has " +
                        std::to_string(n));

  std::vector<GroupWitness> out;
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) > max_size) continue;

    bool closed = true;
    for (std::uint32_t rest = mask; rest && closed; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      for (std::uint32_t r2 = mask; r2; r2 &= r2 - 1) {
        const int j = std::countr_zero(r2);
        if (!(mask >> t.op(i, j) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;

    // find a two-sided identity inside the subset
    int e = -1;
    for (std::uint32_t rest = mask; rest && e < 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      bool ident = true;
      for (std::uint32_t r2 = mask; r2 && ident; r2 &= r2 - 1) {
        const int x = std::countr_zero(r2);
        ident = t.op(c, x) == x && t.op(x, c) == x;
      }
      if (ident) e = c;
    }
    if (e < 0) continue;

    bool group = true;
    for (std::uint32_t rest = mask; rest && group; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      bool inv = false;
      for (std::uint32_t r2 = mask; r2 && !inv; r2 &= r2 - 1) {
        const int y = std::countr_zero(r2);
        inv = t.op(x, y) == e && t.op(y, x) == e;
      }
      group = inv;
    }
    if (!group) continue;

    GroupWitness w;
    w.identity = t.label(e);
    for (std::uint32_t rest = mask; rest; rest &= rest - 1)
      w.carrier.push_back(t.label(std::countr_zero(rest)));
    std::sort(w.carrier.begin(), w.carrier.end());
    out.push_back(std::move(w));
  }
  sort_witnesses(out);
  return out;
}

namespace {

// proper-subset rule: not the whole carrier, not empty, and not the
// singleton of the ambient identity when one exists
bool proper_witness(const GroupWitness& w, const CayleyTable& t,
                    const std::optional<std::int64_t>& ambient_identity) {
  if (w.carrier.empty()) return false;
  if (static_cast<int>(w.carrier.size()) == t.size()) return false;
  if (ambient_identity && w.carrier.size() == 1 && w.carrier[0] == *ambient_identity)
    return false;
  return true;
}

SpecialVerdict<GroupWitness> special_group_verdict(const CayleyTable& t,
                                                   const StructureClass& cls, int min_order) {
  SpecialVerdict<GroupWitness> v;
  if (cls.kind == Kind::Group || cls.kind == Kind::AbelianGroup) {
    v.reason = SpecialReason::IsAlreadyTargetKind;
    return v;
  }
  for (GroupWitness& w : embedded_groups(t, min_order))
    if (proper_witness(w, t, cls.identity)) v.witnesses.push_back(std::move(w));
  v.special = !v.witnesses.empty();
  v.reason = v.special ? SpecialReason::Witnessed : SpecialReason::NoWitness;
  return v;
}

}  // namespace

SpecialVerdict<GroupWitness> is_special_semigroup(const CayleyTable& t, int min_order) {
  if (!is_associative(t)) throw NotAssociativeError();
  return special_group_verdict(t, classify(t), min_order);
}

SpecialVerdict<GroupWitness> is_special_monoid(const CayleyTable& t, int min_order) {
  if (!is_associative(t)) throw NotAssociativeError();
  const StructureClass cls = classify(t);
  if (!cls.identity) throw NotMonoidError();
  return special_group_verdict(t, cls, min_order);
}

}  // namespace cayley
