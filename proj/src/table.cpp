#include "cayley/table.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace cayley {

namespace {

void check_labels_distinct(const std::vector<std::int64_t>& labels) {
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t l : labels) {
    if (!seen.insert(l).second) throw DuplicateLabelError(l);
  }
}

}  // namespace

CayleyTable::CayleyTable(std::vector<std::int64_t> labels,
                         const std::vector<std::vector<std::int64_t>>& entries) {
  if (labels.empty()) throw ShapeMismatchError("carrier must be nonempty");
  check_labels_distinct(labels);
  const auto n = labels.size();
  if (entries.size() != n)
    throw ShapeMismatchError("expected " + std::to_string(n) + " rows, got " +
                             std::to_string(entries.size()));

  std::unordered_map<std::int64_t, int> index;
  for (std::size_t i = 0; i < n; ++i) index[labels[i]] = static_cast<int>(i);

  entries_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n)
      throw ShapeMismatchError("row " + std::to_string(i) + " has " +
                               std::to_string(entries[i].size()) + " entries, expected " +
                               std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(entries[i][j]);
      if (it == index.end()) throw NotClosedError(labels[i], labels[j], entries[i][j]);
      entries_.push_back(it->second);
    }
  }
  labels_ = std::move(labels);
  size_ = static_cast<int>(n);
}

CayleyTable CayleyTable::from_indices(std::vector<std::int64_t> labels, std::vector<int> entries) {
  if (labels.empty()) throw ShapeMismatchError("carrier must be nonempty");
  check_labels_distinct(labels);
  const auto n = labels.size();
  if (entries.size() != n * n) throw ShapeMismatchError("index matrix is not size*size");
  for (int e : entries)
    if (e < 0 || e >= static_cast<int>(n)) throw ShapeMismatchError("index out of range");
  CayleyTable t;
  t.labels_ = std::move(labels);
  t.entries_ = std::move(entries);
  t.size_ = static_cast<int>(n);
  return t;
}

std::int64_t CayleyTable::op_label(std::int64_t x, std::int64_t y) const {
  auto i = index_of(x);
  if (!i) throw UnknownLabelError(x);
  auto j = index_of(y);
  if (!j) throw UnknownLabelError(y);
  return labels_[static_cast<std::size_t>(op(*i, *j))];
}

std::optional<int> CayleyTable::index_of(std::int64_t label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Magma: return "magma";
    case Kind::Semigroup: return "semigroup";
    case Kind::CommutativeSemigroup: return "commutative semigroup";
    case Kind::Monoid: return "monoid";
    case Kind::CommutativeMonoid: return "commutative monoid";
    case Kind::Group: return "group";
    case Kind::AbelianGroup: return "abelian group";
  }
  return "?";
}

std::vector<int> generating_set(const CayleyTable& t) {
  const int n = t.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> members, gens;
  members.reserve(static_cast<std::size_t>(n));
  int next = 0;
  std::size_t done = 0;  // pair progress: all (i, j<=i) with i < done are closed
  while (true) {
    for (std::size_t i = done; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (int p : {t.op(members[i], members[j]), t.op(members[j], members[i])}) {
          if (!seen[static_cast<std::size_t>(p)]) {
            seen[static_cast<std::size_t>(p)] = 1;
            members.push_back(p);
          }
        }
      }
      done = i + 1;
    }
    while (next < n && seen[static_cast<std::size_t>(next)]) ++next;
    if (next == n) break;
    gens.push_back(next);
    seen[static_cast<std::size_t>(next)] = 1;
    members.push_back(next);
  }
  return gens;
}

std::optional<AssociativityFailure> associativity_counterexample(const CayleyTable& t) {
  const int n = t.size();
  for (int g : generating_set(t)) {
    for (int x = 0; x < n; ++x) {
      const int xg = t.op(x, g);
      for (int y = 0; y < n; ++y) {
        if (t.op(xg, y) != t.op(x, t.op(g, y)))
          return AssociativityFailure{t.label(x), t.label(g), t.label(y)};
      }
    }
  }
  return std::nullopt;
}

bool is_associative(const CayleyTable& t) { return !associativity_counterexample(t).has_value(); }

namespace {

std::optional<int> two_sided_identity(const CayleyTable& t) {
  const int n = t.size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t.op(e, x) == x && t.op(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool all_invertible(const CayleyTable& t, int e) {
  const int n = t.size();
  for (int x = 0; x < n; ++x) {
    bool has = false;
    for (int y = 0; y < n && !has; ++y) has = t.op(x, y) == e && t.op(y, x) == e;
    if (!has) return false;
  }
  return true;
}

}  // namespace

StructureClass classify(const CayleyTable& t) {
  const int n = t.size();
  StructureClass c;

  c.commutative = true;
  for (int i = 0; i < n && c.commutative; ++i)
    for (int j = i + 1; j < n && c.commutative; ++j) c.commutative = t.op(i, j) == t.op(j, i);

  for (int i = 0; i < n; ++i)
    if (t.op(i, i) == i) c.idempotents.push_back(t.label(i));
  std::sort(c.idempotents.begin(), c.idempotents.end());

  const bool assoc = is_associative(t);
  const auto e = two_sided_identity(t);

  if (!assoc) {
    c.kind = Kind::Magma;
    return c;
  }
  if (e && all_invertible(t, *e))
    c.kind = c.commutative ? Kind::AbelianGroup : Kind::Group;
  else if (e)
    c.kind = c.commutative ? Kind::CommutativeMonoid : Kind::Monoid;
  else
    c.kind = c.commutative ? Kind::CommutativeSemigroup : Kind::Semigroup;
  if (e) c.identity = t.label(*e);
  return c;
}

CayleyTable restrict_to(const CayleyTable& t, std::span<const std::int64_t> subset) {
  if (subset.empty()) throw EmptySubsetError();

  std::vector<char> keep(static_cast<std::size_t>(t.size()), 0);
  for (std::int64_t l : subset) {
    auto i = t.index_of(l);
    if (!i) throw UnknownLabelError(l);
    keep[static_cast<std::size_t>(*i)] = 1;
  }

  // ambient order, not the order the subset was given in
  std::vector<int> ambient;
  for (int i = 0; i < t.size(); ++i)
    if (keep[static_cast<std::size_t>(i)]) ambient.push_back(i);

  const int m = static_cast<int>(ambient.size());
  std::vector<int> pos(static_cast<std::size_t>(t.size()), -1);
  for (int k = 0; k < m; ++k) pos[static_cast<std::size_t>(ambient[k])] = k;

  std::vector<std::int64_t> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int i : ambient) labels.push_back(t.label(i));

  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i : ambient) {
    for (int j : ambient) {
      const int p = t.op(i, j);
      if (!keep[static_cast<std::size_t>(p)])
        throw NotClosedError(t.label(i), t.label(j), t.label(p));
      entries.push_back(pos[static_cast<std::size_t>(p)]);
    }
  }
  return CayleyTable::from_indices(std::move(labels), std::move(entries));
}

bool is_refinement(Kind weaker, Kind stronger) {
  // axiom bitmask: associativity, commutativity, identity, inverses
  auto axioms = [](Kind k) -> unsigned {
    switch (k) {
      case Kind::Magma: return 0u;
      case Kind::Semigroup: return 0b0001u;
      case Kind::CommutativeSemigroup: return 0b0011u;
      case Kind::Monoid: return 0b0101u;
      case Kind::CommutativeMonoid: return 0b0111u;
      case Kind::Group: return 0b1101u;
      case Kind::AbelianGroup: return 0b1111u;
    }
    return 0u;
  };
  const unsigned a = axioms(weaker), b = axioms(stronger);
  return a != b && (a & b) == a;
}

}  // namespace cayley
