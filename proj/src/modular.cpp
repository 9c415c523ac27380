#include "cayley/modular.hpp"

#include <algorithm>
#include <unordered_map>

namespace cayley {

namespace {

// dense table guard: a carrier of 10k elements is a 100M-entry matrix
constexpr std::size_t kMaxDenseCarrier = 10000;

int first_occurrence(std::int64_t residue, std::vector<int>& dense,
                     std::unordered_map<std::int64_t, int>& sparse, bool use_dense) {
  if (use_dense) return dense[static_cast<std::size_t>(residue)];
  auto it = sparse.find(residue);
  return it == sparse.end() ? 0 : it->second;
}

}  // namespace

OrbitSummary power_orbit(std::int64_t a, std::int64_t n) {
  if (n < 1) throw InvalidSpecError("modulus must be >= 1");
  a %= n;
  if (a < 0) a += n;

  OrbitSummary o;
  o.base = a;
  o.modulus = n;

  const bool use_dense = n <= (1 << 24);
  std::vector<int> dense;
  std::unordered_map<std::int64_t, int> sparse;
  if (use_dense) dense.assign(static_cast<std::size_t>(n), 0);

  std::int64_t x = a % n;
  int k = 1;  // exponent of x, first-occurrence indices stored 1-based
  while (true) {
    const int prev = first_occurrence(x, dense, sparse, use_dense);
    if (prev != 0) {
      o.tail = prev;
      o.period = k - prev;
      break;
    }
    if (use_dense)
      dense[static_cast<std::size_t>(x)] = k;
    else
      sparse[x] = k;
    o.residues.push_back(x);
    x = (x * a) % n;
    ++k;
  }
  return o;
}

CayleyTable generated_mul_semigroup(std::int64_t a, std::int64_t n) {
  const OrbitSummary o = power_orbit(a, n);
  if (o.residues.size() > kMaxDenseCarrier)
    throw TooLargeError("generated carrier has " + std::to_string(o.residues.size()) +
                        " elements; dense table limit is " + std::to_string(kMaxDenseCarrier));

  const int m = static_cast<int>(o.residues.size());
  std::unordered_map<std::int64_t, int> index;
  for (int i = 0; i < m; ++i) index[o.residues[static_cast<std::size_t>(i)]] = i;

  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const std::int64_t p =
          (o.residues[static_cast<std::size_t>(i)] * o.residues[static_cast<std::size_t>(j)]) % n;
      entries.push_back(index.at(p));  // powers of a are closed under products
    }
  return CayleyTable::from_indices(o.residues, std::move(entries));
}

CayleyTable zn_table(std::vector<std::int64_t> subset, std::int64_t n, ZnLaw law) {
  if (n < 1) throw InvalidSpecError("modulus must be >= 1");
  if (subset.empty()) throw EmptySubsetError();
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (std::int64_t r : subset)
    if (r < 0 || r >= n) throw UnknownLabelError(r);
  if (subset.size() > kMaxDenseCarrier)
    throw TooLargeError("subset has " + std::to_string(subset.size()) +
                        " elements; dense table limit is " + std::to_string(kMaxDenseCarrier));

  const int m = static_cast<int>(subset.size());
  std::unordered_map<std::int64_t, int> index;
  for (int i = 0; i < m; ++i) index[subset[static_cast<std::size_t>(i)]] = i;

  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const std::int64_t x = subset[static_cast<std::size_t>(i)];
      const std::int64_t y = subset[static_cast<std::size_t>(j)];
      const std::int64_t p = law == ZnLaw::Add ? (x + y) % n : (x * y) % n;
      auto it = index.find(p);
      if (it == index.end()) throw NotClosedError(x, y, p);
      entries.push_back(it->second);
    }
  return CayleyTable::from_indices(std::move(subset), std::move(entries));
}

}  // namespace cayley
