#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/modular.hpp"
#include "cayley/table.hpp"

#include "oracles.hpp"

using namespace cayley;

namespace {

// the four-element multiplicative group {24, 12, 36, 48} mod 60
CayleyTable sg_table() {
  return CayleyTable({24, 12, 36, 48}, {{36, 48, 24, 12},
                                        {48, 24, 12, 36},
                                        {24, 12, 36, 48},
                                        {12, 36, 48, 24}});
}

CayleyTable z6_mul() {
  std::vector<std::int64_t> labels{0, 1, 2, 3, 4, 5};
  std::vector<std::vector<std::int64_t>> rows;
  for (std::int64_t i = 0; i < 6; ++i) {
    std::vector<std::int64_t> row;
    for (std::int64_t j = 0; j < 6; ++j) row.push_back(i * j % 6);
    rows.push_back(row);
  }
  return CayleyTable(labels, rows);
}

CayleyTable random_table(std::mt19937& rng, int n) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int& e : entries) e = pick(rng);
  return CayleyTable::from_indices(std::move(labels), std::move(entries));
}

}  // namespace

TEST_CASE("construction validates labels and entries") {
  CHECK_THROWS_AS(CayleyTable({1, 1}, {{1, 1}, {1, 1}}), DuplicateLabelError);
  CHECK_THROWS_AS(CayleyTable({1, 2}, {{1, 2}}), ShapeMismatchError);
  CHECK_THROWS_AS(CayleyTable({1, 2}, {{1, 2}, {1, 2, 1}}), ShapeMismatchError);
  CHECK_THROWS_AS(CayleyTable({}, {}), ShapeMismatchError);

  try {
    CayleyTable({1, 2}, {{1, 2}, {2, 7}});
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    CHECK(e.left() == 2);
    CHECK(e.right() == 2);
    CHECK(e.product() == 7);
  }
}

TEST_CASE("from_indices validates shape and range") {
  CHECK_THROWS_AS(CayleyTable::from_indices({1, 2}, {0, 1, 1}), ShapeMismatchError);
  CHECK_THROWS_AS(CayleyTable::from_indices({1, 2}, {0, 1, 1, 2}), ShapeMismatchError);
  CHECK_THROWS_AS(CayleyTable::from_indices({1, 2}, {0, 1, 1, -1}), ShapeMismatchError);
  const CayleyTable t = CayleyTable::from_indices({5, 9}, {0, 1, 1, 0});
  CHECK(t.op_label(5, 9) == 9);
  CHECK(t.op_label(9, 9) == 5);
}

TEST_CASE("op_label rejects labels outside the carrier") {
  const CayleyTable t = sg_table();
  CHECK(t.op_label(24, 24) == 36);
  CHECK_THROWS_AS(t.op_label(24, 7), UnknownLabelError);
  CHECK_THROWS_AS(t.op_label(7, 24), UnknownLabelError);
  CHECK(!t.index_of(7).has_value());
}

TEST_CASE("classify recognizes the four-element group with identity 36") {
  const StructureClass cls = classify(sg_table());
  CHECK(cls.kind == Kind::AbelianGroup);
  CHECK(cls.commutative);
  REQUIRE(cls.identity.has_value());
  CHECK(*cls.identity == 36);
  CHECK(cls.idempotents == std::vector<std::int64_t>{36});
}

TEST_CASE("classify recognizes the five-element commutative semigroup") {
  const CayleyTable ss = generated_mul_semigroup(18, 60);
  const StructureClass cls = classify(ss);
  CHECK(cls.kind == Kind::CommutativeSemigroup);
  CHECK(cls.commutative);
  CHECK(!cls.identity.has_value());
  CHECK(cls.idempotents == std::vector<std::int64_t>{36});
}

TEST_CASE("classify covers the remaining kinds") {
  // multiplication mod 6: commutative monoid, identity 1, not a group
  const StructureClass m = classify(z6_mul());
  CHECK(m.kind == Kind::CommutativeMonoid);
  REQUIRE(m.identity.has_value());
  CHECK(*m.identity == 1);
  CHECK(m.idempotents == std::vector<std::int64_t>{0, 1, 3, 4});

  // left-zero band: x*y = x, associative, no identity, not commutative
  const CayleyTable left_zero = CayleyTable::from_indices({10, 20}, {0, 0, 1, 1});
  const StructureClass lz = classify(left_zero);
  CHECK(lz.kind == Kind::Semigroup);
  CHECK(!lz.commutative);
  CHECK(!lz.identity.has_value());
  CHECK(lz.idempotents == std::vector<std::int64_t>{10, 20});

  // S3 as permutation composition: a group that is not abelian
  std::array<int, 3> work{0, 1, 2};
  std::vector<std::array<int, 3>> perms{work};
  while (std::next_permutation(work.begin(), work.end())) perms.push_back(work);
  REQUIRE(perms.size() == 6);
  std::vector<int> entries;
  for (const std::array<int, 3>& p : perms)
    for (const std::array<int, 3>& q : perms) {
      const std::array<int, 3> composed{p[q[0]], p[q[1]], p[q[2]]};
      entries.push_back(static_cast<int>(
          std::find(perms.begin(), perms.end(), composed) - perms.begin()));
    }
  const CayleyTable s3t = CayleyTable::from_indices({0, 1, 2, 3, 4, 5}, std::move(entries));
  REQUIRE(oracles::naive_associative(s3t));
  const StructureClass g = classify(s3t);
  CHECK(g.kind == Kind::Group);
  CHECK(!g.commutative);
  REQUIRE(g.identity.has_value());
  CHECK(*g.identity == 0);

  // monoid that is not commutative: adjoin an identity to the left-zero band
  const CayleyTable lz1 = CayleyTable::from_indices(
      {0, 10, 20}, {0, 1, 2, 1, 1, 1, 2, 2, 2});
  REQUIRE(oracles::naive_associative(lz1));
  const StructureClass mo = classify(lz1);
  CHECK(mo.kind == Kind::Monoid);
  REQUIRE(mo.identity.has_value());
  CHECK(*mo.identity == 0);
}

TEST_CASE("non-associative tables classify as magma with no identity reported") {
  // has a two-sided identity (0) yet fails associativity
  const CayleyTable t = CayleyTable::from_indices(
      {0, 1, 2}, {0, 1, 2, 1, 2, 1, 2, 1, 1});
  REQUIRE(!oracles::naive_associative(t));
  const StructureClass cls = classify(t);
  CHECK(cls.kind == Kind::Magma);
  CHECK(!cls.identity.has_value());
}

TEST_CASE("light's test agrees with the naive oracle on generated semigroups") {
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      const CayleyTable t = generated_mul_semigroup(a, n);
      CHECK(is_associative(t));
      CHECK(oracles::naive_associative(t));
    }
}

TEST_CASE("light's test agrees with the naive oracle on random tables") {
  std::mt19937 rng(20240612);
  std::uniform_int_distribution<int> size(1, 6);
  int disagreements = 0;
  int associative_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const CayleyTable t = random_table(rng, size(rng));
    const bool naive = oracles::naive_associative(t);
    if (naive) ++associative_seen;
    if (is_associative(t) != naive) ++disagreements;

    const auto failure = associativity_counterexample(t);
    CHECK(failure.has_value() == !naive);
    if (failure) {
      // the reported triple must genuinely violate associativity
      const std::int64_t lhs = t.op_label(t.op_label(failure->x, failure->y), failure->z);
      const std::int64_t rhs = t.op_label(failure->x, t.op_label(failure->y, failure->z));
      CHECK(lhs != rhs);
    }
  }
  CHECK(disagreements == 0);
  CHECK(associative_seen > 0);  // size-1 tables keep the corpus from being all-negative
}

TEST_CASE("every associative table has an idempotent") {
  std::mt19937 rng(987);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const CayleyTable t = random_table(rng, size(rng));
    if (is_associative(t)) CHECK(!classify(t).idempotents.empty());
  }
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      CHECK(!classify(generated_mul_semigroup(a, n)).idempotents.empty());
}

TEST_CASE("group classification implies latin-square rows and columns") {
  for (const CayleyTable& t :
       {sg_table(), zn_table({0, 12, 24, 36, 48}, 60, ZnLaw::Add), generated_mul_semigroup(2, 7)}) {
    const StructureClass cls = classify(t);
    REQUIRE((cls.kind == Kind::Group || cls.kind == Kind::AbelianGroup));
    const int n = t.size();
    for (int i = 0; i < n; ++i) {
      std::vector<char> row(static_cast<std::size_t>(n), 0), col(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(t.op(i, j))] = 1;
        col[static_cast<std::size_t>(t.op(j, i))] = 1;
      }
      CHECK(std::count(row.begin(), row.end(), 1) == n);
      CHECK(std::count(col.begin(), col.end(), 1) == n);
    }
  }
}

TEST_CASE("generating_set generates and light's test uses it soundly") {
  for (std::int64_t n = 2; n <= 20; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      const CayleyTable t = generated_mul_semigroup(a, n);
      const std::vector<int> gens = generating_set(t);
      CHECK(!gens.empty());
      // closure of the generators reaches the whole carrier
      std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
      std::vector<int> work;
      for (int g : gens) {
        if (!seen[static_cast<std::size_t>(g)]) {
          seen[static_cast<std::size_t>(g)] = 1;
          work.push_back(g);
        }
      }
      for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < work.size(); ++j) {
          for (int p : {t.op(work[i], work[j]), t.op(work[j], work[i])}) {
            if (!seen[static_cast<std::size_t>(p)]) {
              seen[static_cast<std::size_t>(p)] = 1;
              work.push_back(p);
            }
          }
        }
      CHECK(std::count(seen.begin(), seen.end(), 1) == t.size());
    }
}

TEST_CASE("restrict keeps ambient order and checks closure") {
  const CayleyTable ss = generated_mul_semigroup(18, 60);

  const CayleyTable sg = restrict_to(ss, std::vector<std::int64_t>{48, 36, 12, 24});
  // ambient order of SS is 18, 24, 12, 36, 48; the subset keeps it
  CHECK(std::vector<std::int64_t>(sg.labels().begin(), sg.labels().end()) ==
        std::vector<std::int64_t>{24, 12, 36, 48});
  CHECK(sg == sg_table());

  CHECK_THROWS_AS(restrict_to(ss, std::vector<std::int64_t>{}), EmptySubsetError);
  CHECK_THROWS_AS(restrict_to(ss, std::vector<std::int64_t>{24, 7}), UnknownLabelError);
  try {
    restrict_to(ss, std::vector<std::int64_t>{18, 24});
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    // the offending pair must re-verify against the ambient operation
    CHECK(ss.op_label(e.left(), e.right()) == e.product());
    CHECK((e.product() != 18 && e.product() != 24));
  }
}

TEST_CASE("restriction of an associative table stays associative") {
  const CayleyTable z12 = zn_table(
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, 12, ZnLaw::Mul);
  REQUIRE(oracles::naive_associative(z12));
  // every multiplicatively closed subset of Z_12 found by brute force
  for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
    if (!oracles::subset_closed(z12, mask)) continue;
    std::vector<std::int64_t> subset;
    for (std::uint32_t r = mask; r; r &= r - 1)
      subset.push_back(z12.label(std::countr_zero(r)));
    CHECK(oracles::naive_associative(restrict_to(z12, subset)));
  }
}

TEST_CASE("kind names match the reporting vocabulary") {
  CHECK(kind_name(Kind::Magma) == "magma");
  CHECK(kind_name(Kind::Semigroup) == "semigroup");
  CHECK(kind_name(Kind::CommutativeSemigroup) == "commutative semigroup");
  CHECK(kind_name(Kind::Monoid) == "monoid");
  CHECK(kind_name(Kind::CommutativeMonoid) == "commutative monoid");
  CHECK(kind_name(Kind::Group) == "group");
  CHECK(kind_name(Kind::AbelianGroup) == "abelian group");
}

TEST_CASE("is_refinement is the strict axiom-subset order") {
  const std::vector<Kind> kinds{Kind::Magma,  Kind::Semigroup, Kind::CommutativeSemigroup,
                                Kind::Monoid, Kind::CommutativeMonoid, Kind::Group,
                                Kind::AbelianGroup};

  CHECK(is_refinement(Kind::Semigroup, Kind::Monoid));
  CHECK(is_refinement(Kind::Monoid, Kind::Group));
  CHECK(is_refinement(Kind::Semigroup, Kind::CommutativeSemigroup));
  CHECK(is_refinement(Kind::Group, Kind::AbelianGroup));
  CHECK(is_refinement(Kind::Magma, Kind::AbelianGroup));
  CHECK(!is_refinement(Kind::Group, Kind::Group));
  CHECK(!is_refinement(Kind::Monoid, Kind::Semigroup));
  CHECK(!is_refinement(Kind::CommutativeSemigroup, Kind::Monoid));
  CHECK(!is_refinement(Kind::Monoid, Kind::CommutativeSemigroup));
  CHECK(!is_refinement(Kind::CommutativeMonoid, Kind::Group));

  for (Kind a : kinds) {
    CHECK(!is_refinement(a, a));  // irreflexive
    for (Kind b : kinds) {
      CHECK(!(is_refinement(a, b) && is_refinement(b, a)));  // asymmetric
      for (Kind c : kinds)
        if (is_refinement(a, b) && is_refinement(b, c)) CHECK(is_refinement(a, c));
    }
  }
}
