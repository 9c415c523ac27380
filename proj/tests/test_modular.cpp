#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/modular.hpp"
#include "cayley/table.hpp"

#include "oracles.hpp"

using namespace cayley;

TEST_CASE("power_orbit pins the published tail and period for 18 mod 60") {
  const OrbitSummary o = power_orbit(18, 60);
  CHECK(o.base == 18);
  CHECK(o.modulus == 60);
  CHECK(o.residues == std::vector<std::int64_t>{18, 24, 12, 36, 48});
  CHECK(o.tail == 2);
  CHECK(o.period == 4);
}

TEST_CASE("power_orbit worked values") {
  const OrbitSummary o1 = power_orbit(2, 7);
  CHECK(o1.residues == std::vector<std::int64_t>{2, 4, 1});
  CHECK(o1.tail == 1);
  CHECK(o1.period == 3);

  const OrbitSummary o2 = power_orbit(1, 5);
  CHECK(o2.residues == std::vector<std::int64_t>{1});
  CHECK(o2.tail == 1);
  CHECK(o2.period == 1);

  const OrbitSummary o3 = power_orbit(2, 8);
  CHECK(o3.residues == std::vector<std::int64_t>{2, 4, 0});
  CHECK(o3.tail == 3);
  CHECK(o3.period == 1);

  const OrbitSummary o4 = power_orbit(0, 5);
  CHECK(o4.residues == std::vector<std::int64_t>{0});
  CHECK(o4.tail == 1);
  CHECK(o4.period == 1);

  // n = 1 collapses everything to the zero residue
  const OrbitSummary o5 = power_orbit(7, 1);
  CHECK(o5.residues == std::vector<std::int64_t>{0});
  CHECK(o5.tail == 1);
  CHECK(o5.period == 1);
}

TEST_CASE("power_orbit reduces the base and rejects bad moduli") {
  const OrbitSummary o = power_orbit(78, 60);
  CHECK(o.base == 18);
  CHECK(o.residues == power_orbit(18, 60).residues);
  const OrbitSummary neg = power_orbit(-42, 60);
  CHECK(neg.base == 18);
  CHECK_THROWS_AS(power_orbit(3, 0), InvalidSpecError);
  CHECK_THROWS_AS(power_orbit(3, -5), InvalidSpecError);
}

TEST_CASE("orbit congruence holds exactly and residue lists are consistent") {
  for (std::int64_t n = 2; n <= 1000; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      const OrbitSummary o = power_orbit(a, n);
      REQUIRE(o.residues.size() == static_cast<std::size_t>(o.tail + o.period - 1));
      // a^(s+p) = a^s checked through an independent square-and-multiply
      REQUIRE(oracles::mod_pow(a, o.tail + o.period, n) == oracles::mod_pow(a, o.tail, n));
      REQUIRE(o.residues[0] == a % n);
    }
}

TEST_CASE("orbit tail and period are componentwise minimal") {
  for (std::int64_t n = 2; n <= 250; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      const OrbitSummary o = power_orbit(a, n);
      // re-iterate the map directly and find the first repeated residue
      std::vector<std::int64_t> seq;
      std::int64_t x = a % n;
      int first = 0, again = 0;
      while (true) {
        bool repeated = false;
        for (std::size_t k = 0; k < seq.size(); ++k) {
          if (seq[k] == x) {
            first = static_cast<int>(k) + 1;
            again = static_cast<int>(seq.size()) + 1;
            repeated = true;
            break;
          }
        }
        if (repeated) break;
        seq.push_back(x);
        x = (x * a) % n;
      }
      REQUIRE(o.tail == first);
      REQUIRE(o.period == again - first);
      REQUIRE(o.residues == seq);
      // distinctness of the stored residues
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) REQUIRE(seq[i] != seq[j]);
    }
}

TEST_CASE("coprime bases have tail one and period equal to the multiplicative order") {
  for (std::int64_t n = 1; n <= 200; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      if (oracles::gcd_of(a, n) != 1) continue;
      const OrbitSummary o = power_orbit(a, n);
      REQUIRE(o.tail == 1);
      REQUIRE(o.period == oracles::multiplicative_order(a, n));
    }
}

TEST_CASE("generated_mul_semigroup carrier equals the orbit and is closed") {
  for (std::int64_t n = 1; n <= 60; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      const OrbitSummary o = power_orbit(a, n);
      const CayleyTable t = generated_mul_semigroup(a, n);
      REQUIRE(std::vector<std::int64_t>(t.labels().begin(), t.labels().end()) == o.residues);
      // entries are the products mod n (closure is structural)
      for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j)
          REQUIRE(t.label(t.op(i, j)) == t.label(i) * t.label(j) % n);
    }
}

TEST_CASE("generated semigroup worked examples") {
  const CayleyTable ss = generated_mul_semigroup(18, 60);
  CHECK(std::vector<std::int64_t>(ss.labels().begin(), ss.labels().end()) ==
        std::vector<std::int64_t>{18, 24, 12, 36, 48});
  const std::vector<std::vector<std::int64_t>> expected{{24, 12, 36, 48, 24},
                                                        {12, 36, 48, 24, 12},
                                                        {36, 48, 24, 12, 36},
                                                        {48, 24, 12, 36, 48},
                                                        {24, 12, 36, 48, 24}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(ss.label(ss.op(i, j)) == expected[i][j]);

  const CayleyTable c3 = generated_mul_semigroup(2, 7);
  CHECK(std::vector<std::int64_t>(c3.labels().begin(), c3.labels().end()) ==
        std::vector<std::int64_t>{2, 4, 1});
  const StructureClass cls = classify(c3);
  CHECK(cls.kind == Kind::AbelianGroup);
  CHECK(*cls.identity == 1);

  const CayleyTable trivial = generated_mul_semigroup(0, 5);
  CHECK(trivial.size() == 1);
  CHECK(trivial.label(0) == 0);
}

TEST_CASE("generated carriers past the dense limit are rejected") {
  // 2 generates the full unit group mod 3^9 = 19683; its order 13122 exceeds
  // the 10000-element table limit, while the orbit itself is still fine
  const OrbitSummary o = power_orbit(2, 19683);
  CHECK(o.tail == 1);
  CHECK(o.period == 13122);
  CHECK_THROWS_AS(generated_mul_semigroup(2, 19683), TooLargeError);
}

TEST_CASE("zn_table builds the additive group M with identity 0") {
  const CayleyTable m = zn_table({0, 12, 24, 36, 48}, 60, ZnLaw::Add);
  const StructureClass cls = classify(m);
  CHECK(cls.kind == Kind::AbelianGroup);
  REQUIRE(cls.identity.has_value());
  CHECK(*cls.identity == 0);
}

TEST_CASE("zn_table under multiplication matches the restricted generated table") {
  const CayleyTable a = zn_table({24, 12, 36, 48}, 60, ZnLaw::Mul);
  const CayleyTable b = restrict_to(generated_mul_semigroup(18, 60), std::vector<std::int64_t>{24, 12, 36, 48});
  // zn_table sorts its labels, the restriction keeps generated order; the
  // structures must still agree label-for-label
  CHECK(std::vector<std::int64_t>(a.labels().begin(), a.labels().end()) ==
        std::vector<std::int64_t>{12, 24, 36, 48});
  for (std::int64_t x : a.labels())
    for (std::int64_t y : a.labels()) CHECK(a.op_label(x, y) == b.op_label(x, y));
}

TEST_CASE("zn_table validates subset and closure") {
  CHECK_THROWS_AS(zn_table({}, 60, ZnLaw::Mul), EmptySubsetError);
  CHECK_THROWS_AS(zn_table({0, 60}, 60, ZnLaw::Mul), UnknownLabelError);
  CHECK_THROWS_AS(zn_table({-1, 0}, 60, ZnLaw::Mul), UnknownLabelError);
  CHECK_THROWS_AS(zn_table({1}, 0, ZnLaw::Mul), InvalidSpecError);
  try {
    zn_table({18, 24}, 60, ZnLaw::Mul);
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    CHECK(e.left() * e.right() % 60 == e.product());
    CHECK((e.product() != 18 && e.product() != 24));
  }
}

TEST_CASE("additive zn_table succeeds exactly on the divisor subgroups") {
  // the subgroup lattice of Z_n: dZ_n for each divisor d
  for (std::int64_t n = 1; n <= 120; ++n)
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      std::vector<std::int64_t> subset;
      for (std::int64_t x = 0; x < n; x += d) subset.push_back(x);
      const CayleyTable t = zn_table(subset, n, ZnLaw::Add);
      CHECK(classify(t).kind == Kind::AbelianGroup);
    }

  // and on nothing else: exhaustive over all nonempty subsets for small n
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::int64_t> subset;
      for (std::int64_t x = 0; x < n; ++x)
        if (mask >> x & 1u) subset.push_back(x);
      bool closed = true;
      try {
        zn_table(subset, n, ZnLaw::Add);
      } catch (const NotClosedError&) {
        closed = false;
      }
      const bool divisor_subgroup = [&] {
        if (subset[0] != 0) return false;
        const std::int64_t d = subset.size() == 1 ? n : subset[1];
        if (n % d != 0) return false;
        std::vector<std::int64_t> expect;
        for (std::int64_t x = 0; x < n; x += d) expect.push_back(x);
        return subset == expect;
      }();
      CHECK(closed == divisor_subgroup);
    }
  }
}
