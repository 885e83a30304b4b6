#include <random>

#include "doctest.h"
#include "racklab/cocycle.hpp"
#include "racklab/constructions.hpp"

using namespace racklab;

namespace {

FiniteRack sym3_transpositions() {
  const Permutation t12 = Permutation::parse("(1 2)", 3);
  return conjugation_rack(twisted_orbit(GroupKind::symmetric, 3, Twist::identity(), t12));
}

FiniteRack trivial_rack() { return FiniteRack::from_table("trivial", 1, {0}); }

ScalarCocycle random_cocycle(const FiniteRack& rack, int m, std::mt19937& rng) {
  ScalarCocycle q = ScalarCocycle::constant(rack, m, 0);
  for (auto& v : q.table) v = static_cast<int>(rng() % static_cast<unsigned>(m));
  return q;
}

}  // namespace

TEST_CASE("constant cocycles") {
  const FiniteRack rack = permutation_rack(3);
  for (int e = 0; e < 5; ++e) {
    const auto q = ScalarCocycle::constant(rack, 5, e);
    CHECK(check_cocycle(q).holds);
    CHECK(check_braid(q).holds);
  }
  CHECK_THROWS_AS(ScalarCocycle::constant(rack, 0, 0), ParameterError);
}

TEST_CASE("exhaustive sweeps") {
  const auto perm3 = equivalence_sweep(permutation_rack(3), 2);
  CHECK(perm3.tables == 512);
  CHECK(perm3.cocycles == 8);
  CHECK(perm3.braidings == 8);
  CHECK(perm3.equivalent());
  CHECK(perm3.exhaustive);

  const auto perm2 = equivalence_sweep(permutation_rack(2), 2);
  CHECK(perm2.tables == 16);
  CHECK(perm2.cocycles == 4);
  CHECK(perm2.equivalent());

  const auto transpositions = equivalence_sweep(sym3_transpositions(), 3);
  CHECK(transpositions.tables == 19683);
  CHECK(transpositions.cocycles == 27);
  CHECK(transpositions.equivalent());

  const auto transpositions2 = equivalence_sweep(sym3_transpositions(), 2);
  CHECK(transpositions2.tables == 512);
  CHECK(transpositions2.cocycles == 8);

  for (int m = 1; m <= 4; ++m) {
    const auto one = equivalence_sweep(trivial_rack(), m);
    CHECK(one.tables == static_cast<std::uint64_t>(m));
    CHECK(one.cocycles == static_cast<std::uint64_t>(m));
    CHECK(one.equivalent());
  }
}

TEST_CASE("a non-cocycle fails the braid equation") {
  const FiniteRack rack = permutation_rack(3);
  auto q = ScalarCocycle::constant(rack, 2, 0);
  q.table[0] = 1;
  const auto cocycle = check_cocycle(q);
  CHECK_FALSE(cocycle.holds);
  CHECK_FALSE(check_braid(q).holds);
}

TEST_CASE("random tables agree between the two checks") {
  std::mt19937 rng(29);
  const FiniteRack rack = conjugation_rack(
      twisted_orbit(GroupKind::symmetric, 4, Twist::identity(), Permutation::parse("(1 2 3)", 4)));
  for (int k = 0; k < 300; ++k) {
    const auto q = random_cocycle(rack, 3, rng);
    CHECK(check_cocycle(q).holds == check_braid(q).holds);
  }
}

TEST_CASE("sweep limits and sampling") {
  CHECK_THROWS_AS(equivalence_sweep(permutation_rack(5), 3, SweepOptions{1000, std::nullopt}), CapExceeded);
  const auto sampled = equivalence_sweep(permutation_rack(5), 3, SweepOptions{1000, 42});
  CHECK(sampled.tables == 1000);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.equivalent());
  const auto again = equivalence_sweep(permutation_rack(5), 3, SweepOptions{1000, 42});
  CHECK(again.cocycles == sampled.cocycles);
}

TEST_CASE("the braiding is invertible") {
  std::mt19937 rng(31);
  const FiniteRack rack = sym3_transpositions();
  for (int k = 0; k < 50; ++k) {
    const auto q = random_cocycle(rack, 4, rng);
    const auto c = BraidingMatrix::of(q);
    const auto inverse = c.inverse();
    for (std::uint32_t i = 0; i < c.target.size(); ++i) {
      const auto [j, scale] = c.apply(i, 0);
      const auto [back, total] = inverse.apply(j, scale);
      CHECK(back == i);
      CHECK(total == 0);
    }
  }
}

TEST_CASE("the unit braiding detects a corrupted rack table") {
  const FiniteRack good = permutation_rack(3);
  CHECK(check_braid(ScalarCocycle::constant(good, 2, 0)).holds);
  std::vector<ElementIndex> table;
  for (ElementIndex x = 0; x < 3; ++x) {
    for (ElementIndex y = 0; y < 3; ++y) table.push_back(good.op(x, y));
  }
  // Row 0 becomes the transposition of 1 and 2; rows stay bijective.
  table[0] = 0;
  table[1] = 2;
  table[2] = 1;
  const FiniteRack bad = FiniteRack::from_table("corrupt", 3, table);
  CHECK_FALSE(verify_axioms(bad).valid());
  CHECK_FALSE(check_braid(ScalarCocycle::constant(bad, 2, 0)).holds);
}
