#pragma once

// Scalar 2-cocycles on small racks, valued in the m-th roots of unity and
// stored as exponents mod m. The braiding c(e_x (x) e_y) = q(x, y) e_{x|>y} (x) e_x
// satisfies the braid equation exactly when q is a 2-cocycle; both sides are
// checked here independently so the equivalence can be swept exhaustively.

#include <cstdint>
#include <optional>
#include <vector>

#include "racklab/rack.hpp"

namespace racklab {

struct ScalarCocycle {
  const FiniteRack* rack = nullptr;
  int m = 2;
  // table[x * |X| + y] = exponent of q(x, y), in [0, m).
  std::vector<int> table;

  static ScalarCocycle constant(const FiniteRack& rack, int m, int exponent);
  int operator()(ElementIndex x, ElementIndex y) const { return table[static_cast<std::size_t>(x) * rack->size() + y]; }
};

struct TripleCheck {
  bool holds = true;
  ElementIndex x = 0, y = 0, z = 0;
};

// q(x, y |> z) q(y, z) = q(x |> y, x |> z) q(x, z) for all triples.
TripleCheck check_cocycle(const ScalarCocycle& q);

// Monomial map on the basis e_x (x) e_y of V (x) V, indexed x * |X| + y.
struct BraidingMatrix {
  std::size_t n = 0;  // |X|
  int m = 2;
  std::vector<std::uint32_t> target;
  std::vector<int> exponent;

  static BraidingMatrix of(const ScalarCocycle& q);
  // The inverse monomial map: c^-1(e_u (x) e_v) = q(v, y)^-1 e_v (x) e_y with v |> y = u.
  BraidingMatrix inverse() const;

  // The image of basis vector `index` with coefficient exponent `scale`.
  std::pair<std::uint32_t, int> apply(std::uint32_t index, int scale) const {
    return {target[index], (scale + exponent[index]) % m};
  }
};

// Both sides of (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on
// every basis vector e_x (x) e_y (x) e_z.
TripleCheck check_braid(const ScalarCocycle& q);

struct SweepOptions {
  // Largest number of tables visited.
  std::uint64_t limit = 1'000'000;
  // When set, draw `limit` random tables with this seed instead of failing
  // on a table space larger than the limit.
  std::optional<std::uint64_t> sample_seed;
};

struct SweepReport {
  std::uint64_t tables = 0;
  std::uint64_t cocycles = 0;
  std::uint64_t braidings = 0;
  // Tables where exactly one of the two checks holds.
  std::uint64_t cocycle_not_braid = 0;
  std::uint64_t braid_not_cocycle = 0;
  bool exhaustive = true;

  bool equivalent() const { return cocycle_not_braid == 0 && braid_not_cocycle == 0; }
};

// Visits all m^(|X|^2) tables, or a seeded sample. Throws CapExceeded when the
// space exceeds the limit and no sample seed is given.
SweepReport equivalence_sweep(const FiniteRack& rack, int m, const SweepOptions& options = {});

}  // namespace racklab
