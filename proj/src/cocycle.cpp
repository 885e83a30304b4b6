#include "racklab/cocycle.hpp"

#include <random>

namespace racklab {

ScalarCocycle ScalarCocycle::constant(const FiniteRack& rack, int m, int exponent) {
  if (m < 1) throw ParameterError("m must be positive");
  return ScalarCocycle{&rack, m, std::vector<int>(rack.size() * rack.size(), ((exponent % m) + m) % m)};
}

TripleCheck check_cocycle(const ScalarCocycle& q) {
  const FiniteRack& rack = *q.rack;
  const auto n = static_cast<ElementIndex>(rack.size());
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      const ElementIndex xy = rack.op(x, y);
      for (ElementIndex z = 0; z < n; ++z) {
        const int lhs = q(x, rack.op(y, z)) + q(y, z);
        const int rhs = q(xy, rack.op(x, z)) + q(x, z);
        if ((lhs - rhs) % q.m != 0) return {false, x, y, z};
      }
    }
  }
  return {};
}

BraidingMatrix BraidingMatrix::of(const ScalarCocycle& q) {
  const FiniteRack& rack = *q.rack;
  BraidingMatrix c;
  c.n = rack.size();
  c.m = q.m;
  c.target.resize(c.n * c.n);
  c.exponent.resize(c.n * c.n);
  for (ElementIndex x = 0; x < c.n; ++x) {
    for (ElementIndex y = 0; y < c.n; ++y) {
      const std::size_t i = x * c.n + y;
      c.target[i] = static_cast<std::uint32_t>(rack.op(x, y) * c.n + x);
      c.exponent[i] = q(x, y);
    }
  }
  return c;
}

BraidingMatrix BraidingMatrix::inverse() const {
  BraidingMatrix inv;
  inv.n = n;
  inv.m = m;
  inv.target.assign(n * n, 0);
  inv.exponent.assign(n * n, 0);
  std::vector<bool> hit(n * n, false);
  for (std::size_t i = 0; i < n * n; ++i) {
    const std::uint32_t j = target[i];
    if (hit[j]) throw ParameterError("braiding is not invertible: rack row is not a bijection");
    hit[j] = true;
    inv.target[j] = static_cast<std::uint32_t>(i);
    inv.exponent[j] = (m - exponent[i]) % m;
  }
  return inv;
}

TripleCheck check_braid(const ScalarCocycle& q) {
  const BraidingMatrix c = BraidingMatrix::of(q);
  const std::size_t n = c.n;
  struct Vec {
    std::uint32_t a, b, d;
    int e;
  };
  // c on the first two factors, then on the last two.
  auto left = [&](Vec v) {
    const auto [t, e] = c.apply(static_cast<std::uint32_t>(v.a * n + v.b), v.e);
    return Vec{static_cast<std::uint32_t>(t / n), static_cast<std::uint32_t>(t % n), v.d, e};
  };
  auto right = [&](Vec v) {
    const auto [t, e] = c.apply(static_cast<std::uint32_t>(v.b * n + v.d), v.e);
    return Vec{v.a, static_cast<std::uint32_t>(t / n), static_cast<std::uint32_t>(t % n), e};
  };
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        const Vec start{x, y, z, 0};
        const Vec lhs = left(right(left(start)));
        const Vec rhs = right(left(right(start)));
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.d != rhs.d || lhs.e != rhs.e) return {false, x, y, z};
      }
    }
  }
  return {};
}

SweepReport equivalence_sweep(const FiniteRack& rack, int m, const SweepOptions& options) {
  if (m < 1) throw ParameterError("m must be positive");
  const std::size_t cells = rack.size() * rack.size();
  // m^cells, saturating just above the limit.
  std::uint64_t space = 1;
  bool over = false;
  for (std::size_t i = 0; i < cells && !over; ++i) {
    if (space > options.limit / static_cast<std::uint64_t>(m)) over = true;
    space *= static_cast<std::uint64_t>(m);
  }
  over = over || space > options.limit;

  SweepReport report;
  ScalarCocycle q{&rack, m, std::vector<int>(cells, 0)};
  auto visit = [&]() {
    const bool cocycle = check_cocycle(q).holds;
    const bool braid = check_braid(q).holds;
    ++report.tables;
    report.cocycles += cocycle;
    report.braidings += braid;
    report.cocycle_not_braid += cocycle && !braid;
    report.braid_not_cocycle += braid && !cocycle;
  };

  if (over) {
    if (!options.sample_seed) {
      throw CapExceeded(std::to_string(m) + "^" + std::to_string(cells) + " tables exceed the limit of " +
                        std::to_string(options.limit) + "; pass a sample seed");
    }
    report.exhaustive = false;
    std::mt19937_64 rng(*options.sample_seed);
    std::uniform_int_distribution<int> digit(0, m - 1);
    for (std::uint64_t k = 0; k < options.limit; ++k) {
      for (auto& v : q.table) v = digit(rng);
      visit();
    }
    return report;
  }

  while (true) {
    visit();
    std::size_t pos = 0;
    while (pos < cells && ++q.table[pos] == m) q.table[pos++] = 0;
    if (pos == cells) break;
  }
  return report;
}

}  // namespace racklab
