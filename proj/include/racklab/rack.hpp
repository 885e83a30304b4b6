#pragma once

// Rack abstraction over an indexed universe: axiom checks, subracks,
// decompositions, the minimal decomposable closure of a witness pair, and
// morphism checks.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "racklab/errors.hpp"

namespace racklab {

using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultTableThreshold = 4096;

// A finite rack whose elements are the indices 0..size()-1. The operation is
// either tabulated (below the table threshold) or evaluated on demand.
class FiniteRack {
 public:
  using element_type = ElementIndex;
  using Operation = std::function<ElementIndex(ElementIndex, ElementIndex)>;

  FiniteRack(std::string label, std::size_t size, Operation op, std::vector<std::string> names = {},
             std::size_t table_threshold = kDefaultTableThreshold);

  // Row-major table: table[x * size + y] = x |> y.
  static FiniteRack from_table(std::string label, std::size_t size, std::vector<ElementIndex> table,
                               std::vector<std::string> names = {});

  std::size_t size() const { return size_; }
  const std::string& label() const { return label_; }
  std::string element_name(ElementIndex x) const;

  ElementIndex op(ElementIndex x, ElementIndex y) const {
    return table_.empty() ? op_(x, y) : table_[static_cast<std::size_t>(x) * size_ + y];
  }

  bool has_table() const { return !table_.empty(); }
  // Only valid when has_table().
  std::span<const ElementIndex> row(ElementIndex x) const {
    return {table_.data() + static_cast<std::size_t>(x) * size_, size_};
  }

 private:
  std::string label_;
  std::size_t size_ = 0;
  Operation op_;
  std::vector<ElementIndex> table_;
  std::vector<std::string> names_;
};

struct AxiomReport {
  enum class Violation { none, not_bijective, not_self_distributive };
  Violation violation = Violation::none;
  // not_bijective: x is the offending row. not_self_distributive: the triple.
  ElementIndex x = 0, y = 0, z = 0;
  std::string message;

  bool valid() const { return violation == Violation::none; }
};

AxiomReport verify_axioms(const FiniteRack& rack);

// Only the left self-distributive law, without the bijectivity check.
bool is_self_distributive(const FiniteRack& rack);

bool is_subrack(const FiniteRack& rack, std::span<const ElementIndex> subset);

struct SubrackPartition {
  std::vector<std::vector<ElementIndex>> blocks;
};

// Blocks disjoint and nonempty, their union Y closed, and Y |> X_i = X_i for
// every block X_i.
bool is_decomposition(const FiniteRack& rack, const SubrackPartition& partition);

bool check_morphism(std::span<const ElementIndex> f, const FiniteRack& source, const FiniteRack& target);

// Reusable worklist for the smallest pair (R0 containing r, S0 containing s)
// closed under a |> b staying in b's block for all a, b in R0 u S0. The
// minimal closed pair is unique, so the outcome does not depend on worklist
// order. A run stops at the first collision between the two blocks.
class PairClosure {
 public:
  explicit PairClosure(const FiniteRack& rack);

  // True when the blocks stay disjoint.
  bool run(ElementIndex r, ElementIndex s);

  // Blocks of the last successful run, each sorted.
  SubrackPartition partition() const;
  std::size_t last_size() const { return members_.size(); }

 private:
  bool place(ElementIndex element, std::uint8_t color);

  const FiniteRack* rack_;
  std::vector<std::uint8_t> color_;
  std::vector<ElementIndex> members_;
};

// Returns the two blocks {R0, S0}, or nullopt when they merge.
std::optional<SubrackPartition> pair_closure(const FiniteRack& rack, ElementIndex r, ElementIndex s);

// The same closure over any rack model exposing element_type and op(), with
// elements tracked in a hash map. Used on racks too large to materialize.
template <class E>
struct BlockPair {
  std::vector<E> first;
  std::vector<E> second;
};

template <class Rack, class Hash = std::hash<typename Rack::element_type>>
std::optional<BlockPair<typename Rack::element_type>> pair_closure_lazy(
    const Rack& rack, const typename Rack::element_type& r, const typename Rack::element_type& s,
    std::size_t cap = 1u << 22) {
  using E = typename Rack::element_type;
  std::unordered_map<E, std::uint8_t, Hash> color;
  std::vector<E> members{r, s};
  color.emplace(r, 1);
  if (!color.emplace(s, 2).second) return std::nullopt;
  auto place = [&](E element, std::uint8_t c) {
    const auto [it, inserted] = color.emplace(element, c);
    if (inserted) {
      if (members.size() >= cap) throw CapExceeded("lazy pair closure exceeds cap");
      members.push_back(std::move(element));
      return true;
    }
    return it->second == c;
  };
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      const std::uint8_t ck = color.at(members[k]);
      if (!place(rack.op(members[i], members[k]), ck)) return std::nullopt;
      if (i != k) {
        const std::uint8_t ci = color.at(members[i]);
        if (!place(rack.op(members[k], members[i]), ci)) return std::nullopt;
      }
    }
  }
  BlockPair<E> out;
  for (const auto& m : members) (color.at(m) == 1 ? out.first : out.second).push_back(m);
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

}  // namespace racklab
