#pragma once

// Exact permutation arithmetic on {1..n}.
//
// Points are 1-based at every interface (parsing, printing, operator()).
// Products follow (a * b)(i) = a(b(i)): the right factor acts first.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "racklab/errors.hpp"

namespace racklab {

inline constexpr std::size_t kMaxDegree = 32;

class Permutation {
 public:
  // Identity of degree 1.
  Permutation() : Permutation(1) {}
  explicit Permutation(std::size_t degree);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // images[i] is the image of point i + 1, all 1-based.
  static Permutation from_images(std::span<const int> images);

  // Product of disjoint cycles, e.g. "(1 2)(3 4 5 6)". "e", "()" and the
  // empty string denote the identity. Unmentioned points are fixed.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return degree_; }

  // Image of a 1-based point.
  int operator()(int point) const { return images_[point - 1] + 1; }

  std::vector<int> images() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool is_even() const;
  std::size_t order() const;

  // Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;

  // Cycle notation with fixed points omitted; "e" for the identity.
  std::string to_string() const;

  // Same permutation on a larger point set; new points are fixed.
  Permutation extended(std::size_t degree) const;

  // Relabels point i as i + offset in a permutation of the given degree.
  Permutation shifted(int offset, std::size_t degree) const;

  std::size_t hash() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  // Unused tail entries hold their own index so defaulted comparison is exact.
  std::uint8_t degree_ = 1;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
// a * b * a^-1
Permutation conjugate(const Permutation& a, const Permutation& b);

enum class Parity { even, odd };
Parity parity(const Permutation& a);

// Multiset of cycle lengths, fixed points counted as 1-cycles.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::map<int, int> multiplicities);

  // Accepts "(1^2, 2^3)", "1^2,2^3", "(2, 4)" or "(1^5)".
  static CycleType parse(std::string_view text);

  const std::map<int, int>& multiplicities() const { return counts_; }
  int count(int length) const;
  int degree() const;
  bool is_even() const;
  // Cycle lengths other than those listed are absent.
  bool only_lengths(std::initializer_list<int> lengths) const;

  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::map<int, int> counts_;
};

std::ostream& operator<<(std::ostream& os, const CycleType& c);

CycleType cycle_type(const Permutation& a);

// A permutation of the given type whose nontrivial cycles occupy consecutive
// points starting at first_point, shortest cycles first. Points outside that
// range are fixed. The type's fixed points need not fit below `degree` exactly
// but the moved points must.
Permutation with_cycle_type(const CycleType& type, std::size_t degree, int first_point = 1);

// All cycle types of degree n (partitions of n), in increasing order.
std::vector<CycleType> all_cycle_types(int n);

// Index permutation j -> k where conjugate(a, basepoints[j]) = basepoints[k],
// returned as a permutation of {1..basepoints.size()}.
Permutation induced_action(const Permutation& a, std::span<const Permutation> basepoints);

// Closure of the generators under composition, sorted. Throws CapExceeded
// once the group grows past `cap` elements.
std::vector<Permutation> generate_subgroup(std::span<const Permutation> generators, std::size_t cap);

enum class GroupKind { alternating, symmetric };

// Every element of Alt_n or Sym_n in increasing order.
std::vector<Permutation> group_elements(GroupKind kind, std::size_t n);

// Small generating set: 3-cycles (1 2 k) for Alt_n, (1 2) and (1 ... n) for Sym_n.
std::vector<Permutation> group_generators(GroupKind kind, std::size_t n);

std::size_t group_order(GroupKind kind, std::size_t n);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace racklab

template <>
struct std::hash<racklab::Permutation> {
  std::size_t operator()(const racklab::Permutation& p) const { return p.hash(); }
};
