#pragma once

// Builders for the rack families of the simple-rack classification:
// conjugation racks, twisted conjugacy classes, affine racks, permutation
// racks and twisted homogeneous racks over Alt_n.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "racklab/perm.hpp"
#include "racklab/rack.hpp"

namespace racklab {

inline constexpr std::size_t kDefaultClassCap = 2'000'000;
inline constexpr std::size_t kDefaultUniverseCap = 4096;

// Automorphism of Alt_n given by conjugation by u in Sym_n. u odd realizes
// the outer automorphism, u even an inner one. The identity twist has no u.
class Twist {
 public:
  static Twist identity() { return Twist(); }
  static Twist conjugation(Permutation u) { return Twist(std::move(u)); }

  bool is_identity() const { return !by_.has_value(); }
  const std::optional<Permutation>& by() const { return by_; }

  Permutation apply(const Permutation& g) const { return by_ ? conjugate(*by_, g) : g; }

  // The element u (identity of the given degree when the twist is trivial).
  Permutation element(std::size_t degree) const { return by_ ? *by_ : Permutation(degree); }

  // "id" or "iota:<cycles>".
  std::string to_string() const;
  static Twist parse(std::string_view text, std::size_t degree);

  friend bool operator==(const Twist&, const Twist&) = default;

 private:
  Twist() = default;
  explicit Twist(Permutation u) : by_(std::move(u)) {}
  std::optional<Permutation> by_;
};

// One element of L^t, stored as (x_1, ..., x_t).
struct TupleElement {
  std::vector<Permutation> parts;

  std::size_t size() const { return parts.size(); }
  const Permutation& operator[](std::size_t i) const { return parts[i]; }

  // x_t x_{t-1} ... x_1
  Permutation reversed_product() const;

  // "((3 4)(5 6), e)"; a 1-tuple prints as its single permutation.
  std::string to_string() const;

  std::size_t hash() const;

  friend bool operator==(const TupleElement&, const TupleElement&) = default;
  friend auto operator<=>(const TupleElement&, const TupleElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const TupleElement& e);

struct TupleElementHash {
  std::size_t operator()(const TupleElement& e) const { return e.hash(); }
};

// Twisted homogeneous rack of type (G, t, theta) through ell, with G = Alt_n
// (or Sym_n for plain conjugacy classes of the symmetric group). t = 1 gives
// the twisted conjugacy class of ell.
//
// Textual forms:
//   altN:t:<theta>:<ell>          twisted homogeneous rack
//   twclass:altN:<theta>:<ell>    twisted class (t = 1)
//   conj:symN:<ell>               conjugacy class in Sym_n
// with theta one of "id" or "iota:<cycles>".
struct THRackSpec {
  GroupKind group = GroupKind::alternating;
  int n = 5;
  int t = 1;
  Twist theta = Twist::identity();
  Permutation ell = Permutation(5);

  // Throws ParameterError when the invariants fail. Twisted homogeneous racks
  // proper (t >= 2) require n >= 5.
  void validate() const;

  std::string to_string() const;
  static THRackSpec parse(std::string_view text);

  friend bool operator==(const THRackSpec&, const THRackSpec&) = default;
};

// Orbit of x under y -> y x theta(y^-1) for y in the group, sorted.
// The orbit is closed under a small generating set of the group, which
// yields the same set as sweeping every group element.
std::vector<Permutation> twisted_orbit(GroupKind group, std::size_t n, const Twist& theta, const Permutation& x,
                                       std::size_t cap = kDefaultClassCap);

// A twisted homogeneous rack evaluated lazily: membership plus operation.
// The twisted class of ell is computed once at construction.
class ThRack {
 public:
  using element_type = TupleElement;

  explicit ThRack(THRackSpec spec, std::size_t class_cap = kDefaultClassCap);

  const THRackSpec& spec() const { return spec_; }
  const std::vector<Permutation>& twisted_class() const { return class_list_; }
  bool class_contains(const Permutation& p) const { return class_set_.contains(p); }

  // Reversed product in the twisted class of ell. Throws DegreeMismatch or
  // ParameterError on tuples of the wrong length, degree or parity.
  bool contains(const TupleElement& candidate) const;

  // (a_1 theta(b_t a_t^-1), a_2 b_1 a_1^-1, ..., a_t b_{t-1} a_{t-1}^-1);
  // both arguments are assumed to be members.
  TupleElement op(const TupleElement& a, const TupleElement& b) const;

  // |G|^(t-1) * |class|
  std::size_t universe_size() const;

  // Every member, sorted. Throws CapExceeded above `cap`.
  std::vector<TupleElement> enumerate(std::size_t cap = kDefaultUniverseCap) const;

  std::string label() const { return spec_.to_string(); }

 private:
  THRackSpec spec_;
  std::vector<Permutation> class_list_;
  std::unordered_set<Permutation> class_set_;
};

// A lazy rack turned into an indexed FiniteRack over its sorted universe.
struct MaterializedRack {
  FiniteRack rack;
  std::vector<TupleElement> elements;
  std::unordered_map<TupleElement, ElementIndex, TupleElementHash> index;

  ElementIndex index_of(const TupleElement& e) const;
};

MaterializedRack materialize(const ThRack& rack, std::size_t cap = kDefaultUniverseCap);

// Conjugation rack x |> y = x y x^-1 on a conjugation-closed set.
FiniteRack conjugation_rack(std::vector<Permutation> elements);

// Twisted conjugacy class of x in Alt_n as a FiniteRack with operation
// y |> z = y theta(z y^-1). x must be even.
FiniteRack twisted_class(std::size_t n, const Twist& theta, const Permutation& x);

FiniteRack permutation_rack(int p);

// Shared, cached instance per spec; the twisted class is built once.
std::shared_ptr<const ThRack> th_rack(const THRackSpec& spec);
bool th_membership(const THRackSpec& spec, const TupleElement& candidate);
// Checked rack operation: throws NonMemberError if either argument is not a member.
TupleElement rack_op_tuple(const ThRack& rack, const TupleElement& a, const TupleElement& b);

// The shift-and-twist automorphism of L^t: (l_1..l_t) -> (theta(l_t), l_1, ..., l_{t-1}).
TupleElement shift_automorphism(const Twist& theta, const TupleElement& x);

bool is_prime(int p);

}  // namespace racklab

template <>
struct std::hash<racklab::TupleElement> {
  std::size_t operator()(const racklab::TupleElement& e) const { return e.hash(); }
};
