#pragma once

// Type D certificates: a decomposable subrack Y = R u S together with
// witnesses r in R, s in S such that r |> (s |> (r |> s)) != s.
//
// decide_type_d is complete. If (Y, R, S, r, s) is any certificate, the
// minimal closed pair (R0, S0) generated from ({r}, {s}) satisfies R0 in R
// and S0 in S, because R and S are themselves closed. So R0 and S0 are
// disjoint, R0 u S0 is decomposable, and the same witnesses pass the triple
// test. Trying the minimal closure for every ordered pair therefore finds a
// certificate whenever one exists.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "racklab/constructions.hpp"
#include "racklab/rack.hpp"

namespace racklab {

struct TypeDCertificate {
  THRackSpec rack;
  std::vector<TupleElement> R;
  std::vector<TupleElement> S;
  TupleElement r;
  TupleElement s;
  // Which generator or search produced it, plus free-form parameters.
  std::string generator;
  std::vector<std::pair<std::string, std::string>> parameters;
};

struct VerificationResult {
  bool valid = true;
  std::string violation;

  static VerificationResult ok() { return {}; }
  static VerificationResult fail(std::string why) { return {false, std::move(why)}; }
};

// r |> (s |> (r |> s)) != s
template <class Rack>
bool triple_test(const Rack& rack, const typename Rack::element_type& r, const typename Rack::element_type& s) {
  return rack.op(r, rack.op(s, rack.op(r, s))) != s;
}

// Checks every invariant of a certificate over any rack model. Elements are
// assumed to be members; membership is checked by the callers.
template <class Rack, class Hash = std::hash<typename Rack::element_type>>
VerificationResult verify_blocks(const Rack& rack, const std::vector<typename Rack::element_type>& R,
                                 const std::vector<typename Rack::element_type>& S,
                                 const typename Rack::element_type& r, const typename Rack::element_type& s) {
  using E = typename Rack::element_type;
  if (R.empty() || S.empty()) return VerificationResult::fail("R and S must be nonempty");
  std::unordered_set<E, Hash> in_r(R.begin(), R.end());
  std::unordered_set<E, Hash> in_s(S.begin(), S.end());
  if (in_r.size() != R.size()) return VerificationResult::fail("R lists an element twice");
  if (in_s.size() != S.size()) return VerificationResult::fail("S lists an element twice");
  for (const auto& x : R) {
    if (in_s.contains(x)) return VerificationResult::fail("R and S are not disjoint");
  }
  if (!in_r.contains(r)) return VerificationResult::fail("witness r is not in R");
  if (!in_s.contains(s)) return VerificationResult::fail("witness s is not in S");
  // Y |> R in R and Y |> S in S; since each left translation is injective
  // and the sets are finite, these are equalities and Y |> Y = Y follows.
  auto check_block = [&](const std::vector<E>& block, const std::unordered_set<E, Hash>& members,
                         const char* name) -> std::optional<std::string> {
    for (const auto* actors : {&R, &S}) {
      for (const auto& a : *actors) {
        for (const auto& b : block) {
          if (!members.contains(rack.op(a, b))) return std::string("Y |> ") + name + " leaves " + name;
        }
      }
    }
    return std::nullopt;
  };
  if (auto why = check_block(R, in_r, "R")) return VerificationResult::fail(*why);
  if (auto why = check_block(S, in_s, "S")) return VerificationResult::fail(*why);
  if (!triple_test(rack, r, s)) return VerificationResult::fail("r |> (s |> (r |> s)) equals s");
  return VerificationResult::ok();
}

// Throws NonMemberError when some listed element is not in the declared rack;
// an invariant violation is reported in the result instead.
VerificationResult verify_certificate(const ThRack& rack, const TypeDCertificate& cert);
VerificationResult verify_certificate(const TypeDCertificate& cert);

// The chain r |> s, s |> (r |> s), r |> (s |> (r |> s)).
template <class Rack>
std::vector<typename Rack::element_type> triple_chain(const Rack& rack, const typename Rack::element_type& r,
                                                      const typename Rack::element_type& s) {
  auto a = rack.op(r, s);
  auto b = rack.op(s, a);
  auto c = rack.op(r, b);
  return {a, b, c};
}

enum class ShortcutVerdict { type_d_witness, no };

// For conjugacy-class racks: (rs)^2 != (sr)^2 and r, s not conjugate inside
// <r, s>. Throws CapExceeded if <r, s> exceeds cap.
ShortcutVerdict conjugacy_shortcut(const Permutation& r, const Permutation& s, std::size_t cap = 1u << 20);

// Index-level certificate over a FiniteRack.
struct IndexCertificate {
  std::vector<ElementIndex> R;
  std::vector<ElementIndex> S;
  ElementIndex r = 0;
  ElementIndex s = 0;
};

VerificationResult verify_index_certificate(const FiniteRack& rack, const IndexCertificate& cert);

inline constexpr std::uint64_t kDefaultPairBudget = 10'000'000;

struct DecideOptions {
  // Maximum number of ordered pairs (r, s), r != s, examined.
  std::uint64_t budget = kDefaultPairBudget;
  unsigned threads = 1;
};

struct DecideResult {
  enum class Outcome { certificate, not_type_d, budget_exhausted };
  Outcome outcome = Outcome::not_type_d;
  std::optional<IndexCertificate> certificate;
  // Ordered pairs examined up to and including the decisive one.
  std::uint64_t pairs_examined = 0;
};

// Walks ordered pairs (r, s) lexicographically by index and returns the first
// pair whose minimal closure stays disjoint and passes the triple test.
// Workers split the rows; the reduction keeps the smallest pair, so the
// answer does not depend on the thread count.
DecideResult decide_type_d(const FiniteRack& rack, const DecideOptions& options = {});

// Lift an index certificate over a materialized rack to tuples.
TypeDCertificate to_tuple_certificate(const MaterializedRack& materialized, const THRackSpec& spec,
                                      const IndexCertificate& cert, std::string generator);

}  // namespace racklab
