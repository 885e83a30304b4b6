#include <algorithm>
#include <random>

#include "doctest.h"
#include "racklab/affine.hpp"
#include "racklab/generators.hpp"
#include "racklab/rack_spec.hpp"
#include "racklab/typed.hpp"

using namespace racklab;

namespace {

Permutation P(std::string_view text, std::size_t n) { return Permutation::parse(text, n); }

TupleElement T(std::initializer_list<std::string_view> parts, std::size_t n) {
  TupleElement e;
  for (const auto p : parts) e.parts.push_back(P(p, n));
  return e;
}

std::vector<Permutation> sym_class(int n, std::string_view rep) {
  return twisted_orbit(GroupKind::symmetric, n, Twist::identity(), P(rep, n));
}

bool closure_verdict(const FiniteRack& rack, PairClosure& closure, ElementIndex r, ElementIndex s) {
  return closure.run(r, s) && triple_test(rack, r, s);
}

std::vector<FiniteRack> small_racks() {
  std::vector<FiniteRack> racks;
  for (const int p : {2, 3, 5}) racks.push_back(permutation_rack(p));
  racks.push_back(affine_rack(AffineSpec::parse("affine:3:1:1,1")));
  racks.push_back(affine_rack(AffineSpec::parse("affine:2:2:1,1,1")));
  racks.push_back(affine_rack(AffineSpec::parse("affine:5:1:2,1")));
  racks.push_back(conjugation_rack(group_elements(GroupKind::symmetric, 4)));
  for (const auto* rep : {"(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 2 3 4)", "(1 2)(3 4 5)"}) {
    racks.push_back(conjugation_rack(sym_class(5, rep)));
  }
  racks.push_back(twisted_class(5, Twist::conjugation(P("(1 2)", 5)), Permutation(5)));
  racks.push_back(build_rack(parse_rack_spec("alt5:2:id:e")).rack());
  return racks;
}

}  // namespace

TEST_CASE("the id_1 certificate and its corruptions") {
  const auto cert = gen_id_1(5, 4);
  CHECK(verify_certificate(cert).valid);

  auto moved = cert;
  moved.R.erase(std::find(moved.R.begin(), moved.R.end(), moved.r));
  moved.S.push_back(moved.r);
  CHECK_FALSE(verify_certificate(moved).valid);

  auto overlapping = cert;
  overlapping.S.push_back(overlapping.R.back());
  const auto verdict = verify_certificate(overlapping);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation == "R and S are not disjoint");

  auto foreign = cert;
  foreign.S.push_back(T({"(1 2 3)", "e", "e", "e"}, 5));
  CHECK_THROWS_AS(verify_certificate(foreign), NonMemberError);

  auto misplaced = cert;
  misplaced.s = cert.R.back();
  CHECK(verify_certificate(misplaced).violation == "witness s is not in S");
}

TEST_CASE("identical blocks are rejected") {
  TypeDCertificate cert;
  cert.rack = THRackSpec::parse("alt5:2:id:e");
  const auto x = T({"(1 2 3)", "(1 3 2)"}, 5);
  cert.R = {x};
  cert.S = {x};
  cert.r = x;
  cert.s = x;
  const auto verdict = verify_certificate(cert);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation == "R and S are not disjoint");
}

TEST_CASE("triple test with r = s") {
  // In a quandle r |> r = r, so the chain returns to r.
  for (const auto& rack : small_racks()) {
    if (rack.size() > 60) continue;
    bool quandle = true;
    for (ElementIndex x = 0; x < rack.size(); ++x) quandle = quandle && rack.op(x, x) == x;
    if (!quandle) continue;
    for (ElementIndex x = 0; x < rack.size(); ++x) CHECK_FALSE(triple_test(rack, x, x));
  }
  // In the permutation rack the chain adds 3, so it returns only when p = 3.
  for (const int p : {2, 3, 5, 7}) {
    const FiniteRack rack = permutation_rack(p);
    for (ElementIndex x = 0; x < rack.size(); ++x) CHECK(triple_test(rack, x, x) == (p != 3));
  }
}

TEST_CASE("the (2^3) chain") {
  const auto cert = gen_iota_222();
  const auto rack = th_rack(cert.rack);
  const auto chain = triple_chain(*rack, cert.r, cert.s);
  CHECK(chain[0] == T({"(3 4 6)", "(3 5 6)"}, 6));
  CHECK(chain[1] == T({"e", "(3 6)(4 5)"}, 6));
  CHECK(chain[2] == T({"(3 5)(4 6)", "(3 4)(5 6)"}, 6));
  CHECK(chain[2] != cert.s);
}

TEST_CASE("conjugacy shortcut on simple inputs") {
  CHECK(conjugacy_shortcut(P("(1 2)", 5), P("(1 2)", 5)) == ShortcutVerdict::no);
  CHECK(conjugacy_shortcut(P("(1 2)", 5), P("(3 4)", 5)) == ShortcutVerdict::no);
  CHECK(conjugacy_shortcut(P("(1 2)(3 4)", 5), P("(1 3)(2 4)", 5)) == ShortcutVerdict::no);
}

TEST_CASE("conjugacy shortcut agrees with closure and triple test") {
  std::vector<std::vector<Permutation>> classes;
  for (const auto& type : all_cycle_types(4)) classes.push_back(sym_class(4, with_cycle_type(type, 4).to_string()));
  classes.push_back(sym_class(5, "(1 2)"));
  classes.push_back(sym_class(5, "(1 2 3 4)"));
  classes.push_back(sym_class(5, "(1 2 3 4 5)"));
  for (const auto& cls : classes) {
    const FiniteRack rack = conjugation_rack(cls);
    PairClosure closure(rack);
    std::size_t disagreements = 0;
    for (ElementIndex r = 0; r < rack.size(); ++r) {
      for (ElementIndex s = 0; s < rack.size(); ++s) {
        if (r == s) continue;
        const bool shortcut = conjugacy_shortcut(cls[r], cls[s]) == ShortcutVerdict::type_d_witness;
        disagreements += shortcut != closure_verdict(rack, closure, r, s);
      }
    }
    CHECK_MESSAGE(disagreements == 0, cls.front().to_string());
  }
}

TEST_CASE("decide on the classes of Sym_5") {
  // Brute-force oracle: only the 4-cycles and 5-cycles are of type D.
  for (const auto& type : all_cycle_types(5)) {
    const auto cls = sym_class(5, with_cycle_type(type, 5).to_string());
    const FiniteRack rack = conjugation_rack(cls);
    const auto result = decide_type_d(rack);
    const bool expected = type == CycleType::parse("(1, 4)") || type == CycleType::parse("(5)");
    CHECK_MESSAGE((result.outcome == DecideResult::Outcome::certificate) == expected, type.to_string());
    if (result.certificate) CHECK(verify_index_certificate(rack, *result.certificate).valid);
    if (!expected) CHECK(result.pairs_examined == rack.size() * (rack.size() - 1));
  }
}

TEST_CASE("Alt_5 with t = 2 and ell = e is not of type D") {
  const auto built = build_rack(parse_rack_spec("alt5:2:id:e"));
  const auto result = decide_type_d(built.rack());
  CHECK(result.outcome == DecideResult::Outcome::not_type_d);
  CHECK(result.pairs_examined == 3540);
}

TEST_CASE("budget exhaustion") {
  const auto built = build_rack(parse_rack_spec("alt5:2:id:e"));
  const auto result = decide_type_d(built.rack(), DecideOptions{100, 1});
  CHECK(result.outcome == DecideResult::Outcome::budget_exhausted);
  CHECK(result.pairs_examined == 100);
}

TEST_CASE("decide does not depend on the thread count") {
  const FiniteRack rack = conjugation_rack(sym_class(5, "(1 2 3 4)"));
  const auto one = decide_type_d(rack, DecideOptions{kDefaultPairBudget, 1});
  const auto four = decide_type_d(rack, DecideOptions{kDefaultPairBudget, 4});
  REQUIRE(one.certificate);
  REQUIRE(four.certificate);
  CHECK(one.pairs_examined == four.pairs_examined);
  CHECK(one.certificate->r == four.certificate->r);
  CHECK(one.certificate->s == four.certificate->s);
  CHECK(one.certificate->R == four.certificate->R);
  CHECK(one.certificate->S == four.certificate->S);
}

TEST_CASE("found certificates replant and negative racks reject random candidates") {
  std::mt19937 rng(23);
  for (const auto& rack : small_racks()) {
    if (rack.size() > 60) continue;
    const auto result = decide_type_d(rack);
    if (result.certificate) {
      const auto& cert = *result.certificate;
      CHECK(verify_index_certificate(rack, cert).valid);
      const auto replanted = pair_closure(rack, cert.r, cert.s);
      REQUIRE(replanted.has_value());
      CHECK(is_decomposition(rack, *replanted));
      continue;
    }
    REQUIRE(result.outcome == DecideResult::Outcome::not_type_d);
    for (int k = 0; k < 1000; ++k) {
      IndexCertificate candidate;
      for (ElementIndex x = 0; x < rack.size(); ++x) {
        const auto coin = rng() % 3;
        if (coin == 0) candidate.R.push_back(x);
        if (coin == 1) candidate.S.push_back(x);
      }
      if (candidate.R.empty()) candidate.R.push_back(static_cast<ElementIndex>(rng() % rack.size()));
      if (candidate.S.empty()) candidate.S.push_back(static_cast<ElementIndex>(rng() % rack.size()));
      candidate.r = candidate.R[rng() % candidate.R.size()];
      candidate.s = candidate.S[rng() % candidate.S.size()];
      CHECK_FALSE(verify_index_certificate(rack, candidate).valid);
    }
  }
}

TEST_CASE("index certificates out of range are non-members") {
  const FiniteRack rack = permutation_rack(3);
  CHECK_THROWS_AS(verify_index_certificate(rack, IndexCertificate{{0}, {7}, 0, 7}), NonMemberError);
}

TEST_CASE("search certificates lift to tuples") {
  const auto spec = THRackSpec::parse("alt5:2:id:(1 2)(3 4)");
  const auto built = build_rack(spec);
  const auto result = decide_type_d(built.rack());
  REQUIRE(result.certificate);
  const auto cert = to_tuple_certificate(*built.tuples, spec, *result.certificate, "search");
  CHECK(cert.R.size() == result.certificate->R.size());
  CHECK(verify_certificate(cert).valid);
}
