// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "racklab/affine.hpp"
#include "racklab/cocycle.hpp"
#include "racklab/generators.hpp"
#include "racklab/rack_spec.hpp"
#include "racklab/report.hpp"
#include "racklab/status.hpp"

using namespace racklab;
using Clock = std::chrono::steady_clock;

namespace {

Permutation P(std::string_view text, std::size_t n) { return Permutation::parse(text, n); }

TupleElement T(std::initializer_list<std::string_view> parts, std::size_t n) {
  TupleElement e;
  for (const auto p : parts) e.parts.push_back(P(p, n));
  return e;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure message of a criterion.
struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

void within(Outcome& o, double elapsed, double limit, const std::string& what) {
  o.require(elapsed < limit, what + " took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit) + " s");
}

// 1. The (2^3) witnesses under the composition convention.
Outcome convention_lock() {
  Outcome o;
  const auto cert = gen_iota_222();
  const auto rack = th_rack(cert.rack);
  const auto r = T({"(3 4)(5 6)", "e"}, 6);
  const auto s = T({"(3 4 5)", "(4 5 6)"}, 6);
  o.require(cert.r == r && cert.s == s, "generator witnesses differ");
  const auto start = Clock::now();
  const auto first = rack_op_tuple(*rack, r, s);
  const auto chain = triple_chain(*rack, r, s);
  const double elapsed = seconds_since(start);
  o.require(first == T({"(3 4 6)", "(3 5 6)"}, 6), "r |> s = " + first.to_string());
  o.require(chain[2] == T({"(3 5)(4 6)", "(3 4)(5 6)"}, 6), "chain ends at " + chain[2].to_string());
  o.require(chain[2] != s, "chain returns to s");
  within(o, elapsed, 1e-3, "chain");
  return o;
}

// 2. The listed (2^3) table, row by row: pi, its R partner, its S partner.
Outcome table_fidelity() {
  Outcome o;
  const char* rows[12][3] = {
      {"e", "(3 4)(5 6)", "(3 6)(4 5)"},
      {"(4 5 6)", "(3 5 6)", "(3 4 5)"},
      {"(4 6 5)", "(3 6 5)", "(3 5 4)"},
      {"(3 4)(5 6)", "e", "(3 5)(4 6)"},
      {"(3 4 5)", "(3 4 6)", "(4 5 6)"},
      {"(3 4 6)", "(3 4 5)", "(3 5 6)"},
      {"(3 5 4)", "(3 6 4)", "(4 6 5)"},
      {"(3 5 6)", "(4 5 6)", "(3 4 6)"},
      {"(3 5)(4 6)", "(3 6)(4 5)", "(3 4)(5 6)"},
      {"(3 6 4)", "(3 5 4)", "(3 6 5)"},
      {"(3 6 5)", "(4 6 5)", "(3 6 4)"},
      {"(3 6)(4 5)", "(3 5)(4 6)", "e"},
  };
  const auto start = Clock::now();
  const auto cert = gen_iota_222();
  std::set<TupleElement> expected_r, expected_s;
  for (const auto& row : rows) {
    expected_r.insert(T({row[0], row[1]}, 6));
    expected_s.insert(T({row[0], row[2]}, 6));
  }
  o.require(cert.R.size() == 12 && cert.S.size() == 12, "block sizes differ from 12");
  o.require(std::set<TupleElement>(cert.R.begin(), cert.R.end()) == expected_r, "R differs from the table");
  o.require(std::set<TupleElement>(cert.S.begin(), cert.S.end()) == expected_s, "S differs from the table");
  const auto verdict = verify_certificate(cert);
  o.require(verdict.valid, "verify_certificate: " + verdict.violation);
  within(o, seconds_since(start), 1.0, "table");
  return o;
}

// 3. Every generator on its listed parameters.
Outcome generators() {
  Outcome o;
  struct Case {
    std::string label;
    std::function<TypeDCertificate()> make;
  };
  std::vector<Case> cases;
  cases.push_back({"id_1 n=5 t=4", [] { return gen_id_1(5, 4); }});
  for (const int t : {3, 4, 5}) {
    cases.push_back({"id_12r n=5 t=" + std::to_string(t), [t] { return gen_id_12r(P("(1 2)(3 4)", 5), t); }});
  }
  for (const int t : {3, 5}) {
    cases.push_back({"id_12r n=6 t=" + std::to_string(t),
                     [t] { return gen_id_12r(with_cycle_type(CycleType::parse("(1^2, 2^2)"), 6), t); }});
    cases.push_back({"id_12r n=8 t=" + std::to_string(t),
                     [t] { return gen_id_12r(with_cycle_type(CycleType::parse("(2^4)"), 8), t); }});
  }
  cases.push_back({"id_124 n=6", [] { return gen_id_124(P("(1 2)(3 4 5 6)", 6)); }});
  cases.push_back({"id_14 n=8", [] { return gen_id_14(with_cycle_type(CycleType::parse("(4^2)"), 8)); }});
  cases.push_back({"iota_12 n=5 t=2", [] { return gen_iota_12(5, 2); }});
  cases.push_back({"iota_12 n=5 t=4", [] { return gen_iota_12(5, 4); }});
  cases.push_back({"iota_12 n=6 t=2", [] { return gen_iota_12(6, 2); }});
  for (const int t : {2, 3}) {
    cases.push_back({"iota_12r n=7 t=" + std::to_string(t),
                     [t] { return gen_iota_12r(iota_ell(CycleType::parse("(1, 2^3)"), 7), t); }});
  }
  cases.push_back(
      {"iota_12r n=8 t=3", [] { return gen_iota_12r(iota_ell(CycleType::parse("(1^2, 2^3)"), 8), 3); }});
  cases.push_back({"iota_12r n=10 t=3", [] { return gen_iota_12r(iota_ell(CycleType::parse("(2^5)"), 10), 3); }});
  for (const auto& c : cases) {
    const auto start = Clock::now();
    const auto cert = c.make();
    const auto verdict = verify_certificate(cert);
    o.require(verdict.valid, c.label + ": " + verdict.violation);
    within(o, seconds_since(start), 10.0, c.label);
  }
  return o;
}

// 4. The two negative rows by exhaustive search.
Outcome negatives() {
  Outcome o;
  struct Case {
    const char* rack;
    std::uint64_t pairs;
    double limit;
  };
  for (const auto& c : {Case{"alt5:2:id:e", 3540, 60.0}, Case{"alt6:2:id:e", 360 * 359, 1800.0}}) {
    const auto start = Clock::now();
    const auto built = build_rack(parse_rack_spec(c.rack));
    const auto result = decide_type_d(built.rack());
    o.require(result.outcome == DecideResult::Outcome::not_type_d, std::string(c.rack) + " is not reported negative");
    o.require(result.pairs_examined == c.pairs,
              std::string(c.rack) + " examined " + std::to_string(result.pairs_examined) + " pairs");
    within(o, seconds_since(start), c.limit, c.rack);
  }
  return o;
}

// 5. The conjugacy shortcut against closure plus triple test.
Outcome shortcut() {
  Outcome o;
  const auto start = Clock::now();
  std::vector<Permutation> reps;
  for (const auto& type : all_cycle_types(4)) reps.push_back(with_cycle_type(type, 4));
  reps.push_back(P("(1 2)", 5));
  for (const auto& rep : reps) {
    const auto cls = twisted_orbit(GroupKind::symmetric, rep.degree(), Twist::identity(), rep);
    const FiniteRack rack = conjugation_rack(cls);
    PairClosure closure(rack);
    for (ElementIndex r = 0; r < rack.size(); ++r) {
      for (ElementIndex s = 0; s < rack.size(); ++s) {
        if (r == s) continue;
        const bool fast = conjugacy_shortcut(cls[r], cls[s]) == ShortcutVerdict::type_d_witness;
        const bool full = closure.run(r, s) && triple_test(rack, r, s);
        o.require(fast == full, "disagreement at " + cls[r].to_string() + ", " + cls[s].to_string());
      }
    }
  }
  within(o, seconds_since(start), 60.0, "shortcut sweep");
  return o;
}

// 6. Cocycle condition against the braid equation on all tables of 3-element racks.
Outcome cocycle_braid() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<FiniteRack> racks{
      permutation_rack(3),
      conjugation_rack(twisted_orbit(GroupKind::symmetric, 3, Twist::identity(), P("(1 2)", 3))),
      affine_rack(AffineSpec::parse("affine:3:1:1,1")),
  };
  for (const auto& rack : racks) {
    for (const int m : {2, 3}) {
      const auto report = equivalence_sweep(rack, m);
      const std::uint64_t expected = m == 2 ? 512 : 19683;
      o.require(report.exhaustive && report.tables == expected, rack.label() + ": wrong table count");
      o.require(report.equivalent(), rack.label() + " m=" + std::to_string(m) + ": " +
                                         std::to_string(report.cocycle_not_braid) + " / " +
                                         std::to_string(report.braid_not_cocycle) + " discrepancies");
    }
  }
  within(o, seconds_since(start), 60.0, "sweeps");
  return o;
}

TupleElement generic_op(const Twist& theta, const TupleElement& y, const TupleElement& z) {
  TupleElement quotient;
  for (std::size_t i = 0; i < y.size(); ++i) quotient.parts.push_back(z[i] * y[i].inverse());
  const auto shifted = shift_automorphism(theta, quotient);
  TupleElement out;
  for (std::size_t i = 0; i < y.size(); ++i) out.parts.push_back(y[i] * shifted[i]);
  return out;
}

// 7. Axioms over the construction grid and the tuple operation against the generic formula.
Outcome axiom_suite() {
  Outcome o;
  const auto start = Clock::now();
  auto check = [&](const FiniteRack& rack, const std::string& label) {
    const auto report = verify_axioms(rack);
    o.require(report.valid(), label + ": " + report.message);
  };
  for (const int p : {2, 3, 5, 7}) check(permutation_rack(p), "perm:" + std::to_string(p));
  for (const int p : {2, 3, 5, 7}) {
    for (int t = 1; t <= 3; ++t) {
      for (const auto& spec : affine_specs(p, t)) check(affine_rack(spec), spec.to_string());
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& type : all_cycle_types(static_cast<int>(n))) {
      const auto x = with_cycle_type(type, n);
      check(conjugation_rack(twisted_orbit(GroupKind::symmetric, n, Twist::identity(), x)), "conj " + x.to_string());
    }
  }
  std::size_t th_racks = 0;
  for (int n = 5; n <= 6; ++n) {
    const auto alt = group_elements(GroupKind::alternating, static_cast<std::size_t>(n));
    const Twist iota = Twist::conjugation(P("(1 2)", static_cast<std::size_t>(n)));
    for (const auto& theta : {Twist::identity(), iota}) {
      std::set<Permutation> seen;
      for (const auto& ell : alt) {
        if (seen.contains(ell)) continue;
        const auto orbit = twisted_orbit(GroupKind::alternating, static_cast<std::size_t>(n), theta, ell);
        seen.insert(orbit.begin(), orbit.end());
        check(twisted_class(static_cast<std::size_t>(n), theta, ell), "twisted class of " + ell.to_string());
        for (int t = 2; t <= 3; ++t) {
          THRackSpec spec;
          spec.n = n;
          spec.t = t;
          spec.theta = theta;
          spec.ell = ell;
          const ThRack lazy(spec);
          if (lazy.universe_size() > kDefaultUniverseCap) continue;
          check(materialize(lazy).rack, spec.to_string());
          ++th_racks;
        }
      }
    }
  }
  o.require(th_racks >= 10, "only " + std::to_string(th_racks) + " twisted homogeneous racks fit the cap");
  for (const auto* text : {"alt5:2:id:e", "alt5:3:id:e"}) {
    const auto spec = THRackSpec::parse(text);
    const ThRack rack(spec);
    const auto elements = rack.enumerate();
    std::size_t mismatches = 0;
    for (const auto& a : elements) {
      for (const auto& b : elements) mismatches += rack_op_tuple(rack, a, b) != generic_op(spec.theta, a, b);
    }
    o.require(mismatches == 0, std::string(text) + ": " + std::to_string(mismatches) + " mismatches");
  }
  within(o, seconds_since(start), 300.0, "axiom suite");
  return o;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Whether (n, t, theta, type) lies in one of the five families that may fail to be of type D.
bool exception_family(int n, int t, ThetaKind theta, const CycleType& type) {
  if (theta == ThetaKind::id) {
    if (type.count(1) != n) return false;
    return std::gcd(static_cast<long>(t), factorial(n)) == 1 || (t == 2 && (n == 5 || n == 6));
  }
  if (type.count(1) <= 1 && type.count(2) == 0) return true;
  return type.only_lengths({1, 2, 4}) && type.count(4) >= 1 && (type.count(1) <= 2 || type.count(2) >= 1) && t == 2;
}

// 8. Status rows and the report.
Outcome status_rows() {
  Outcome o;
  const auto start = Clock::now();
  struct Row {
    int n;
    std::vector<int> ts;
    ThetaKind theta;
    const char* type;
    Status status;
    std::optional<Generator> generator;
  };
  const auto id = ThetaKind::id, iota = ThetaKind::iota;
  const auto proved = Status::type_d_proved;
  const std::vector<Row> rows{
      {5, {4}, id, "(1^5)", proved, Generator::id_1},
      {5, {4, 3, 5, 7}, id, "(1, 2^2)", proved, Generator::id_12r},
      {6, {3, 5, 7}, id, "(1^2, 2^2)", proved, Generator::id_12r},
      {8, {3, 5, 7}, id, "(2^4)", proved, Generator::id_12r},
      {6, {2}, id, "(2, 4)", proved, Generator::id_124},
      {7, {2}, id, "(1, 2, 4)", proved, Generator::id_124},
      {8, {2}, id, "(1^2, 2, 4)", proved, Generator::id_124},
      {8, {2}, id, "(4^2)", proved, Generator::id_14},
      {9, {2}, id, "(1, 4^2)", proved, Generator::id_14},
      {5, {2, 4}, iota, "(1^3, 2)", proved, Generator::iota_12},
      {6, {2}, iota, "(1^4, 2)", proved, Generator::iota_12},
      {6, {2}, iota, "(2^3)", proved, Generator::iota_222},
      {7, {2, 3, 5}, iota, "(1, 2^3)", proved, Generator::iota_12r},
      {8, {3, 5}, iota, "(1^2, 2^3)", proved, Generator::iota_12r},
      {10, {3, 5}, iota, "(2^5)", proved, Generator::iota_12r},
      {5, {7, 11}, id, "(1^5)", Status::unknown, std::nullopt},
      {7, {11, 13}, id, "(1^7)", Status::unknown, std::nullopt},
      {5, {2}, id, "(1^5)", Status::not_type_d, std::nullopt},
      {6, {2}, id, "(1^6)", Status::not_type_d, std::nullopt},
      {7, {2, 3}, iota, "(3, 4)", Status::unknown, std::nullopt},
      {7, {2, 4}, iota, "(1, 6)", Status::unknown, std::nullopt},
      {5, {2}, iota, "(1, 4)", Status::unknown, std::nullopt},
      {6, {2}, iota, "(1^2, 4)", Status::unknown, std::nullopt},
      {8, {2}, iota, "(2^2, 4)", Status::unknown, std::nullopt},
  };
  for (const auto& row : rows) {
    for (const int t : row.ts) {
      const auto entry = classify_status(row.n, t, row.theta, CycleType::parse(row.type));
      const std::string label = to_string(row.theta) + " n=" + std::to_string(row.n) + " t=" + std::to_string(t) +
                                " " + row.type;
      o.require(entry.status == row.status, label + ": status " + to_string(entry.status));
      o.require(entry.generator == row.generator, label + ": wrong generator");
    }
  }
  // t = 1: the two prior lists.
  for (const auto& [n, theta, type] : std::vector<std::tuple<int, ThetaKind, const char*>>{
           {5, iota, "(2, 3)"}, {6, iota, "(2^3)"}, {7, iota, "(1^5, 2)"}, {6, id, "(3^2)"},
           {7, id, "(2^2, 3)"}, {6, id, "(1^3, 3)"}, {8, id, "(2^4)"}, {6, id, "(1^2, 2^2)"},
           {5, id, "(1, 2^2)"}, {6, id, "(1, 5)"}, {7, id, "(7)"}}) {
    const auto entry = classify_status(n, 1, theta, CycleType::parse(type));
    o.require(entry.status == Status::unknown, std::string("t=1 ") + type + " is not listed as open");
  }
  for (int n = 5; n <= 10; ++n) {
    for (int t = 2; t <= 5; ++t) {
      for (const auto& type : all_cycle_types(n)) {
        const auto theta = type.is_even() ? ThetaKind::id : ThetaKind::iota;
        const auto entry = classify_status(n, t, theta, type);
        o.require((entry.status != Status::type_d_proved) == exception_family(n, t, theta, type),
                  "family mismatch at n=" + std::to_string(n) + " t=" + std::to_string(t) + " " + type.to_string());
      }
    }
  }
  ReportOptions options;
  options.n_min = 5;
  options.n_max = 10;
  options.t_min = 2;
  options.t_max = 5;
  const Report report = build_report(options);
  o.require(report.failures.empty(), "report certificate failures");
  for (const auto& row : report.rows) {
    const bool family = exception_family(row.n, row.t, row.theta, row.type);
    const std::string label = "report row n=" + std::to_string(row.n) + " t=" + std::to_string(row.t) + " " +
                              row.type.to_string();
    o.require((row.status == Status::type_d_proved) != family, label + " contradicts the classification");
    const bool negative = row.theta == ThetaKind::id && row.type.count(1) == row.n && row.t == 2 && row.n <= 6;
    o.require((row.status == Status::not_type_d) == negative, label + " has the wrong negative status");
    if (row.status != Status::unknown) o.require(!row.evidence.empty(), label + " has no evidence");
  }
  o.require(!report.rows.empty(), "empty report");
  within(o, seconds_since(start), 10.0, "status and report");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "composition convention on the (2^3) witnesses", convention_lock},
      {2, "(2^3) table fidelity", table_fidelity},
      {3, "generators on their listed parameters", generators},
      {4, "negative rows by exhaustive search", negatives},
      {5, "conjugacy shortcut equivalence", shortcut},
      {6, "cocycle condition iff braid equation", cocycle_braid},
      {7, "axiom property suite", axiom_suite},
      {8, "status classification and report", status_rows},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    std::printf("%s %d %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.number, c.name, elapsed,
                outcome.ok ? "" : ": ", outcome.detail.c_str());
    std::fflush(stdout);
    failures += !outcome.ok;
  }
  return failures == 0 ? 0 : 1;
}
