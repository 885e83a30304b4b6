#pragma once

// One certificate generator per type D construction for twisted homogeneous
// racks over Alt_n. Every generator validates its hypotheses (ParameterError
// otherwise) and returns a certificate whose elements are members of the
// declared rack; callers re-verify with verify_certificate.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "racklab/typed.hpp"

namespace racklab {

enum class Generator { id_1, id_12r, id_124, id_14, iota_12, iota_222, iota_12r };

std::string to_string(Generator g);
std::optional<Generator> parse_generator(std::string_view name);
const std::vector<Generator>& all_generators();

// C_e of (Alt_n, t, id), t even >= 4. G = <(1 2 3), (1 2)(4 5)> ~ Sym_3;
// R holds the e-product tuples over rotations, S those over reflections.
TypeDCertificate gen_id_1(int n, int t);

// ell of type (1^r1, 2^r2), r2 even and positive, t >= 3. Tuples over the
// Klein group {e, x, y, z} with product x (R) or y (S).
TypeDCertificate gen_id_12r(const Permutation& ell, int t);

// ell of type (1^r1, 2^r2, 4^r4), r2, r4 > 0, t = 2.
TypeDCertificate gen_id_124(const Permutation& ell);

// ell of type (1^r1, 4^r4), r4 > 1, t = 2.
TypeDCertificate gen_id_14(const Permutation& ell);

// C_e of (Alt_n, t, iota_(1 2)), t even.
TypeDCertificate gen_iota_12(int n, int t);

// (Alt_6, 2, iota_(1 2)) with ell = (3 4)(5 6); R and S listed row by row.
TypeDCertificate gen_iota_222();

// ell (1 2) of type (1^r1, 2^r2), r2 odd > 1. For t >= 3 the Klein-group
// construction on the points 3..n embeds as a subrack. For t = 2 the only
// supported case is n = 7 with ell (1 2) of type (1, 2^3): an exhaustive
// search certificate for (Alt_5, 2, id, (1 2)(3 4)) moved onto 3..7.
TypeDCertificate gen_iota_12r(const Permutation& ell, int t);

// The rows (pi, sigma, tau) with (pi, sigma) in R and (pi, tau) in S.
struct Iota222Row {
  Permutation pi;
  Permutation sigma;
  Permutation tau;
};
const std::vector<Iota222Row>& iota_222_table();

// Rows rebuilt from the rule: for pi in Alt({3,4,5,6}), the R partner is
// x pi when pi^2 = e and x pi^-1 x otherwise, with x = (3 4)(5 6); the same
// with y = (3 6)(4 5) for S. Sorted by pi.
std::vector<Iota222Row> iota_222_rule_rows();

// Whether the rule above reproduces the listed rows exactly.
bool iota_222_rule_matches_table();

// The canonical ell with ell (1 2) of the given type: with_cycle_type(type)
// composed with (1 2), which fixes 1 and 2 whenever the type has a 2-cycle.
Permutation iota_ell(const CycleType& type_of_ellu, int n);

// Dispatch by generator name, for the CLI. `ell` is ignored by generators
// that fix it.
TypeDCertificate generate(Generator g, int n, int t, const std::optional<Permutation>& ell);

}  // namespace racklab
