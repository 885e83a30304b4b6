#include "racklab/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace racklab {

namespace {

Permutation P(std::string_view text, int n) { return Permutation::parse(text, static_cast<std::size_t>(n)); }

THRackSpec spec_of(int n, int t, Twist theta, Permutation ell) {
  THRackSpec spec;
  spec.group = GroupKind::alternating;
  spec.n = n;
  spec.t = t;
  spec.theta = std::move(theta);
  spec.ell = std::move(ell);
  spec.validate();
  return spec;
}

Twist iota(int n) { return Twist::conjugation(P("(1 2)", n)); }

// Every tuple of the given length over `choices`, in odometer order.
void for_each_tuple(const std::vector<Permutation>& choices, int length,
                    const std::function<void(const std::vector<Permutation>&)>& fn) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
  std::vector<Permutation> tuple(static_cast<std::size_t>(length), choices.front());
  while (true) {
    for (int i = 0; i < length; ++i) tuple[i] = choices[digits[i]];
    fn(tuple);
    int pos = length - 1;
    while (pos >= 0 && ++digits[pos] == choices.size()) digits[pos--] = 0;
    if (pos < 0) return;
  }
}

// Tuples (c_1..c_t) with c_1..c_{t-1} from `choices` and c_t chosen so the
// reversed product equals `target`; kept when c_t is allowed too.
std::vector<TupleElement> tuples_with_product(const std::vector<Permutation>& choices,
                                              const std::vector<Permutation>& last_choices, int t,
                                              const Permutation& target) {
  std::vector<TupleElement> out;
  const std::size_t degree = target.degree();
  for_each_tuple(choices, t - 1, [&](const std::vector<Permutation>& head) {
    Permutation partial(degree);
    for (const auto& c : head) partial = c * partial;
    const Permutation last = target * partial.inverse();
    if (std::find(last_choices.begin(), last_choices.end(), last) == last_choices.end()) return;
    TupleElement e{head};
    e.parts.push_back(last);
    out.push_back(std::move(e));
  });
  std::sort(out.begin(), out.end());
  return out;
}

TupleElement repeated(const Permutation& p, int t) { return TupleElement{std::vector<Permutation>(t, p)}; }

TupleElement leading(const Permutation& first, int t) {
  TupleElement e = repeated(Permutation(first.degree()), t);
  e.parts[0] = first;
  return e;
}

void add_parameter(TypeDCertificate& cert, std::string key, std::string value) {
  cert.parameters.emplace_back(std::move(key), std::move(value));
}

struct KleinBlocks {
  std::vector<TupleElement> R, S;
  TupleElement r, s;
};

// Klein four-group {e, x, y, z} built from `pairs` transpositions pairs on
// the points offset+1 .. offset+2*pairs of the given degree.
KleinBlocks klein_blocks(int pairs, int degree, int offset, int t) {
  const int half = pairs / 2;
  std::vector<int> xi(degree), yi(degree), zi(degree);
  for (int i = 0; i < degree; ++i) xi[i] = yi[i] = zi[i] = i + 1;
  auto swap_points = [](std::vector<int>& img, int a, int b) {
    img[a - 1] = b;
    img[b - 1] = a;
  };
  for (int i = 1; i <= half; ++i) {
    const int a = offset + 4 * i - 3, b = offset + 4 * i - 2, c = offset + 4 * i - 1, d = offset + 4 * i;
    swap_points(xi, a, b);
    swap_points(xi, c, d);
    swap_points(yi, a, c);
    swap_points(yi, b, d);
    swap_points(zi, a, d);
    swap_points(zi, b, c);
  }
  const Permutation x = Permutation::from_images(xi);
  const Permutation y = Permutation::from_images(yi);
  const Permutation z = Permutation::from_images(zi);
  const std::vector<Permutation> klein{Permutation(degree), x, y, z};
  KleinBlocks out;
  out.R = tuples_with_product(klein, klein, t, x);
  out.S = tuples_with_product(klein, klein, t, y);
  out.r = leading(x, t);
  out.s = leading(y, t);
  return out;
}

// The six-element group of (1 2 3) and (1 2)(4 5): rotations then reflections.
std::pair<std::vector<Permutation>, std::vector<Permutation>> sym3_parts(int n) {
  return {{P("e", n), P("(1 2 3)", n), P("(1 3 2)", n)},
          {P("(1 2)(4 5)", n), P("(2 3)(4 5)", n), P("(1 3)(4 5)", n)}};
}

void require_degree(const Permutation& ell) {
  if (ell.degree() < 5) throw ParameterError("degree must be at least 5");
}

// Shared scheme of the two C_4 constructions with t = 2.
TypeDCertificate c4_construction(const Permutation& ell, const Permutation& x, const Permutation& y,
                                 const std::vector<Permutation>& basepoints, const Permutation& filler,
                                 Generator generator) {
  const int n = static_cast<int>(ell.degree());
  const std::vector<Permutation> gens{x, y};
  const auto group = generate_subgroup(gens, 1u << 16);
  const Permutation phi_x = induced_action(x, basepoints);
  const Permutation phi_y = induced_action(y, basepoints);
  TypeDCertificate cert;
  cert.rack = spec_of(n, 2, Twist::identity(), ell);
  for (const auto& g : group) {
    for (const auto& h : group) {
      const Permutation phi = induced_action(h * g, basepoints);
      TupleElement e{{g * filler, h}};
      if (phi == phi_x) cert.R.push_back(e);
      if (phi == phi_y) cert.S.push_back(std::move(e));
    }
  }
  std::sort(cert.R.begin(), cert.R.end());
  std::sort(cert.S.begin(), cert.S.end());
  cert.r = TupleElement{{x * filler, Permutation(n)}};
  cert.s = TupleElement{{y * filler, Permutation(n)}};
  cert.generator = to_string(generator);
  add_parameter(cert, "ell", ell.to_string());
  add_parameter(cert, "filler", filler.to_string());
  add_parameter(cert, "group_order", std::to_string(group.size()));
  return cert;
}

}  // namespace

std::string to_string(Generator g) {
  switch (g) {
    case Generator::id_1: return "id_1";
    case Generator::id_12r: return "id_12r";
    case Generator::id_124: return "id_124";
    case Generator::id_14: return "id_14";
    case Generator::iota_12: return "iota_12";
    case Generator::iota_222: return "iota_222";
    case Generator::iota_12r: return "iota_12r";
  }
  return "?";
}

const std::vector<Generator>& all_generators() {
  static const std::vector<Generator> all{Generator::id_1,    Generator::id_12r,   Generator::id_124,
                                          Generator::id_14,   Generator::iota_12,  Generator::iota_222,
                                          Generator::iota_12r};
  return all;
}

std::optional<Generator> parse_generator(std::string_view name) {
  for (const auto g : all_generators()) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

TypeDCertificate gen_id_1(int n, int t) {
  if (n < 5) throw ParameterError("id_1 needs n >= 5");
  if (t < 4 || t % 2 != 0) throw ParameterError("id_1 needs even t >= 4");
  const auto [rotations, reflections] = sym3_parts(n);
  TypeDCertificate cert;
  cert.rack = spec_of(n, t, Twist::identity(), Permutation(n));
  const Permutation e(n);
  cert.R = tuples_with_product(rotations, rotations, t, e);
  cert.S = tuples_with_product(reflections, reflections, t, e);
  cert.r = repeated(e, t);
  const Permutation x = P("(1 2)(4 5)", n);
  const Permutation y = P("(2 3)(4 5)", n);
  cert.s = repeated(y, t);
  cert.s.parts[0] = x;
  cert.s.parts[1] = x;
  cert.generator = to_string(Generator::id_1);
  add_parameter(cert, "n", std::to_string(n));
  add_parameter(cert, "t", std::to_string(t));
  return cert;
}

TypeDCertificate gen_id_12r(const Permutation& ell, int t) {
  require_degree(ell);
  const CycleType type = cycle_type(ell);
  const int r2 = type.count(2);
  if (!type.only_lengths({1, 2}) || r2 == 0 || r2 % 2 != 0) {
    throw ParameterError("id_12r needs ell of type (1^r1, 2^r2) with r2 even and positive, got " + type.to_string());
  }
  if (t < 3) throw ParameterError("id_12r needs t >= 3");
  const int n = static_cast<int>(ell.degree());
  auto blocks = klein_blocks(r2, n, 0, t);
  TypeDCertificate cert;
  cert.rack = spec_of(n, t, Twist::identity(), ell);
  cert.R = std::move(blocks.R);
  cert.S = std::move(blocks.S);
  cert.r = std::move(blocks.r);
  cert.s = std::move(blocks.s);
  cert.generator = to_string(Generator::id_12r);
  add_parameter(cert, "ell", ell.to_string());
  add_parameter(cert, "t", std::to_string(t));
  return cert;
}

TypeDCertificate gen_id_124(const Permutation& ell) {
  require_degree(ell);
  const CycleType type = cycle_type(ell);
  const int r2 = type.count(2), r4 = type.count(4);
  if (!type.only_lengths({1, 2, 4}) || r2 == 0 || r4 == 0) {
    throw ParameterError("id_124 needs ell of type (1^r1, 2^r2, 4^r4) with r2, r4 > 0, got " + type.to_string());
  }
  if (!ell.is_even()) throw ParameterError("ell must be even");
  const int n = static_cast<int>(ell.degree());
  const CycleType filler_type(std::map<int, int>{{2, r2 - 1}, {4, r4 - 1}});
  const Permutation filler = with_cycle_type(filler_type, n, 7);
  const std::vector<Permutation> basepoints{P("(1 3 5)", n), P("(2 4 6)", n), P("(1 5 3)", n), P("(2 6 4)", n)};
  return c4_construction(ell, P("(1 2)(3 4 5 6)", n), P("(1 2 3 6)(4 5)", n), basepoints, filler,
                         Generator::id_124);
}

TypeDCertificate gen_id_14(const Permutation& ell) {
  require_degree(ell);
  const CycleType type = cycle_type(ell);
  const int r4 = type.count(4);
  if (!type.only_lengths({1, 4}) || r4 < 2) {
    throw ParameterError("id_14 needs ell of type (1^r1, 4^r4) with r4 > 1, got " + type.to_string());
  }
  if (!ell.is_even()) throw ParameterError("ell must be even");
  const int n = static_cast<int>(ell.degree());
  const CycleType filler_type(std::map<int, int>{{4, r4 - 2}});
  const Permutation filler = with_cycle_type(filler_type, n, 9);
  const std::vector<Permutation> basepoints{P("(1 3 5 7)", n), P("(2 4 6 8)", n), P("(1 7 5 3)", n),
                                            P("(2 8 6 4)", n)};
  return c4_construction(ell, P("(1 2 3 4)(5 6 7 8)", n), P("(1 6 7 8)(2 3 4 5)", n), basepoints, filler,
                         Generator::id_14);
}

TypeDCertificate gen_iota_12(int n, int t) {
  if (n < 5) throw ParameterError("iota_12 needs n >= 5");
  if (t < 2 || t % 2 != 0) throw ParameterError("iota_12 needs even t");
  const auto [rotations, reflections] = sym3_parts(n);
  TypeDCertificate cert;
  cert.rack = spec_of(n, t, iota(n), Permutation(n));
  for_each_tuple(rotations, t, [&](const std::vector<Permutation>& parts) { cert.R.push_back(TupleElement{parts}); });
  for_each_tuple(reflections, t,
                 [&](const std::vector<Permutation>& parts) { cert.S.push_back(TupleElement{parts}); });
  std::sort(cert.R.begin(), cert.R.end());
  std::sort(cert.S.begin(), cert.S.end());
  cert.r = repeated(Permutation(n), t);
  cert.s = repeated(P("(1 3)(4 5)", n), t);
  cert.generator = to_string(Generator::iota_12);
  add_parameter(cert, "n", std::to_string(n));
  add_parameter(cert, "t", std::to_string(t));
  return cert;
}

const std::vector<Iota222Row>& iota_222_table() {
  static const std::vector<Iota222Row> rows = [] {
    const char* text[12][3] = {
        {"e", "(3 4)(5 6)", "(3 6)(4 5)"},         {"(4 5 6)", "(3 5 6)", "(3 4 5)"},
        {"(4 6 5)", "(3 6 5)", "(3 5 4)"},         {"(3 4)(5 6)", "e", "(3 5)(4 6)"},
        {"(3 4 5)", "(3 4 6)", "(4 5 6)"},         {"(3 4 6)", "(3 4 5)", "(3 5 6)"},
        {"(3 5 4)", "(3 6 4)", "(4 6 5)"},         {"(3 5 6)", "(4 5 6)", "(3 4 6)"},
        {"(3 5)(4 6)", "(3 6)(4 5)", "(3 4)(5 6)"}, {"(3 6 4)", "(3 5 4)", "(3 6 5)"},
        {"(3 6 5)", "(4 6 5)", "(3 6 4)"},         {"(3 6)(4 5)", "(3 5)(4 6)", "e"},
    };
    std::vector<Iota222Row> out;
    for (const auto& row : text) out.push_back({P(row[0], 6), P(row[1], 6), P(row[2], 6)});
    return out;
  }();
  return rows;
}

std::vector<Iota222Row> iota_222_rule_rows() {
  const Permutation x = P("(3 4)(5 6)", 6);
  const Permutation y = P("(3 6)(4 5)", 6);
  const std::vector<Permutation> gens{P("(3 4 5)", 6), P("(4 5 6)", 6)};
  std::vector<Iota222Row> out;
  for (const auto& pi : generate_subgroup(gens, 64)) {
    const bool involutive = (pi * pi).is_identity();
    auto partner = [&](const Permutation& w) { return involutive ? w * pi : w * pi.inverse() * w; };
    out.push_back({pi, partner(x), partner(y)});
  }
  std::sort(out.begin(), out.end(), [](const Iota222Row& a, const Iota222Row& b) { return a.pi < b.pi; });
  return out;
}

bool iota_222_rule_matches_table() {
  auto table = iota_222_table();
  std::sort(table.begin(), table.end(), [](const Iota222Row& a, const Iota222Row& b) { return a.pi < b.pi; });
  const auto rule = iota_222_rule_rows();
  if (table.size() != rule.size()) return false;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].pi != rule[i].pi || table[i].sigma != rule[i].sigma || table[i].tau != rule[i].tau) return false;
  }
  return true;
}

TypeDCertificate gen_iota_222() {
  TypeDCertificate cert;
  cert.rack = spec_of(6, 2, iota(6), P("(3 4)(5 6)", 6));
  for (const auto& row : iota_222_table()) {
    cert.R.push_back(TupleElement{{row.pi, row.sigma}});
    cert.S.push_back(TupleElement{{row.pi, row.tau}});
  }
  cert.r = TupleElement{{P("(3 4)(5 6)", 6), P("e", 6)}};
  cert.s = TupleElement{{P("(3 4 5)", 6), P("(4 5 6)", 6)}};
  cert.generator = to_string(Generator::iota_222);
  return cert;
}

namespace {

// Search certificate for (Alt_5, 2, id, (1 2)(3 4)), computed once.
const TypeDCertificate& alt5_involution_search() {
  static std::once_flag once;
  static TypeDCertificate cert;
  std::call_once(once, [] {
    const THRackSpec spec = spec_of(5, 2, Twist::identity(), P("(1 2)(3 4)", 5));
    const auto rack = th_rack(spec);
    const auto materialized = materialize(*rack, 4096);
    const auto result = decide_type_d(materialized.rack);
    if (!result.certificate) throw ParameterError("no certificate found for " + spec.to_string());
    cert = to_tuple_certificate(materialized, spec, *result.certificate, "search");
  });
  return cert;
}

TupleElement moved(const TupleElement& e, int offset, int degree) {
  TupleElement out;
  for (const auto& p : e.parts) out.parts.push_back(p.shifted(offset, degree));
  return out;
}

}  // namespace

TypeDCertificate gen_iota_12r(const Permutation& ell, int t) {
  require_degree(ell);
  const int n = static_cast<int>(ell.degree());
  const CycleType type = cycle_type(ell * P("(1 2)", n));
  const int r2 = type.count(2);
  if (!type.only_lengths({1, 2}) || r2 < 3 || r2 % 2 == 0) {
    throw ParameterError("iota_12r needs ell (1 2) of type (1^r1, 2^r2) with r2 odd > 1, got " + type.to_string());
  }
  if (!ell.is_even()) throw ParameterError("ell must be even");
  TypeDCertificate cert;
  cert.rack = spec_of(n, t, iota(n), ell);
  cert.generator = to_string(Generator::iota_12r);
  add_parameter(cert, "ell", ell.to_string());
  add_parameter(cert, "t", std::to_string(t));
  if (t >= 3) {
    auto blocks = klein_blocks(r2 - 1, n, 2, t);
    cert.R = std::move(blocks.R);
    cert.S = std::move(blocks.S);
    cert.r = std::move(blocks.r);
    cert.s = std::move(blocks.s);
    add_parameter(cert, "embedding", "klein on points 3.." + std::to_string(n));
    return cert;
  }
  if (t != 2 || n != 7) {
    throw ParameterError("iota_12r with t = 2 is only available for n = 7, ell (1 2) of type (1, 2^3)");
  }
  const auto& base = alt5_involution_search();
  for (const auto& e : base.R) cert.R.push_back(moved(e, 2, n));
  for (const auto& e : base.S) cert.S.push_back(moved(e, 2, n));
  std::sort(cert.R.begin(), cert.R.end());
  std::sort(cert.S.begin(), cert.S.end());
  cert.r = moved(base.r, 2, n);
  cert.s = moved(base.s, 2, n);
  add_parameter(cert, "embedding", "search on alt5:2:id:(1 2)(3 4) moved onto points 3..7");
  return cert;
}

Permutation iota_ell(const CycleType& type_of_ellu, int n) {
  if (type_of_ellu.degree() != n) throw ParameterError("cycle type does not have degree " + std::to_string(n));
  if (type_of_ellu.is_even()) throw ParameterError("ell (1 2) must be odd for ell in Alt_n");
  return with_cycle_type(type_of_ellu, n) * P("(1 2)", n);
}

TypeDCertificate generate(Generator g, int n, int t, const std::optional<Permutation>& ell) {
  auto need_ell = [&]() -> const Permutation& {
    if (!ell) throw ParameterError(to_string(g) + " needs --ell");
    if (static_cast<int>(ell->degree()) != n) throw ParameterError("ell must have degree n");
    return *ell;
  };
  switch (g) {
    case Generator::id_1: return gen_id_1(n, t);
    case Generator::id_12r: return gen_id_12r(need_ell(), t);
    case Generator::id_124:
      if (t != 2) throw ParameterError("id_124 needs t = 2");
      return gen_id_124(need_ell());
    case Generator::id_14:
      if (t != 2) throw ParameterError("id_14 needs t = 2");
      return gen_id_14(need_ell());
    case Generator::iota_12: return gen_iota_12(n, t);
    case Generator::iota_222:
      if (n != 6 || t != 2) throw ParameterError("iota_222 is fixed at n = 6, t = 2");
      return gen_iota_222();
    case Generator::iota_12r: return gen_iota_12r(need_ell(), t);
  }
  throw ParameterError("unknown generator");
}

}  // namespace racklab
