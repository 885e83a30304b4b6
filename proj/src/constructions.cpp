#include "racklab/constructions.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>

namespace racklab {

namespace {

int parse_int(std::string_view text, const std::string& what) {
  if (text.empty() || text.size() > 6) throw ParseError("bad " + what + " '" + std::string(text) + "'");
  int value = 0;
  for (const char c : text) {
    if (c < '0' || c > '9') throw ParseError("bad " + what + " '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

// "alt7" -> 7
int parse_group_degree(std::string_view token, std::string_view prefix) {
  if (!token.starts_with(prefix)) {
    throw ParseError("expected '" + std::string(prefix) + "N', got '" + std::string(token) + "'");
  }
  return parse_int(token.substr(prefix.size()), "group degree");
}

// Splits "<theta>:<ell>" where theta is "id" or "iota:<cycles>".
std::pair<Twist, Permutation> parse_theta_and_ell(std::string_view rest, std::size_t n) {
  std::size_t colon;
  if (rest.starts_with("id:")) {
    colon = 2;
  } else if (rest.starts_with("iota:")) {
    colon = rest.find(':', 5);
    if (colon == std::string_view::npos) throw ParseError("missing ':' after the twist");
  } else {
    throw ParseError("twist must be 'id' or 'iota:<cycles>', got '" + std::string(rest) + "'");
  }
  Twist theta = Twist::parse(rest.substr(0, colon), n);
  Permutation ell = Permutation::parse(rest.substr(colon + 1), n);
  return {std::move(theta), std::move(ell)};
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

}  // namespace

// Twist ------------------------------------------------------------------------

std::string Twist::to_string() const { return by_ ? "iota:" + by_->to_string() : "id"; }

Twist Twist::parse(std::string_view text, std::size_t degree) {
  if (text == "id") return Twist::identity();
  if (text.starts_with("iota:")) return Twist::conjugation(Permutation::parse(text.substr(5), degree));
  throw ParseError("twist must be 'id' or 'iota:<cycles>', got '" + std::string(text) + "'");
}

// TupleElement -----------------------------------------------------------------

Permutation TupleElement::reversed_product() const {
  if (parts.empty()) throw ParameterError("empty tuple");
  Permutation product = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) product = parts[i] * product;
  return product;
}

std::string TupleElement::to_string() const {
  if (parts.size() == 1) return parts.front().to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i].to_string();
  }
  return out + ")";
}

std::size_t TupleElement::hash() const {
  std::size_t h = parts.size();
  for (const auto& p : parts) h = h * 1000003u ^ p.hash();
  return h;
}

std::ostream& operator<<(std::ostream& os, const TupleElement& e) { return os << e.to_string(); }

// THRackSpec -------------------------------------------------------------------

void THRackSpec::validate() const {
  if (n < 1 || static_cast<std::size_t>(n) > kMaxDegree) throw ParameterError("degree out of range");
  if (t < 1) throw ParameterError("tuple length t must be at least 1");
  if (ell.degree() != static_cast<std::size_t>(n)) throw DegreeMismatch("ell has the wrong degree");
  if (theta.by() && theta.by()->degree() != static_cast<std::size_t>(n)) {
    throw DegreeMismatch("twist element has the wrong degree");
  }
  if (group == GroupKind::symmetric) {
    if (t != 1 || !theta.is_identity()) {
      throw ParameterError("symmetric-group racks are plain conjugacy classes (t = 1, theta = id)");
    }
    return;
  }
  if (!ell.is_even()) throw ParameterError("ell must be an even permutation, got " + ell.to_string());
  if (t >= 2 && n < 5) throw ParameterError("twisted homogeneous racks need n >= 5");
}

std::string THRackSpec::to_string() const {
  if (group == GroupKind::symmetric) return "conj:sym" + std::to_string(n) + ":" + ell.to_string();
  if (t == 1) return "twclass:alt" + std::to_string(n) + ":" + theta.to_string() + ":" + ell.to_string();
  return "alt" + std::to_string(n) + ":" + std::to_string(t) + ":" + theta.to_string() + ":" + ell.to_string();
}

THRackSpec THRackSpec::parse(std::string_view text) {
  THRackSpec spec;
  if (text.starts_with("conj:")) {
    const auto rest = text.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected conj:symN:<cycles>");
    spec.group = GroupKind::symmetric;
    spec.n = parse_group_degree(rest.substr(0, colon), "sym");
    spec.t = 1;
    if (spec.n < 1 || static_cast<std::size_t>(spec.n) > kMaxDegree) throw ParseError("degree out of range");
    spec.theta = Twist::identity();
    spec.ell = Permutation::parse(rest.substr(colon + 1), spec.n);
  } else if (text.starts_with("twclass:")) {
    const auto rest = text.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected twclass:altN:<theta>:<cycles>");
    spec.n = parse_group_degree(rest.substr(0, colon), "alt");
    if (spec.n < 1 || static_cast<std::size_t>(spec.n) > kMaxDegree) throw ParseError("degree out of range");
    spec.t = 1;
    std::tie(spec.theta, spec.ell) = parse_theta_and_ell(rest.substr(colon + 1), spec.n);
  } else if (text.starts_with("alt")) {
    const auto c1 = text.find(':');
    if (c1 == std::string_view::npos) throw ParseError("expected altN:t:<theta>:<cycles>");
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError("expected altN:t:<theta>:<cycles>");
    spec.n = parse_group_degree(text.substr(0, c1), "alt");
    if (spec.n < 1 || static_cast<std::size_t>(spec.n) > kMaxDegree) throw ParseError("degree out of range");
    spec.t = parse_int(text.substr(c1 + 1, c2 - c1 - 1), "tuple length");
    std::tie(spec.theta, spec.ell) = parse_theta_and_ell(text.substr(c2 + 1), spec.n);
  } else {
    throw ParseError("unknown rack spec '" + std::string(text) + "'");
  }
  spec.validate();
  return spec;
}

// Twisted orbits and ThRack ---------------------------------------------------

std::vector<Permutation> twisted_orbit(GroupKind group, std::size_t n, const Twist& theta, const Permutation& x,
                                       std::size_t cap) {
  const auto gens = group_generators(group, n);
  std::vector<std::pair<Permutation, Permutation>> actions;  // (y, theta(y^-1))
  for (const auto& y : gens) actions.emplace_back(y, theta.apply(y.inverse()));
  std::unordered_set<Permutation> seen{x};
  std::vector<Permutation> orbit{x};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& [y, twisted_inverse] : actions) {
      Permutation image = y * orbit[k] * twisted_inverse;
      if (seen.insert(image).second) {
        if (orbit.size() >= cap) throw CapExceeded("twisted class exceeds cap of " + std::to_string(cap));
        orbit.push_back(std::move(image));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

ThRack::ThRack(THRackSpec spec, std::size_t class_cap) : spec_(std::move(spec)) {
  spec_.validate();
  class_list_ = twisted_orbit(spec_.group, spec_.n, spec_.theta, spec_.ell, class_cap);
  class_set_.insert(class_list_.begin(), class_list_.end());
}

bool ThRack::contains(const TupleElement& candidate) const {
  if (candidate.size() != static_cast<std::size_t>(spec_.t)) {
    throw ParameterError("tuple of length " + std::to_string(candidate.size()) + " in a rack with t = " +
                         std::to_string(spec_.t));
  }
  for (const auto& part : candidate.parts) {
    if (part.degree() != static_cast<std::size_t>(spec_.n)) throw DegreeMismatch("tuple entry of wrong degree");
    if (spec_.group == GroupKind::alternating && !part.is_even()) {
      throw ParameterError("tuple entry " + part.to_string() + " is not in Alt_" + std::to_string(spec_.n));
    }
  }
  return class_set_.contains(candidate.reversed_product());
}

TupleElement ThRack::op(const TupleElement& a, const TupleElement& b) const {
  const std::size_t t = a.size();
  TupleElement out;
  out.parts.reserve(t);
  out.parts.push_back(a[0] * spec_.theta.apply(b[t - 1] * a[t - 1].inverse()));
  for (std::size_t i = 1; i < t; ++i) out.parts.push_back(a[i] * b[i - 1] * a[i - 1].inverse());
  return out;
}

std::size_t ThRack::universe_size() const {
  std::size_t size = class_list_.size();
  const std::size_t order = group_order(spec_.group, spec_.n);
  for (int i = 1; i < spec_.t; ++i) size = saturating_mul(size, order);
  return size;
}

std::vector<TupleElement> ThRack::enumerate(std::size_t cap) const {
  const std::size_t size = universe_size();
  if (size > cap) {
    throw CapExceeded("universe of " + label() + " has " + std::to_string(size) + " elements, cap is " +
                      std::to_string(cap));
  }
  std::vector<TupleElement> out;
  out.reserve(size);
  const std::size_t t = spec_.t;
  if (t == 1) {
    for (const auto& c : class_list_) out.push_back(TupleElement{{c}});
    return out;
  }
  const auto group = group_elements(spec_.group, spec_.n);
  // Odometer over the first t - 1 coordinates; the last is forced by the class element.
  std::vector<std::size_t> digits(t - 1, 0);
  while (true) {
    TupleElement prefix;
    prefix.parts.reserve(t);
    for (const auto d : digits) prefix.parts.push_back(group[d]);
    const Permutation partial_inverse = prefix.reversed_product().inverse();
    for (const auto& c : class_list_) {
      TupleElement e = prefix;
      e.parts.push_back(c * partial_inverse);
      out.push_back(std::move(e));
    }
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == group.size()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementIndex MaterializedRack::index_of(const TupleElement& e) const {
  const auto it = index.find(e);
  if (it == index.end()) throw NonMemberError(e.to_string() + " is not an element of " + rack.label());
  return it->second;
}

MaterializedRack materialize(const ThRack& lazy, std::size_t cap) {
  auto elements = std::make_shared<std::vector<TupleElement>>(lazy.enumerate(cap));
  auto index = std::make_shared<std::unordered_map<TupleElement, ElementIndex, TupleElementHash>>();
  index->reserve(elements->size());
  std::vector<std::string> names;
  names.reserve(elements->size());
  for (std::size_t i = 0; i < elements->size(); ++i) {
    index->emplace((*elements)[i], static_cast<ElementIndex>(i));
    names.push_back((*elements)[i].to_string());
  }
  auto model = std::make_shared<const ThRack>(lazy);
  FiniteRack rack(
      lazy.label(), elements->size(),
      [model, elements, index](ElementIndex x, ElementIndex y) {
        return index->at(model->op((*elements)[x], (*elements)[y]));
      },
      std::move(names), std::max(cap, kDefaultTableThreshold));
  return MaterializedRack{std::move(rack), *elements, *index};
}

// Builders ----------------------------------------------------------------------

FiniteRack conjugation_rack(std::vector<Permutation> elements) {
  if (elements.empty()) throw ParameterError("conjugation rack of an empty set");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::unordered_map<Permutation, ElementIndex> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<ElementIndex>(i));
    names.push_back(elements[i].to_string());
  }
  std::vector<ElementIndex> table(elements.size() * elements.size());
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t y = 0; y < elements.size(); ++y) {
      const auto it = index.find(conjugate(elements[x], elements[y]));
      if (it == index.end()) throw ParameterError("set is not closed under conjugation");
      table[x * elements.size() + y] = it->second;
    }
  }
  const std::string label = "conjugation rack on " + std::to_string(elements.size()) + " elements";
  return FiniteRack::from_table(label, elements.size(), std::move(table), std::move(names));
}

FiniteRack twisted_class(std::size_t n, const Twist& theta, const Permutation& x) {
  if (!x.is_even()) throw ParameterError("twisted class base point " + x.to_string() + " is odd");
  THRackSpec spec;
  spec.group = GroupKind::alternating;
  spec.n = static_cast<int>(n);
  spec.t = 1;
  spec.theta = theta;
  spec.ell = x;
  return materialize(ThRack(spec), kDefaultClassCap).rack;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FiniteRack permutation_rack(int p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  std::vector<std::string> names;
  for (int i = 0; i < p; ++i) names.push_back(std::to_string(i));
  return FiniteRack(
      "perm:" + std::to_string(p), static_cast<std::size_t>(p),
      [p](ElementIndex, ElementIndex y) { return static_cast<ElementIndex>((y + 1) % p); }, std::move(names));
}

namespace {

std::mutex cache_mutex;
std::unordered_map<std::string, std::shared_ptr<const ThRack>> rack_cache;

std::shared_ptr<const ThRack> cached_rack(const THRackSpec& spec) {
  const std::string key = spec.to_string();
  {
    std::lock_guard lock(cache_mutex);
    if (const auto it = rack_cache.find(key); it != rack_cache.end()) return it->second;
  }
  auto built = std::make_shared<const ThRack>(spec);
  std::lock_guard lock(cache_mutex);
  return rack_cache.emplace(key, std::move(built)).first->second;
}

}  // namespace

std::shared_ptr<const ThRack> th_rack(const THRackSpec& spec) { return cached_rack(spec); }

bool th_membership(const THRackSpec& spec, const TupleElement& candidate) {
  return cached_rack(spec)->contains(candidate);
}

TupleElement rack_op_tuple(const ThRack& rack, const TupleElement& a, const TupleElement& b) {
  if (!rack.contains(a)) throw NonMemberError(a.to_string() + " is not in " + rack.label());
  if (!rack.contains(b)) throw NonMemberError(b.to_string() + " is not in " + rack.label());
  return rack.op(a, b);
}

TupleElement shift_automorphism(const Twist& theta, const TupleElement& x) {
  TupleElement out;
  out.parts.reserve(x.size());
  out.parts.push_back(theta.apply(x.parts.back()));
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out.parts.push_back(x[i]);
  return out;
}

}  // namespace racklab
