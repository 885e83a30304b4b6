#include "racklab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace racklab {

namespace {

void check_degree(std::size_t degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw ParameterError("permutation degree must lie in [1, " + std::to_string(kMaxDegree) +
                         "], got " + std::to_string(degree));
  }
}

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation::Permutation(std::size_t degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[v - 1]) {
      throw ParseError("image list is not a bijection of {1.." + std::to_string(images.size()) + "}");
    }
    seen[v - 1] = true;
    p.images_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  text = trim(text);
  if (text.empty() || text == "e" || text == "()") return p;

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') throw fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw fail("unclosed cycle");
    std::vector<int> cycle;
    std::size_t i = pos + 1;
    while (i < close) {
      const char d = text[i];
      if (std::isspace(static_cast<unsigned char>(d)) || d == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(d))) throw fail("unexpected character");
      int value = 0;
      while (i < close && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000) throw fail("point out of range");
        ++i;
      }
      if (value < 1 || static_cast<std::size_t>(value) > degree) {
        throw fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      if (used[value - 1]) throw fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value);
    }
    if (cycle.empty()) throw fail("empty cycle inside a product");
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      p.images_[from - 1] = static_cast<std::uint8_t>(to - 1);
    }
    pos = close + 1;
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  require_same_degree(*this, rhs);
  Permutation out(*this);
  for (std::size_t i = 0; i < degree_; ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(*this);
  for (std::size_t i = 0; i < degree_; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  // n minus the number of cycles counts the transpositions needed.
  std::size_t cycles = 0;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return (degree_ - cycles) % 2 == 0;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& [length, count] : cycle_type(*this).multiplicities()) {
    (void)count;
    result = std::lcm(result, static_cast<std::size_t>(length));
  }
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < degree_) throw ParameterError("cannot shrink a permutation by extension");
  Permutation out(degree);
  std::copy_n(images_.begin(), degree_, out.images_.begin());
  return out;
}

Permutation Permutation::shifted(int offset, std::size_t degree) const {
  Permutation out(degree);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (images_[i] == i) continue;
    const long from = static_cast<long>(i) + offset;
    const long to = static_cast<long>(images_[i]) + offset;
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= degree ||
        static_cast<std::size_t>(to) >= degree) {
      throw ParameterError("shifted permutation leaves {1.." + std::to_string(degree) + "}");
    }
    out.images_[from] = static_cast<std::uint8_t>(to);
  }
  return out;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the used images.
  std::uint64_t h = 1469598103934665603ULL ^ degree_;
  for (std::size_t i = 0; i < degree_; ++i) {
    h ^= images_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation inverse(const Permutation& a) { return a.inverse(); }

Permutation conjugate(const Permutation& a, const Permutation& b) { return a * b * a.inverse(); }

Parity parity(const Permutation& a) { return a.is_even() ? Parity::even : Parity::odd; }

// CycleType ------------------------------------------------------------------

CycleType::CycleType(std::map<int, int> multiplicities) {
  for (const auto& [length, count] : multiplicities) {
    if (length < 1 || count < 0) throw ParameterError("invalid cycle type entry");
    if (count > 0) counts_[length] = count;
  }
}

CycleType CycleType::parse(std::string_view text) {
  std::string cleaned;
  for (const char c : text) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned += c;
  }
  if (cleaned.empty()) throw ParseError("empty cycle type");
  std::map<int, int> counts;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("bad cycle type '" + std::string(text) + "'");
    int length = 0;
    int count = 1;
    try {
      const auto caret = item.find('^');
      std::size_t used = 0;
      length = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw ParseError("");
      if (caret != std::string::npos) {
        const auto rest = item.substr(caret + 1);
        count = std::stoi(rest, &used);
        if (used != rest.size()) throw ParseError("");
      }
    } catch (const std::exception&) {
      throw ParseError("bad cycle type '" + std::string(text) + "'");
    }
    if (length < 1 || count < 0) throw ParseError("bad cycle type '" + std::string(text) + "'");
    counts[length] += count;
  }
  return CycleType(std::move(counts));
}

int CycleType::count(int length) const {
  const auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

int CycleType::degree() const {
  int n = 0;
  for (const auto& [length, count] : counts_) n += length * count;
  return n;
}

bool CycleType::is_even() const {
  int transpositions = 0;
  for (const auto& [length, count] : counts_) transpositions += (length - 1) * count;
  return transpositions % 2 == 0;
}

bool CycleType::only_lengths(std::initializer_list<int> lengths) const {
  for (const auto& [length, count] : counts_) {
    (void)count;
    if (std::find(lengths.begin(), lengths.end(), length) == lengths.end()) return false;
  }
  return true;
}

std::string CycleType::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& [length, count] : counts_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(length);
    if (count != 1) out += "^" + std::to_string(count);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const CycleType& c) { return os << c.to_string(); }

CycleType cycle_type(const Permutation& a) {
  std::map<int, int> counts;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 1; i <= static_cast<int>(a.degree()); ++i) {
    if (seen[i - 1]) continue;
    int length = 0;
    for (int j = i; !seen[j - 1]; j = a(j)) {
      seen[j - 1] = true;
      ++length;
    }
    ++counts[length];
  }
  return CycleType(std::move(counts));
}

Permutation with_cycle_type(const CycleType& type, std::size_t degree, int first_point) {
  Permutation p(degree);
  std::vector<int> images = p.images();
  int next = first_point;
  for (const auto& [length, count] : type.multiplicities()) {
    if (length == 1) continue;
    for (int c = 0; c < count; ++c) {
      if (next + length - 1 > static_cast<int>(degree)) {
        throw ParameterError("cycle type " + type.to_string() + " does not fit in degree " +
                             std::to_string(degree));
      }
      for (int k = 0; k < length; ++k) images[next + k - 1] = next + (k + 1) % length;
      next += length;
    }
  }
  return Permutation::from_images(images);
}

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<CycleType> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::map<int, int> counts;
      for (const int part : parts) ++counts[part];
      out.emplace_back(std::move(counts));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation induced_action(const Permutation& a, std::span<const Permutation> basepoints) {
  std::vector<int> images(basepoints.size());
  for (std::size_t j = 0; j < basepoints.size(); ++j) {
    const Permutation image = conjugate(a, basepoints[j]);
    const auto it = std::find(basepoints.begin(), basepoints.end(), image);
    if (it == basepoints.end()) {
      throw ParameterError("conjugation by " + a.to_string() + " does not stabilize the basepoints");
    }
    images[j] = static_cast<int>(it - basepoints.begin()) + 1;
  }
  return Permutation::from_images(images);
}

std::vector<Permutation> generate_subgroup(std::span<const Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw ParameterError("generate_subgroup needs at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generators of different degrees");
  }
  std::unordered_set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  std::vector<Permutation> elements{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Permutation q = g * p;
        if (seen.insert(q).second) {
          if (seen.size() > cap) {
            throw CapExceeded("subgroup exceeds cap of " + std::to_string(cap) + " elements");
          }
          elements.push_back(q);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Permutation> group_generators(GroupKind kind, std::size_t n) {
  std::vector<Permutation> gens;
  if (kind == GroupKind::alternating) {
    for (std::size_t k = 3; k <= n; ++k) {
      gens.push_back(Permutation::parse("(1 2 " + std::to_string(k) + ")", n));
    }
  } else if (n >= 2) {
    gens.push_back(Permutation::parse("(1 2)", n));
    std::string cycle = "(";
    for (std::size_t k = 1; k <= n; ++k) cycle += std::to_string(k) + (k < n ? " " : ")");
    gens.push_back(Permutation::parse(cycle, n));
  }
  if (gens.empty()) gens.push_back(Permutation(n));
  return gens;
}

std::size_t group_order(GroupKind kind, std::size_t n) {
  std::size_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) order *= k;
  if (kind == GroupKind::alternating && n >= 2) order /= 2;
  return order;
}

std::vector<Permutation> group_elements(GroupKind kind, std::size_t n) {
  if (n > 10) {
    throw CapExceeded("refusing to enumerate a group of degree " + std::to_string(n));
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(group_order(kind, n));
  do {
    Permutation p = Permutation::from_images(images);
    if (kind == GroupKind::symmetric || p.is_even()) out.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace racklab
