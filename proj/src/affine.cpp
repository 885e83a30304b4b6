#include "racklab/affine.hpp"

#include <sstream>

#include "racklab/constructions.hpp"

namespace racklab {

namespace {

int mod(long v, int p) { return static_cast<int>(((v % p) + p) % p); }

// Remainder of a modulo the monic polynomial b over F_p.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - static_cast<long>(lead) * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<int>& coefficients, int p) {
  const int degree = static_cast<int>(coefficients.size()) - 1;
  if (degree < 1) return false;
  if (degree == 1) return true;
  // A reducible polynomial has a monic factor of degree at most degree / 2.
  for (int d = 1; d <= degree / 2; ++d) {
    std::vector<int> factor(d + 1, 0);
    factor[d] = 1;
    long combos = 1;
    for (int i = 0; i < d; ++i) combos *= p;
    for (long code = 0; code < combos; ++code) {
      long c = code;
      for (int i = 0; i < d; ++i) {
        factor[i] = static_cast<int>(c % p);
        c /= p;
      }
      const auto rem = poly_rem(coefficients, factor, p);
      bool zero = true;
      for (const int r : rem) zero = zero && r == 0;
      if (zero) return false;
    }
  }
  return true;
}

void AffineSpec::validate() const {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  if (t < 1) throw ParameterError("affine degree must be positive");
  if (coefficients.size() != static_cast<std::size_t>(t) + 1) {
    throw ParameterError("expected " + std::to_string(t + 1) + " coefficients");
  }
  for (const int c : coefficients) {
    if (c < 0 || c >= p) throw ParameterError("coefficient outside F_" + std::to_string(p));
  }
  if (coefficients.back() != 1) throw ParameterError("polynomial must be monic");
  if (t == 1 && coefficients[0] == 0) throw ParameterError("polynomial X is excluded");
  if (t == 1 && coefficients[0] == p - 1) throw ParameterError("polynomial X - 1 is excluded");
  if (!is_irreducible(coefficients, p)) throw ParameterError("polynomial " + to_string() + " is reducible");
  long size = 1;
  for (int i = 0; i < t; ++i) {
    size *= p;
    if (size > 1 << 20) throw CapExceeded("affine rack too large");
  }
}

std::string AffineSpec::to_string() const {
  std::string out = "affine:" + std::to_string(p) + ":" + std::to_string(t) + ":";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coefficients[i]);
  }
  return out;
}

AffineSpec AffineSpec::parse(std::string_view text) {
  if (!text.starts_with("affine:")) throw ParseError("expected affine:p:t:c0,...,ct");
  std::stringstream ss{std::string(text.substr(7))};
  std::string p_text, t_text, coeff_text;
  if (!std::getline(ss, p_text, ':') || !std::getline(ss, t_text, ':') || !std::getline(ss, coeff_text)) {
    throw ParseError("expected affine:p:t:c0,...,ct");
  }
  AffineSpec spec;
  try {
    spec.p = std::stoi(p_text);
    spec.t = std::stoi(t_text);
    std::stringstream cs(coeff_text);
    std::string item;
    while (std::getline(cs, item, ',')) spec.coefficients.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw ParseError("bad affine spec '" + std::string(text) + "'");
  }
  return spec;
}

std::vector<AffineSpec> affine_specs(int p, int t) {
  std::vector<AffineSpec> out;
  long combos = 1;
  for (int i = 0; i < t; ++i) combos *= p;
  for (long code = 0; code < combos; ++code) {
    AffineSpec spec{p, t, std::vector<int>(t + 1, 0)};
    long c = code;
    for (int i = 0; i < t; ++i) {
      spec.coefficients[i] = static_cast<int>(c % p);
      c /= p;
    }
    spec.coefficients[t] = 1;
    if (t == 1 && (spec.coefficients[0] == 0 || spec.coefficients[0] == p - 1)) continue;
    if (!is_irreducible(spec.coefficients, p)) continue;
    out.push_back(std::move(spec));
  }
  return out;
}

FiniteRack affine_rack(const AffineSpec& spec) {
  spec.validate();
  const int p = spec.p;
  const int t = spec.t;
  std::size_t size = 1;
  for (int i = 0; i < t; ++i) size *= p;

  auto decode = [p, t](ElementIndex code) {
    std::vector<int> v(t);
    for (int i = 0; i < t; ++i) {
      v[i] = static_cast<int>(code % p);
      code /= p;
    }
    return v;
  };
  auto encode = [p, t](const std::vector<int>& v) {
    ElementIndex code = 0;
    for (int i = t - 1; i >= 0; --i) code = code * p + v[i];
    return code;
  };
  // Multiplication by X: shift up, then reduce X^t = -(c_0 + ... + c_{t-1} X^{t-1}).
  const auto coeffs = spec.coefficients;
  auto times_x = [p, t, coeffs](const std::vector<int>& v) {
    std::vector<int> out(t, 0);
    const int top = v[t - 1];
    for (int i = t - 1; i >= 1; --i) out[i] = v[i - 1];
    for (int i = 0; i < t; ++i) out[i] = mod(out[i] - static_cast<long>(top) * coeffs[i], p);
    return out;
  };

  std::vector<std::string> names;
  for (ElementIndex code = 0; code < size; ++code) {
    const auto v = decode(code);
    std::string name = "(";
    for (int i = 0; i < t; ++i) name += (i ? "," : "") + std::to_string(v[i]);
    names.push_back(name + ")");
  }
  return FiniteRack(
      spec.to_string(), size,
      [=](ElementIndex x, ElementIndex y) {
        const auto vx = decode(x);
        const auto vy = decode(y);
        std::vector<int> diff(t);
        for (int i = 0; i < t; ++i) diff[i] = mod(vy[i] - vx[i], p);
        const auto g = times_x(diff);
        std::vector<int> out(t);
        for (int i = 0; i < t; ++i) out[i] = mod(vx[i] + g[i], p);
        return encode(out);
      },
      std::move(names));
}

}  // namespace racklab
