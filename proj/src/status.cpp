#include "racklab/status.hpp"

#include <numeric>

namespace racklab {

namespace {

constexpr const char* kPrior = "prior classification";

bool gcd_with_factorial_is_one(int t, int n) {
  for (int k = 2; k <= n; ++k) {
    if (std::gcd(t, k) != 1) return false;
  }
  return true;
}

bool is_prime_length(int p) { return is_prime(p); }

// t = 1 types whose classes are not known to be of type D.
bool in_first_exception_list(const CycleType& type) {
  const int s1 = type.count(1), s2 = type.count(2), s3 = type.count(3);
  const int n = type.degree();
  if (n == 5 && s2 == 1 && s3 == 1) return true;
  if (n == 6 && s2 == 3) return true;
  return type.only_lengths({1, 2}) && s2 == 1 && s1 + 2 == n;
}

// t = 1 types not known to be of type D but known to collapse.
bool in_second_exception_list(const CycleType& type) {
  const int s1 = type.count(1), s2 = type.count(2), s3 = type.count(3);
  const int n = type.degree();
  if (n == 6 && s3 == 2) return true;
  if (n == 7 && s2 == 2 && s3 == 1) return true;
  if (type.only_lengths({1, 3}) && s3 == 1) return true;
  if (n == 8 && s2 == 4) return true;
  if (n == 6 && s1 == 2 && s2 == 2) return true;
  if (n == 5 && s1 == 1 && s2 == 2) return true;
  // (1, p) and (p) for p prime.
  if (is_prime_length(n) && type.count(n) == 1) return true;
  if (is_prime_length(n - 1) && s1 == 1 && type.count(n - 1) == 1) return true;
  return false;
}

StatusEntry make(int n, int t, ThetaKind theta, const CycleType& type, Status status, std::string source,
                 std::optional<Generator> generator = std::nullopt) {
  return StatusEntry{n, t, theta, type, status, std::move(source), generator};
}

}  // namespace

std::string to_string(ThetaKind theta) { return theta == ThetaKind::id ? "id" : "iota"; }

std::string to_string(Status status) {
  switch (status) {
    case Status::type_d_proved: return "type-D-proved";
    case Status::not_type_d: return "not-type-D";
    case Status::unknown: return "unknown";
  }
  return "?";
}

ThetaKind parse_theta_kind(std::string_view text) {
  if (text == "id") return ThetaKind::id;
  if (text == "iota" || text == "iota:(1 2)") return ThetaKind::iota;
  throw ParseError("unknown theta '" + std::string(text) + "'");
}

Status parse_status(std::string_view text) {
  for (const auto s : {Status::type_d_proved, Status::not_type_d, Status::unknown}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown status '" + std::string(text) + "'");
}

StatusEntry classify_status(int n, int t, ThetaKind theta, const CycleType& type) {
  if (n < 5) throw ParameterError("n must be at least 5");
  if (t < 1) throw ParameterError("t must be at least 1");
  if (type.degree() != n) throw ParameterError("cycle type " + type.to_string() + " is not of degree " + std::to_string(n));
  if (theta == ThetaKind::id && !type.is_even()) throw ParameterError("ell u must be even when theta = id");
  if (theta == ThetaKind::iota && type.is_even()) throw ParameterError("ell u must be odd when theta = iota");

  const int s1 = type.count(1), s2 = type.count(2), s4 = type.count(4);

  if (t == 1) {
    if (in_first_exception_list(type)) {
      return make(n, t, theta, type, Status::unknown, "t = 1 exception, not known to be of type D");
    }
    if (in_second_exception_list(type)) {
      return make(n, t, theta, type, Status::unknown, "t = 1 exception, known to collapse");
    }
    return make(n, t, theta, type, Status::type_d_proved, kPrior);
  }

  if (theta == ThetaKind::id) {
    if (s1 == n) {
      if (gcd_with_factorial_is_one(t, n)) {
        return make(n, t, theta, type, Status::unknown, "identity class with gcd(t, n!) = 1");
      }
      if (t == 2 && (n == 5 || n == 6)) {
        return make(n, t, theta, type, Status::not_type_d, "exhaustive search");
      }
      if (t % 2 == 0 && t >= 4) return make(n, t, theta, type, Status::type_d_proved, "id_1", Generator::id_1);
      return make(n, t, theta, type, Status::type_d_proved, kPrior);
    }
    if (type.only_lengths({1, 2}) && s2 % 2 == 0 && t >= 3) {
      return make(n, t, theta, type, Status::type_d_proved, "id_12r", Generator::id_12r);
    }
    if (type.only_lengths({1, 2, 4}) && s4 > 0 && t == 2) {
      if (s2 > 0) return make(n, t, theta, type, Status::type_d_proved, "id_124", Generator::id_124);
      return make(n, t, theta, type, Status::type_d_proved, "id_14", Generator::id_14);
    }
    return make(n, t, theta, type, Status::type_d_proved, kPrior);
  }

  if (s1 <= 1 && s2 == 0) {
    return make(n, t, theta, type, Status::unknown, "twisted, s1 <= 1 and s2 = 0");
  }
  if (type.only_lengths({1, 2, 4}) && s4 >= 1 && (s1 <= 2 || s2 >= 1) && t == 2) {
    return make(n, t, theta, type, Status::unknown, "twisted, types (1^s1, 2^s2, 4^s4) with t = 2");
  }
  if (type.only_lengths({1, 2}) && s2 == 1) {
    if (t % 2 == 0) return make(n, t, theta, type, Status::type_d_proved, "iota_12", Generator::iota_12);
    return make(n, t, theta, type, Status::type_d_proved, kPrior);
  }
  if (n == 6 && s2 == 3 && t == 2) {
    return make(n, t, theta, type, Status::type_d_proved, "iota_222", Generator::iota_222);
  }
  if (type.only_lengths({1, 2}) && s2 >= 3 && s2 % 2 == 1) {
    if (t >= 3 || (t == 2 && n == 7 && s1 == 1)) {
      return make(n, t, theta, type, Status::type_d_proved, "iota_12r", Generator::iota_12r);
    }
  }
  return make(n, t, theta, type, Status::type_d_proved, kPrior);
}

Permutation representative_ell(const StatusEntry& entry) {
  if (entry.theta == ThetaKind::id) return with_cycle_type(entry.type, entry.n);
  return iota_ell(entry.type, entry.n);
}

std::optional<TypeDCertificate> certify(const StatusEntry& entry) {
  if (!entry.generator) return std::nullopt;
  return generate(*entry.generator, entry.n, entry.t, representative_ell(entry));
}

}  // namespace racklab
