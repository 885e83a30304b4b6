#pragma once

// Known type D status of twisted homogeneous racks C_ell of type
// (Alt_n, t, theta), indexed by the cycle type of ell u where u = e for
// theta = id and u = (1 2) for theta = iota_(1 2). The rows are reference
// data, not computation; rows resolved by a generator name it so the claim
// can be re-certified.

#include <optional>
#include <string>
#include <string_view>

#include "racklab/generators.hpp"

namespace racklab {

enum class ThetaKind { id, iota };
enum class Status { type_d_proved, not_type_d, unknown };

std::string to_string(ThetaKind theta);
std::string to_string(Status status);
ThetaKind parse_theta_kind(std::string_view text);
Status parse_status(std::string_view text);

struct StatusEntry {
  int n = 5;
  int t = 1;
  ThetaKind theta = ThetaKind::id;
  CycleType type;  // of ell u
  Status status = Status::unknown;
  std::string source;
  // Set when one of the generators in this library proves the row.
  std::optional<Generator> generator;
};

// Throws ParameterError for n < 5, t < 1, a type of the wrong degree, or a
// type of the wrong parity (ell u is even for id and odd for iota).
StatusEntry classify_status(int n, int t, ThetaKind theta, const CycleType& type_of_ellu);

// A representative ell for the row: with_cycle_type for id, iota_ell for iota.
Permutation representative_ell(const StatusEntry& entry);

// Runs the row's generator. Returns nullopt when the row names none.
std::optional<TypeDCertificate> certify(const StatusEntry& entry);

}  // namespace racklab
