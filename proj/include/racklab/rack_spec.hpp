#pragma once

// One textual descriptor for every rack family:
//   perm:p | affine:p:t:c0,...,ct | conj:symN:<cycles>
//   twclass:altN:<theta>:<cycles> | altN:t:<theta>:<cycles>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "racklab/affine.hpp"
#include "racklab/constructions.hpp"

namespace racklab {

struct PermutationRackSpec {
  int p = 2;
  friend bool operator==(const PermutationRackSpec&, const PermutationRackSpec&) = default;
};

using RackSpec = std::variant<PermutationRackSpec, AffineSpec, THRackSpec>;

// Throws ParseError or ParameterError.
RackSpec parse_rack_spec(std::string_view text);
std::string to_string(const RackSpec& spec);

// A rack built from a descriptor. Tuple-valued racks keep their elements.
struct BuiltRack {
  std::optional<FiniteRack> plain;
  std::optional<MaterializedRack> tuples;

  const FiniteRack& rack() const { return tuples ? tuples->rack : *plain; }
};

// Throws CapExceeded when the universe exceeds `cap`.
BuiltRack build_rack(const RackSpec& spec, std::size_t cap = kDefaultUniverseCap);

}  // namespace racklab
