#pragma once

// Certificate documents, JSON with schema "1":
//   {"schema": "1", "rack": "<spec>",
//    "R": [[cycles, ...], ...], "S": [...], "r": [cycles, ...], "s": [...],
//    "meta": {"generator": "...", "parameters": {"key": "value"}}}
// Each element is the array of its coordinates in cycle notation.

#include <filesystem>
#include <string>
#include <string_view>

#include "racklab/typed.hpp"

namespace racklab {

inline constexpr const char* kCertificateSchema = "1";

std::string serialize_certificate(const TypeDCertificate& cert);

// Throws ParseError on malformed documents or an unknown schema.
TypeDCertificate parse_certificate(std::string_view text);

void write_certificate(const std::filesystem::path& path, const TypeDCertificate& cert);
TypeDCertificate read_certificate(const std::filesystem::path& path);

}  // namespace racklab
