#include "racklab/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace racklab {

using nlohmann::json;

namespace {

json element_json(const TupleElement& e) {
  json out = json::array();
  for (const auto& p : e.parts) out.push_back(p.to_string());
  return out;
}

json block_json(const std::vector<TupleElement>& block) {
  json out = json::array();
  for (const auto& e : block) out.push_back(element_json(e));
  return out;
}

TupleElement element_from(const json& j, std::size_t degree) {
  if (!j.is_array() || j.empty()) throw ParseError("an element must be a nonempty array of cycle strings");
  TupleElement e;
  for (const auto& part : j) {
    if (!part.is_string()) throw ParseError("element coordinates must be strings");
    e.parts.push_back(Permutation::parse(part.get<std::string>(), degree));
  }
  return e;
}

std::vector<TupleElement> block_from(const json& j, std::size_t degree, const char* name) {
  if (!j.is_array()) throw ParseError(std::string(name) + " must be an array");
  std::vector<TupleElement> out;
  for (const auto& e : j) out.push_back(element_from(e, degree));
  return out;
}

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

std::string serialize_certificate(const TypeDCertificate& cert) {
  json doc;
  doc["schema"] = kCertificateSchema;
  doc["rack"] = cert.rack.to_string();
  doc["R"] = block_json(cert.R);
  doc["S"] = block_json(cert.S);
  doc["r"] = element_json(cert.r);
  doc["s"] = element_json(cert.s);
  json params = json::object();
  for (const auto& [key, value] : cert.parameters) params[key] = value;
  doc["meta"] = {{"generator", cert.generator}, {"parameters", params}};
  return doc.dump(1) + "\n";
}

TypeDCertificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
  const json& schema = field(doc, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kCertificateSchema) {
    throw ParseError("unsupported certificate schema " + schema.dump());
  }
  const json& rack = field(doc, "rack");
  if (!rack.is_string()) throw ParseError("rack must be a string");
  TypeDCertificate cert;
  cert.rack = THRackSpec::parse(rack.get<std::string>());
  const auto degree = static_cast<std::size_t>(cert.rack.n);
  cert.R = block_from(field(doc, "R"), degree, "R");
  cert.S = block_from(field(doc, "S"), degree, "S");
  cert.r = element_from(field(doc, "r"), degree);
  cert.s = element_from(field(doc, "s"), degree);
  if (const auto meta = doc.find("meta"); meta != doc.end() && meta->is_object()) {
    if (const auto g = meta->find("generator"); g != meta->end() && g->is_string()) cert.generator = *g;
    if (const auto p = meta->find("parameters"); p != meta->end() && p->is_object()) {
      for (const auto& [key, value] : p->items()) {
        cert.parameters.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
      }
    }
  }
  return cert;
}

void write_certificate(const std::filesystem::path& path, const TypeDCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_certificate(cert);
  if (!out) throw Error("failed writing " + path.string());
}

TypeDCertificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate(buffer.str());
}

}  // namespace racklab
