#pragma once

#include <string>

#include "kw/exactalg/json.hpp"
#include "kw/rootdata/root_system.hpp"

namespace kw {

/// Accepts a type tag ("A1", "A2", "B2", "G2"), a JSON object
/// {"cartan": [[...]]}, or the JSON text of either.
inline RootSystem root_system_from_json(const Json& j) {
  if (j.is_string()) return RootSystem::from_tag(j.get<std::string>());
  if (!j.is_object() || !j.contains("cartan") || !j["cartan"].is_array())
    throw DomainError("root system must be a type tag or {\"cartan\": [[...]]}");
  IntMatrix cartan;
  for (const auto& row : j["cartan"]) {
    if (!row.is_array()) throw DomainError("Cartan matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw DomainError("Cartan matrix entries must be integers");
      r.push_back(v.get<int>());
    }
    cartan.push_back(std::move(r));
  }
  return RootSystem("cartan", std::move(cartan));
}

inline RootSystem parse_root_system(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw DomainError(std::string("malformed root system JSON: ") + e.what());
    }
    return root_system_from_json(j);
  }
  return RootSystem::from_tag(text);
}

}  // namespace kw
