#pragma once

#include <json.hpp>

#include <string>

#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/rook.hpp"

namespace segmon {

/// {"zero": true} for the zero element, otherwise
/// {"k": "p/q", "d": "p/q", "m": "p/q", "n": N}.
inline nlohmann::json element_to_json(const Element& x) {
  if (x.is_zero()) return nlohmann::json{{"zero", true}};
  return nlohmann::json{{"k", x.lo().str()},
                        {"d", x.shift().str()},
                        {"m", x.hi().str()},
                        {"n", x.ambient()}};
}

/// Inverse of element_to_json.  A triplet's "n" field must equal the
/// expected ambient; the zero form carries no ambient of its own.
inline Element element_from_json(const nlohmann::json& j, int ambient) {
  if (!j.is_object()) {
    throw ValidationError("element JSON must be an object");
  }
  if (j.contains("zero")) {
    if (!j.at("zero").is_boolean() || !j.at("zero").get<bool>()) {
      throw ValidationError("element JSON field \"zero\" must be true");
    }
    return Element::zero(ambient);
  }
  for (const char* field : {"k", "d", "m"}) {
    if (!j.contains(field) || !j.at(field).is_string()) {
      throw ValidationError(std::string("element JSON needs string field \"") +
                            field + "\"");
    }
  }
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw ValidationError("element JSON needs integer field \"n\"");
  }
  const int n = j.at("n").get<int>();
  if (n != ambient) {
    throw ValidationError("element JSON ambient n=" + std::to_string(n) +
                          " does not match expected n=" +
                          std::to_string(ambient));
  }
  return Element::make(ambient,
                       Rational::parse(j.at("k").get<std::string>()),
                       Rational::parse(j.at("d").get<std::string>()),
                       Rational::parse(j.at("m").get<std::string>()));
}

/// The enumerated integer monoid with the matrix model of every member.
inline nlohmann::json enumeration_to_json(int n) {
  const auto elements = enumerate_integer_monoid(n);
  nlohmann::json members = nlohmann::json::array();
  for (const auto& x : elements) {
    members.push_back(nlohmann::json{{"element", element_to_json(x)},
                                     {"height", x.height().str()},
                                     {"matrix", to_matrix(x).rows()}});
  }
  return nlohmann::json{
      {"n", n}, {"count", elements.size()}, {"elements", members}};
}

}  // namespace segmon
