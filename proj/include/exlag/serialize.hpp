#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "exlag/exceptional.hpp"

namespace exlag {

using json = nlohmann::json;

/// ["p/q", ...] in ascending degree; the zero polynomial is [].
inline json poly_to_json(const RationalPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

inline RationalPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw ParameterError("polynomial JSON must be an array of \"p/q\" strings");
  std::vector<BigRational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParameterError("polynomial coefficient must be a string, got " + c.dump());
    coeffs.push_back(BigRational::parse(c.get<std::string>()));
  }
  return RationalPolynomial(std::move(coeffs));
}

inline json pair_to_json(const PairF& F) { return json{{"f1", F.f1()}, {"f2", F.f2()}}; }

/// {"f1": [...], "f2": [...]}; missing components are empty.
inline PairF pair_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("pair JSON must be an object with keys f1 and f2");
  auto component = [&](const char* key) {
    std::vector<long> out;
    if (!j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw ParameterError(std::string("pair field ") + key + " must be an array");
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw ParameterError(std::string("pair field ") + key + " holds a non-integer " + v.dump());
      out.push_back(v.get<long>());
    }
    return out;
  };
  for (const auto& [key, value] : j.items())
    if (key != "f1" && key != "f2") throw ParameterError("unknown pair field '" + key + "'");
  return PairF(component("f1"), component("f2"));
}

inline PairF pair_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("malformed pair JSON: ") + e.what());
  }
  return pair_from_json(j);
}

}  // namespace exlag
