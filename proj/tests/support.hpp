#pragma once

#include "elephant/ratpoly.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace testing {

inline elephant::Rational Q(const char* text) { return elephant::parse_rational(text); }

// Polynomial from coefficient strings, lowest degree first.
inline elephant::DensePoly P(std::initializer_list<const char*> coeffs) {
  std::vector<elephant::Rational> cs;
  for (const char* c : coeffs) cs.push_back(Q(c));
  return elephant::DensePoly(std::move(cs));
}

inline nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(ELEPHANT_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  return nlohmann::json::parse(in);
}

inline elephant::DensePoly poly_from_strings(const nlohmann::json& coeffs) {
  std::vector<elephant::Rational> cs;
  for (const auto& c : coeffs) cs.push_back(Q(c.get<std::string>().c_str()));
  return elephant::DensePoly(std::move(cs));
}

}  // namespace testing
