#pragma once

#include <cmath>
#include <string>
#include <utility>

#include <json.hpp>

namespace dyadic {

/// JSON has no infinity; render non-finite values as strings.
inline nlohmann::json json_num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

/// Outcome of one verification check. `params` identifies the instance,
/// `observed` holds measured quantities, `bound` the limits they were
/// compared against. Serializes to {"check","params","observed","bound","pass"}.
struct VerificationReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json observed = nlohmann::json::object();
  nlohmann::json bound = nlohmann::json::object();
  bool pass = false;
};

inline nlohmann::json to_json(const VerificationReport& r) {
  return nlohmann::json{{"check", r.check},
                        {"params", r.params},
                        {"observed", r.observed},
                        {"bound", r.bound},
                        {"pass", r.pass}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.check = j.at("check").get<std::string>();
  r.params = j.at("params");
  r.observed = j.at("observed");
  r.bound = j.at("bound");
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace dyadic
