#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "haar.hpp"
#include "report.hpp"
#include "step_function.hpp"

namespace dyadic {

inline nlohmann::json step_to_json(const StepFunction& f) {
  return nlohmann::json{{"m", f.m()}, {"level", f.level()}, {"values", f.values()}};
}

inline StepFunction step_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("level") || !j.contains("values"))
    throw std::invalid_argument("StepFunction JSON needs fields m, level, values");
  return StepFunction(j.at("m").get<int>(), j.at("level").get<int>(),
                      j.at("values").get<std::vector<double>>());
}

inline nlohmann::json coeffs_to_json(const CoeffMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [kj, v] : a.entries())
    entries.push_back({{"k", kj.first}, {"j", kj.second}, {"a", v}});
  return nlohmann::json{{"entries", entries}};
}

inline CoeffMatrix coeffs_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw std::invalid_argument("CoeffMatrix JSON needs field entries");
  CoeffMatrix a;
  for (const auto& e : j.at("entries"))
    a.set(e.at("k").get<int>(), e.at("j").get<int>(), e.at("a").get<double>());
  return a;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

inline nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
}

/// Git-style blob hash: SHA-1 of "blob <size>\0<content>", hex-encoded.
inline std::string git_blob_sha1(const std::string& content) {
  const std::string header = "blob " + std::to_string(content.size());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw std::runtime_error("git_blob_sha1: EVP context allocation failed");
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, header.data(), header.size() + 1) == 1 &&
                  EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 &&
                  EVP_DigestFinal_ex(ctx, digest, &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("git_blob_sha1: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

namespace detail {
inline void flatten_into(const std::string& prefix, const nlohmann::json& v,
                         std::vector<std::pair<std::string, std::string>>& cells) {
  if (v.is_object()) {
    for (const auto& [key, val] : v.items())
      flatten_into(prefix.empty() ? key : prefix + "." + key, val, cells);
  } else if (v.is_string()) {
    cells.emplace_back(prefix, v.get<std::string>());
  } else {
    cells.emplace_back(prefix, v.dump());
  }
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}
}  // namespace detail

/// CSV table of reports: nested params/observed/bound keys become dotted
/// column names; the header is the union of keys in first-seen order.
inline std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& rep : reports) {
    std::vector<std::pair<std::string, std::string>> cells;
    detail::flatten_into("check", nlohmann::json(rep.check), cells);
    detail::flatten_into("pass", nlohmann::json(rep.pass), cells);
    detail::flatten_into("params", rep.params, cells);
    detail::flatten_into("observed", rep.observed, cells);
    detail::flatten_into("bound", rep.bound, cells);
    for (const auto& [name, value] : cells)
      if (std::find(columns.begin(), columns.end(), name) == columns.end())
        columns.push_back(name);
    rows.push_back(std::move(cells));
  }
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ",";
    out += detail::csv_escape(columns[c]);
  }
  out += "\n";
  for (const auto& cells : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ",";
      for (const auto& [name, value] : cells)
        if (name == columns[c]) {
          out += detail::csv_escape(value);
          break;
        }
    }
    out += "\n";
  }
  return out;
}

}  // namespace dyadic
