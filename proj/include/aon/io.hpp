#pragma once

// Instance files:
//   {"items": [{"profit": 3, "prob": 0.5}, ...]}
// "prob" may be a JSON number, a decimal string ("0.25", parsed to the
// nearest double, ties to even) or an exact rational {"num": k, "den": K}.
// Reduced instances add "K", "target", "dropped" and "source_index" and always
// write the rational form.

#include <aon/core.hpp>
#include <aon/rational.hpp>
#include <aon/reduction.hpp>

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

namespace aon {

using json = nlohmann::json;

namespace detail {

inline double decimal_to_double(const std::string& text) {
  if (!is_decimal_literal(text)) {
    throw Error(ErrorCode::ParseError, "probability string is not a decimal: '" + text + "'");
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "probability string out of range: '" + text + "'");
  }
  return v;
}

inline std::int64_t require_integer(const json& j, const char* what) {
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) {
      throw Error(ErrorCode::ParseError, std::string(what) + " exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
}

inline double parse_prob(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return decimal_to_double(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    const std::int64_t num = require_integer(j.at("num"), "num");
    const std::int64_t den = require_integer(j.at("den"), "den");
    if (den <= 0 || num < 0) throw Error(ErrorCode::ParseError, "rational probability needs num >= 0, den > 0");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return rational_to_double(q);
  }
  throw Error(ErrorCode::ParseError, "prob must be a number, a decimal string or {num, den}");
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline Instance instance_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("items") || !doc.at("items").is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with an \"items\" array");
  }
  Instance out;
  for (const json& item : doc.at("items")) {
    if (!item.is_object() || !item.contains("profit") || !item.contains("prob")) {
      throw Error(ErrorCode::ParseError, "each item needs \"profit\" and \"prob\"");
    }
    out.items.push_back({detail::require_integer(item.at("profit"), "profit"),
                         detail::parse_prob(item.at("prob"))});
  }
  return out;
}

inline Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return instance_from_json(doc);
}

/// One item per line; probabilities with 17 significant digits.
inline std::string write_instance(const Instance& instance) {
  std::string out = "{\"items\": [";
  for (Index i = 0; i < instance.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "  {\"profit\": " + std::to_string(instance[i].profit) +
           ", \"prob\": " + detail::format_double(instance[i].prob) + "}";
  }
  out += instance.items.empty() ? "]}\n" : "\n]}\n";
  return out;
}

inline std::string write_reduced(const ReducedInstance& red) {
  const auto index_list = [](const auto& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
  };
  std::string out = "{\"K\": " + std::to_string(red.K) + ", \"target\": " + std::to_string(red.target) +
                    ", \"dropped\": " + index_list(red.dropped) +
                    ", \"source_index\": " + index_list(red.source_index) + ",\n \"items\": [";
  for (Index i = 0; i < red.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "  {\"profit\": " + std::to_string(red.profits[i]) + ", \"prob\": {\"num\": " +
           std::to_string(red.numerators[i]) + ", \"den\": " + std::to_string(red.K) + "}}";
  }
  out += "\n]}\n";
  return out;
}

/// Reads the exact form back; every probability must be a {num, den} pair
/// with den = K.
inline ReducedInstance parse_reduced(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  ReducedInstance red;
  try {
    red.K = static_cast<std::uint64_t>(detail::require_integer(doc.at("K"), "K"));
    red.target = detail::require_integer(doc.at("target"), "target");
    for (const json& d : doc.at("dropped")) red.dropped.push_back(static_cast<Index>(detail::require_integer(d, "dropped")));
    for (const json& s : doc.at("source_index")) {
      red.source_index.push_back(static_cast<Index>(detail::require_integer(s, "source_index")));
    }
    for (const json& item : doc.at("items")) {
      const json& prob = item.at("prob");
      if (!prob.is_object() || detail::require_integer(prob.at("den"), "den") != static_cast<std::int64_t>(red.K)) {
        throw Error(ErrorCode::ParseError, "reduced probabilities must be {num, den = K}");
      }
      red.profits.push_back(detail::require_integer(item.at("profit"), "profit"));
      red.numerators.push_back(static_cast<std::uint64_t>(detail::require_integer(prob.at("num"), "num")));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (red.source_index.size() != red.profits.size()) {
    throw Error(ErrorCode::ParseError, "source_index and items differ in length");
  }
  return red;
}

}  // namespace aon
