#pragma once

// Record emission for identity reports: JSON lines, CSV and a plain table.
//
// Numbers are printed as the shortest decimal that round-trips (std::to_chars);
// non-finite values become null in JSON and empty cells in CSV. Field order is
// fixed, so identical inputs give byte-identical output.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "identity_report.hpp"

namespace kstruve {

enum class OutputFormat { json, csv, table };

[[nodiscard]] inline OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

/// Shortest round-trip decimal.
[[nodiscard]] inline std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return {buf.data(), end};
}

namespace detail {

inline std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

inline std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

inline std::string csv_number(double v) { return std::isfinite(v) ? format_number(v) : ""; }

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

/// (name, value) pairs of the report's input parameters in schema order.
inline std::vector<std::pair<std::string_view, double>> param_fields(const IdentityReport& r) {
  if (const auto* t = std::get_if<TheoremParams>(&r.params))
    return {{"alpha", t->alpha}, {"mu", t->mu}, {"nu", t->nu}, {"c", t->c}, {"k", t->k}, {"y", t->y}};
  const auto& l = std::get<LavoieParams>(r.params);
  return {{"alpha", l.alpha}, {"beta", l.beta}};
}

struct NumericField {
  std::string_view name;
  double IdentityReport::*member;
};

inline constexpr std::array<NumericField, 6> kNumericFields = {{
    {"lhs", &IdentityReport::lhs_value},
    {"lhs_err", &IdentityReport::lhs_error_estimate},
    {"rhs_paper", &IdentityReport::rhs_paper},
    {"rhs_corrected", &IdentityReport::rhs_corrected},
    {"rel_dev_paper", &IdentityReport::rel_dev_paper},
    {"rel_dev_corrected", &IdentityReport::rel_dev_corrected},
}};

}  // namespace detail

/// One JSON object on a single line, keys in schema order.
[[nodiscard]] inline std::string to_json_line(const IdentityReport& r) {
  std::string out = "{\"identity\":" + detail::json_string(r.identity) + ",\"params\":{";
  bool first = true;
  for (const auto& [name, value] : detail::param_fields(r)) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += name;
    out += "\":" + detail::json_number(value);
  }
  out += '}';
  for (const auto& f : detail::kNumericFields) {
    out += ",\"";
    out += f.name;
    out += "\":" + detail::json_number(r.*f.member);
  }
  out += ",\"verdict\":" + detail::json_string(to_string(r.verdict));
  out += std::string(",\"strict\":") + (r.strict_hypotheses ? "true" : "false");
  if (!r.error.empty()) out += ",\"error\":" + detail::json_string(r.error);
  out += '}';
  return out;
}

/// Inverse of to_json_line.
[[nodiscard]] inline IdentityReport parse_json_record(std::string_view line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  const auto number = [](const nlohmann::json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
  };
  IdentityReport r;
  r.identity = j.at("identity").get<std::string>();
  const auto& p = j.at("params");
  if (p.contains("beta"))
    r.params = LavoieParams{number(p.at("alpha")), number(p.at("beta"))};
  else
    r.params = TheoremParams{number(p.at("alpha")), number(p.at("mu")), number(p.at("nu")),
                             number(p.at("c")),     number(p.at("k")),  number(p.at("y"))};
  for (const auto& f : detail::kNumericFields) r.*f.member = number(j.at(std::string(f.name)));
  const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!verdict) throw std::invalid_argument("unknown verdict in record");
  r.verdict = *verdict;
  r.strict_hypotheses = j.at("strict").get<bool>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

inline constexpr std::string_view kCsvHeader =
    "identity,alpha,mu,nu,c,k,y,beta,lhs,lhs_err,rhs_paper,rhs_corrected,rel_dev_paper,"
    "rel_dev_corrected,verdict,strict,error";

/// Flattened record; theorem rows leave beta empty, Lavoie rows leave mu..y empty.
[[nodiscard]] inline std::string to_csv_row(const IdentityReport& r) {
  std::string out = detail::csv_field(r.identity);
  if (const auto* t = std::get_if<TheoremParams>(&r.params)) {
    for (double v : {t->alpha, t->mu, t->nu, t->c, t->k, t->y}) out += ',' + detail::csv_number(v);
    out += ',';
  } else {
    const auto& l = std::get<LavoieParams>(r.params);
    out += ',' + detail::csv_number(l.alpha) + ",,,,,," + detail::csv_number(l.beta);
  }
  for (const auto& f : detail::kNumericFields) out += ',' + detail::csv_number(r.*f.member);
  out += ',';
  out += to_string(r.verdict);
  out += r.strict_hypotheses ? ",true," : ",false,";
  out += detail::csv_field(r.error);
  return out;
}

inline void write_table(std::ostream& os, std::span<const IdentityReport> reports) {
  for (const auto& r : reports) {
    os << r.identity << " (";
    bool first = true;
    for (const auto& [name, value] : detail::param_fields(r)) {
      os << (first ? "" : ", ") << name << '=' << format_number(value);
      first = false;
    }
    os << ")\n";
    os << "  lhs               " << format_number(r.lhs_value) << "  (+/- "
       << format_number(r.lhs_error_estimate) << ")\n";
    os << "  rhs_paper         " << format_number(r.rhs_paper) << "\n";
    os << "  rhs_corrected     " << format_number(r.rhs_corrected) << "\n";
    os << "  rel_dev_paper     " << format_number(r.rel_dev_paper) << "\n";
    os << "  rel_dev_corrected " << format_number(r.rel_dev_corrected) << "\n";
    os << "  verdict           " << to_string(r.verdict) << (r.strict_hypotheses ? "" : " (relaxed)")
       << "\n";
    if (!r.error.empty()) os << "  error             " << r.error << "\n";
  }
}

inline void write_records(std::ostream& os, std::span<const IdentityReport> reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      for (const auto& r : reports) os << to_json_line(r) << '\n';
      break;
    case OutputFormat::csv:
      os << kCsvHeader << '\n';
      for (const auto& r : reports) os << to_csv_row(r) << '\n';
      break;
    case OutputFormat::table:
      write_table(os, reports);
      break;
  }
}

/// "N records: CONFIRMED_CORRECTED=a BOTH_AGREE=b ..." with verdicts in enum order.
[[nodiscard]] inline std::string summary_line(std::span<const IdentityReport> reports) {
  std::map<int, std::size_t> counts;
  for (const auto& r : reports) ++counts[static_cast<int>(r.verdict)];
  std::string out = std::to_string(reports.size()) + " records:";
  for (const auto& [v, n] : counts)
    out += ' ' + std::string(to_string(static_cast<Verdict>(v))) + '=' + std::to_string(n);
  return out;
}

}  // namespace kstruve
