//  Copyright 2026 The shadowzoom Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

// Alpha-sweep error tables and their CSV / Markdown renderings.
//
// CSV numbers are written in shortest round-trip form so parse_csv recovers
// every double bit-exactly; PSNR of identical images is written as "inf".

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "shadowzoom/error.hpp"
#include "shadowzoom/interp.hpp"

namespace shadowzoom::eval {

struct ErrorRow {
  double alpha = 0.0;
  double error_percent = 0.0;
  double mae = 0.0;
  double mse = 0.0;
  double psnr = 0.0;

  friend bool operator==(const ErrorRow&, const ErrorRow&) = default;
};

struct ErrorReport {
  Method method = Method::Bilinear;
  std::vector<ErrorRow> rows;

  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

/// Throws InvalidArgument unless rows are non-empty, alphas strictly
/// increase and error_percent is non-negative.
inline void validate(const ErrorReport& report) {
  if (report.rows.empty()) throw Error(ErrorCode::InvalidArgument, "error report has no rows");
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (!(report.rows[i].error_percent >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "negative error_percent in report");
    }
    if (i > 0 && !(report.rows[i].alpha > report.rows[i - 1].alpha)) {
      throw Error(ErrorCode::InvalidArgument, "report alphas must be strictly increasing");
    }
  }
}

inline constexpr std::string_view kCsvHeader = "method,alfa,error_percent,mae,mse,psnr";

namespace detail {

inline std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Splits one CSV record; handles quoted fields with doubled quotes.
inline std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  return fields;
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidArgument, "bad number in CSV: '" + std::string(s) + "'");
  }
  return v;
}

// Shortest form, but always with a decimal point ("0.0", "0.3", "1.0").
inline std::string alpha_label(double v) {
  std::string s = shortest(v);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace detail

/// RFC 4180 CSV (CRLF record terminators), one row per (method, alfa).
inline std::string to_csv(std::span<const ErrorReport> reports) {
  std::string out(kCsvHeader);
  out += "\r\n";
  for (const auto& report : reports) {
    for (const auto& row : report.rows) {
      out += detail::csv_field(to_string(report.method));
      for (double v : {row.alpha, row.error_percent, row.mae, row.mse, row.psnr}) {
        out.push_back(',');
        out += detail::shortest(v);
      }
      out += "\r\n";
    }
  }
  return out;
}

/// Inverse of to_csv. Consecutive rows with the same method form one report.
inline std::vector<ErrorReport> parse_csv(std::string_view text) {
  std::vector<ErrorReport> reports;
  bool header = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw Error(ErrorCode::InvalidArgument, "unexpected CSV header");
      header = false;
      continue;
    }
    const auto fields = detail::split_record(line);
    if (fields.size() != 6) throw Error(ErrorCode::InvalidArgument, "CSV record must have 6 fields");
    const auto method = parse_method(fields[0]);
    if (!method) throw Error(ErrorCode::InvalidArgument, "unknown method '" + fields[0] + "'");
    if (reports.empty() || reports.back().method != *method) reports.push_back({*method, {}});
    reports.back().rows.push_back({detail::parse_double(fields[1]), detail::parse_double(fields[2]),
                                   detail::parse_double(fields[3]), detail::parse_double(fields[4]),
                                   detail::parse_double(fields[5])});
  }
  if (header) throw Error(ErrorCode::InvalidArgument, "empty CSV");
  return reports;
}

/// One "Alfa | Error" table per method, with the auxiliary metrics appended.
inline std::string to_markdown(std::span<const ErrorReport> reports) {
  std::string out;
  for (const auto& report : reports) {
    if (!out.empty()) out += "\n";
    out += "### ";
    out += to_string(report.method);
    out += "\n\n| Alfa | Error | MAE | MSE | PSNR (dB) |\n|---:|---:|---:|---:|---:|\n";
    for (const auto& row : report.rows) {
      out += "| " + detail::alpha_label(row.alpha) + " | " + detail::fixed(row.error_percent, 6) + "% | " +
             detail::fixed(row.mae, 6) + " | " + detail::fixed(row.mse, 6) + " | " +
             (std::isinf(row.psnr) ? std::string("inf") : detail::fixed(row.psnr, 4)) + " |\n";
    }
  }
  return out;
}

}  // namespace shadowzoom::eval
