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

// Enlarge-only timing harness. Timings are reported, never asserted against
// published ratios; constant factors depend on the machine.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shadowzoom/error.hpp"
#include "shadowzoom/eval/corpus.hpp"
#include "shadowzoom/image.hpp"
#include "shadowzoom/interp.hpp"

namespace shadowzoom::eval {

struct BenchRow {
  Method method = Method::Nearest;
  std::size_t size = 0;  // square source edge length
  double median_ms = 0.0;
  std::uint64_t checksum = 0;
};

struct BenchReport {
  double scale = 2.0;
  std::size_t repetitions = 0;
  std::vector<BenchRow> rows;

  std::optional<double> median_ms(Method method, std::size_t size) const {
    for (const auto& r : rows) {
      if (r.method == method && r.size == size) return r.median_ms;
    }
    return std::nullopt;
  }
};

/// FNV-1a over the IEEE bit patterns of every sample.
template <std::floating_point F>
std::uint64_t checksum(const Image<F>& img) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (F v : img.samples()) {
    auto bits = std::bit_cast<std::conditional_t<sizeof(F) == 4, std::uint32_t, std::uint64_t>>(v);
    for (std::size_t i = 0; i < sizeof(F); ++i) {
      h ^= static_cast<std::uint8_t>(bits >> (8 * i));
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

inline double median(std::vector<double> v) {
  std::ranges::sort(v);
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline BenchReport run_bench(std::span<const std::size_t> sizes, std::span<const Method> methods,
                             std::size_t repetitions, double scale = 2.0) {
  if (repetitions == 0) throw Error(ErrorCode::InvalidArgument, "repetitions must be positive");
  BenchReport report{scale, repetitions, {}};
  for (std::size_t size : sizes) {
    const ImageF32 input = to_float(xray_phantom(size, size));
    for (Method method : methods) {
      std::vector<double> times;
      std::uint64_t sum = 0;
      (void)enlarge(input, InterpKernel{method}, scale);  // warm-up
      for (std::size_t r = 0; r < repetitions; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const ImageF32 out = enlarge(input, InterpKernel{method}, scale);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        const std::uint64_t c = checksum(out);
        if (r > 0 && c != sum) throw Error(ErrorCode::InvalidArgument, "non-deterministic enlarge output");
        sum = c;
      }
      report.rows.push_back({method, size, median(std::move(times)), sum});
    }
  }
  return report;
}

inline std::string format_bench(const BenchReport& report) {
  std::string out = "method,size,median_ms,ratio_vs_nearest,checksum\n";
  char buf[160];
  for (const auto& row : report.rows) {
    const auto base = report.median_ms(Method::Nearest, row.size);
    std::string ratio = base && *base > 0.0 ? std::to_string(row.median_ms / *base) : std::string("n/a");
    std::snprintf(buf, sizeof buf, "%s,%zu,%.4f,%s,%016llx\n", std::string(to_string(row.method)).c_str(), row.size,
                  row.median_ms, ratio.c_str(), static_cast<unsigned long long>(row.checksum));
    out += buf;
  }
  out += "# published cost relative to nearest: bilinear 2 to 4 times, bicubic about 10 times\n";
  return out;
}

}  // namespace shadowzoom::eval
