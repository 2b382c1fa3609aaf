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

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "shadowzoom/error.hpp"
#include "shadowzoom/image.hpp"

namespace shadowzoom {

namespace detail {

inline void require_same_extent(const ImageU8& a, const ImageU8& b) {
  if (a.extent() != b.extent()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                                                  " vs " + std::to_string(b.width()) + "x" +
                                                  std::to_string(b.height()));
  }
}

struct DiffSums {
  std::uint64_t abs = 0;
  std::uint64_t sq = 0;
};

// Integer sums keep every metric exact up to the final division.
inline DiffSums diff_sums(const ImageU8& a, const ImageU8& b) {
  require_same_extent(a, b);
  DiffSums s;
  const auto sa = a.samples();
  const auto sb = b.samples();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const int d = static_cast<int>(sa[i]) - static_cast<int>(sb[i]);
    s.abs += static_cast<std::uint64_t>(d < 0 ? -d : d);
    s.sq += static_cast<std::uint64_t>(d * d);
  }
  return s;
}

inline double psnr_from_mse(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace detail

/// Mean absolute difference normalized by the 8-bit range, in percent.
inline double error_ratio(const ImageU8& a, const ImageU8& b) {
  const auto s = detail::diff_sums(a, b);
  return 100.0 * static_cast<double>(s.abs) / (static_cast<double>(a.size()) * 255.0);
}

inline double mae(const ImageU8& a, const ImageU8& b) {
  return static_cast<double>(detail::diff_sums(a, b).abs) / static_cast<double>(a.size());
}

inline double mse(const ImageU8& a, const ImageU8& b) {
  return static_cast<double>(detail::diff_sums(a, b).sq) / static_cast<double>(a.size());
}

/// +inf for identical images.
inline double psnr(const ImageU8& a, const ImageU8& b) { return detail::psnr_from_mse(mse(a, b)); }

struct ImageMetrics {
  double error_percent = 0.0;
  double mae = 0.0;
  double mse = 0.0;
  double psnr = 0.0;
};

/// All four metrics from a single pass.
inline ImageMetrics compare(const ImageU8& a, const ImageU8& b) {
  const auto s = detail::diff_sums(a, b);
  const auto n = static_cast<double>(a.size());
  ImageMetrics m;
  m.error_percent = 100.0 * static_cast<double>(s.abs) / (n * 255.0);
  m.mae = static_cast<double>(s.abs) / n;
  m.mse = static_cast<double>(s.sq) / n;
  m.psnr = detail::psnr_from_mse(m.mse);
  return m;
}

}  // namespace shadowzoom
