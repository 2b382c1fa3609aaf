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

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "shadowzoom/error.hpp"
#include "shadowzoom/image.hpp"

namespace shadowzoom {

enum class MaskKind { Average, Unsharp };

/// Which pixels the averaging filter pools over.
enum class AverageVariant {
  EightNeighbour,  ///< the eight surrounding pixels, centre excluded
  NineCell,        ///< plain 3x3 box mean
};

enum class BorderPolicy { Replicate };

/// 3x3 correlation mask, coeffs[row][col] with the centre at [1][1].
struct FilterMask {
  std::array<std::array<double, 3>, 3> coeffs{};
  MaskKind kind = MaskKind::Average;
  double alpha = 0.0;  // meaningful for Unsharp only
  BorderPolicy border = BorderPolicy::Replicate;

  double sum() const noexcept {
    double s = 0.0;
    for (const auto& row : coeffs) {
      for (double c : row) s += c;
    }
    return s;
  }
};

inline FilterMask average_mask(AverageVariant variant = AverageVariant::EightNeighbour) {
  FilterMask m;
  m.kind = MaskKind::Average;
  const double w = variant == AverageVariant::EightNeighbour ? 1.0 / 8.0 : 1.0 / 9.0;
  for (auto& row : m.coeffs) row.fill(w);
  if (variant == AverageVariant::EightNeighbour) m.coeffs[1][1] = 0.0;
  return m;
}

/// Negative-Laplacian sharpening mask
///
///   1/(a+1) * | -a   a-1  -a  |
///             | a-1  a+5  a-1 |
///             | -a   a-1  -a  |
///
/// which has unit sum for every a in [0, 1]. a = 0 is the 4-neighbour
/// Laplacian form, a = 1 the diagonal-only form.
inline FilterMask unsharp_mask(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  const double corner = -alpha;
  const double edge = alpha - 1.0;
  const double centre = alpha + 5.0;
  const double norm = alpha + 1.0;
  FilterMask m;
  m.kind = MaskKind::Unsharp;
  m.alpha = alpha;
  m.coeffs = {{{corner / norm, edge / norm, corner / norm},
               {edge / norm, centre / norm, edge / norm},
               {corner / norm, edge / norm, corner / norm}}};
  return m;
}

/// out(x, y) = sum_ij coeffs[i][j] * in(clamp(x + j - 1), clamp(y + i - 1)).
/// No range clamping; sharpening masks produce values outside [0, 255].
template <std::floating_point F>
Image<F> convolve_3x3(const Image<F>& img, const FilterMask& mask) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  Image<F> out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    const std::array<std::size_t, 3> rows = {y == 0 ? 0 : y - 1, y, y + 1 < h ? y + 1 : h - 1};
    for (std::size_t x = 0; x < w; ++x) {
      const std::array<std::size_t, 3> cols = {x == 0 ? 0 : x - 1, x, x + 1 < w ? x + 1 : w - 1};
      // Outer columns are paired before the centre is added: with a
      // left-right symmetric mask this makes mirrored inputs bit-exact.
      double acc = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto row = img.row(rows[i]);
        const auto& k = mask.coeffs[i];
        acc += (k[0] * static_cast<double>(row[cols[0]]) + k[2] * static_cast<double>(row[cols[2]])) +
               k[1] * static_cast<double>(row[cols[1]]);
      }
      out(x, y) = static_cast<F>(acc);
    }
  }
  return out;
}

}  // namespace shadowzoom
