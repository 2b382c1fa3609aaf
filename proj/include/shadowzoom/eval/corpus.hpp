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

// Synthetic grayscale test images. The bundled PGMs under data/ were produced
// once by these generators and checked in; tests read the files, not these
// functions, so libm differences cannot shift a golden.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "shadowzoom/image.hpp"

namespace shadowzoom::eval {

namespace detail {

// Uniform [0, 1) from raw engine bits; std distributions are not portable.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Approximately normal, unit variance (Irwin-Hall with 12 terms).
inline double gauss(std::mt19937_64& rng) {
  double s = 0.0;
  for (int i = 0; i < 12; ++i) s += unit(rng);
  return s - 6.0;
}

inline double smoothstep_edge(double d, double softness) { return 1.0 / (1.0 + std::exp(d / softness)); }

}  // namespace detail

/// Chest-radiograph-like shadow image: a soft-edged torso with darker lung
/// fields, a bright segmented spine, curved ribs and mild sensor noise.
inline ImageU8 xray_phantom(std::size_t width, std::size_t height, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  ImageU8 img(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double u = (static_cast<double>(x) + 0.5) / static_cast<double>(width) * 2.0 - 1.0;
      const double v = (static_cast<double>(y) + 0.5) / static_cast<double>(height) * 2.0 - 1.0;
      double value = 18.0;

      const double torso = std::hypot(u / 0.86, v / 0.95) - 1.0;
      value += 92.0 * detail::smoothstep_edge(torso, 0.035) * (1.0 - 0.15 * v);

      for (double side : {-1.0, 1.0}) {
        const double lung = std::hypot((u - side * 0.38) / 0.27, (v + 0.08) / 0.55) - 1.0;
        value -= 48.0 * detail::smoothstep_edge(lung, 0.06);
      }

      const double spine = std::abs(u) / 0.075 - 1.0;
      const double vertebra = 0.75 + 0.25 * std::cos(v * 11.0 * std::numbers::pi);
      value += 95.0 * detail::smoothstep_edge(spine, 0.04) * vertebra * detail::smoothstep_edge(std::abs(v) - 0.92, 0.03);

      for (int k = 0; k < 6; ++k) {
        const double centre = -0.62 + 0.22 * k;
        const double arc = v - (centre + 0.18 * u * u);
        const double along = detail::smoothstep_edge(std::abs(u) - 0.78, 0.04) *
                             (1.0 - detail::smoothstep_edge(std::abs(u) - 0.1, 0.03));
        value += 55.0 * std::exp(-(arc * arc) / (2.0 * 0.022 * 0.022)) * along;
      }

      value += 2.5 * detail::gauss(rng);
      img(x, y) = quantize_u8(value);
    }
  }
  return img;
}

/// Gradients, low-frequency rings and a few hard-edged blocks.
inline ImageU8 test_card(std::size_t width, std::size_t height) {
  ImageU8 img(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double u = (static_cast<double>(x) + 0.5) / static_cast<double>(width);
      const double v = (static_cast<double>(y) + 0.5) / static_cast<double>(height);
      double value = 40.0 + 150.0 * u;
      const double r = std::hypot(u - 0.5, v - 0.5);
      value += 45.0 * std::cos(2.0 * std::numbers::pi * 6.0 * r);
      if (u > 0.1 && u < 0.3 && v > 0.1 && v < 0.3) value = 230.0;
      if (u > 0.7 && u < 0.9 && v > 0.7 && v < 0.9) value = 15.0;
      img(x, y) = quantize_u8(value);
    }
  }
  return img;
}

/// Band-limited random texture: a sum of random low-frequency plane waves.
inline ImageU8 smooth_texture(std::size_t width, std::size_t height, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  struct Wave {
    double fx, fy, phase, amp;
  };
  std::vector<Wave> waves;
  for (int i = 0; i < 12; ++i) {
    waves.push_back({(detail::unit(rng) - 0.5) * 16.0, (detail::unit(rng) - 0.5) * 16.0,
                     detail::unit(rng) * 2.0 * std::numbers::pi, 8.0 + 10.0 * detail::unit(rng)});
  }
  ImageU8 img(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / static_cast<double>(width);
      const double v = static_cast<double>(y) / static_cast<double>(height);
      double value = 128.0;
      for (const auto& w : waves) value += w.amp * std::sin(2.0 * std::numbers::pi * (w.fx * u + w.fy * v) + w.phase);
      img(x, y) = quantize_u8(value);
    }
  }
  return img;
}

}  // namespace shadowzoom::eval
