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

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "shadowzoom/error.hpp"

namespace shadowzoom {

/// Sample types an Image may hold: 8-bit storage or a real compute type.
template <typename T>
concept Sample = std::same_as<T, std::uint8_t> || std::floating_point<T>;

struct Extent {
  std::size_t width = 0;
  std::size_t height = 0;

  friend bool operator==(const Extent&, const Extent&) = default;
};

struct PixelCoord {
  std::size_t x = 0;
  std::size_t y = 0;
};

/// Owned row-major grayscale raster. Width and height are always >= 1 and the
/// sample buffer always holds exactly width*height values.
template <Sample T>
class Image {
 public:
  using value_type = T;

  Image(std::size_t width, std::size_t height, T fill = T{})
      : extent_{checked(width, height)}, samples_(width * height, fill) {}

  Image(std::size_t width, std::size_t height, std::vector<T> samples)
      : extent_{checked(width, height)}, samples_(std::move(samples)) {
    if (samples_.size() != width * height) {
      throw Error(ErrorCode::InvalidArgument,
                  "sample count " + std::to_string(samples_.size()) + " does not match " +
                      std::to_string(width) + "x" + std::to_string(height));
    }
  }

  std::size_t width() const noexcept { return extent_.width; }
  std::size_t height() const noexcept { return extent_.height; }
  Extent extent() const noexcept { return extent_; }
  std::size_t size() const noexcept { return samples_.size(); }

  T operator()(std::size_t x, std::size_t y) const noexcept { return samples_[y * extent_.width + x]; }
  T& operator()(std::size_t x, std::size_t y) noexcept { return samples_[y * extent_.width + x]; }
  T operator[](PixelCoord p) const noexcept { return (*this)(p.x, p.y); }

  std::span<const T> samples() const noexcept { return samples_; }
  std::span<T> samples() noexcept { return samples_; }

  std::span<const T> row(std::size_t y) const noexcept {
    return std::span<const T>(samples_).subspan(y * extent_.width, extent_.width);
  }
  std::span<T> row(std::size_t y) noexcept {
    return std::span<T>(samples_).subspan(y * extent_.width, extent_.width);
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  static Extent checked(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) {
      throw Error(ErrorCode::InvalidArgument, "image dimensions must be positive");
    }
    return {width, height};
  }

  Extent extent_;
  std::vector<T> samples_;
};

using ImageU8 = Image<std::uint8_t>;
using ImageF32 = Image<float>;

/// Exact widening of 8-bit samples to a real type.
template <std::floating_point F = float>
Image<F> to_float(const ImageU8& img) {
  Image<F> out(img.width(), img.height());
  std::ranges::transform(img.samples(), out.samples().begin(),
                         [](std::uint8_t v) { return static_cast<F>(v); });
  return out;
}

/// Clamp to [0, 255], then round half away from zero.
inline std::uint8_t quantize_u8(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteSample, "cannot quantize a non-finite sample");
  return static_cast<std::uint8_t>(std::round(std::clamp(v, 0.0, 255.0)));
}

template <std::floating_point F>
ImageU8 to_u8(const Image<F>& img) {
  ImageU8 out(img.width(), img.height());
  std::ranges::transform(img.samples(), out.samples().begin(),
                         [](F v) { return quantize_u8(static_cast<double>(v)); });
  return out;
}

template <std::floating_point F>
bool all_finite(const Image<F>& img) {
  return std::ranges::all_of(img.samples(), [](F v) { return std::isfinite(v); });
}

/// Horizontal mirror.
template <Sample T>
Image<T> mirror_x(const Image<T>& img) {
  Image<T> out(img.width(), img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    std::ranges::reverse_copy(img.row(y), out.row(y).begin());
  }
  return out;
}

}  // namespace shadowzoom
