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

// Convolution-based interpolation: g(x) = sum_k f(x_k) u(x - x_k) with the
// nearest, linear and cubic (Keys, a = -1/2) kernels, applied separably in 2D.
//
// Destination sample d maps to source coordinate (d + 0.5) * src/dst - 0.5,
// i.e. pixel centres are aligned and the image centroid stays fixed. Taps
// falling outside the source are clamped to the nearest edge sample.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "shadowzoom/error.hpp"
#include "shadowzoom/image.hpp"

namespace shadowzoom {

enum class Method { Nearest, Bilinear, Bicubic };

inline constexpr std::array<Method, 3> kAllMethods = {Method::Nearest, Method::Bilinear, Method::Bicubic};

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Nearest: return "nearest";
    case Method::Bilinear: return "bilinear";
    case Method::Bicubic: return "bicubic";
  }
  return "unknown";
}

constexpr std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

/// Keys cubic convolution kernel with free parameter a. Interpolating
/// (u(0) = 1, u(n) = 0) and C1-continuous for every a.
constexpr double cubic_convolution(double s, double a) noexcept {
  const double t = s < 0 ? -s : s;
  if (t < 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
  if (t < 2.0) return ((a * t - 5.0 * a) * t + 8.0 * a) * t - 4.0 * a;
  return 0.0;
}

struct InterpKernel {
  Method method = Method::Bilinear;

  /// Half-width of the non-zero region.
  constexpr double support() const noexcept {
    switch (method) {
      case Method::Nearest: return 0.5;
      case Method::Bilinear: return 1.0;
      case Method::Bicubic: return 2.0;
    }
    return 0.0;
  }

  /// Grid points contributing to one output sample along one axis.
  constexpr std::size_t taps() const noexcept {
    switch (method) {
      case Method::Nearest: return 1;
      case Method::Bilinear: return 2;
      case Method::Bicubic: return 4;
    }
    return 0;
  }

  /// u(s). The nearest kernel includes |s| == 0.5 in its unit branch.
  constexpr double operator()(double s) const noexcept {
    const double t = s < 0 ? -s : s;
    switch (method) {
      case Method::Nearest: return t <= 0.5 ? 1.0 : 0.0;
      case Method::Bilinear: return t <= 1.0 ? 1.0 - t : 0.0;
      case Method::Bicubic: return cubic_convolution(t, -0.5);
    }
    return 0.0;
  }
};

constexpr double kernel_eval(InterpKernel k, double s) noexcept { return k(s); }

struct Tap {
  std::size_t index = 0;
  double weight = 0.0;
};

/// Precomputed taps for resampling one axis from src_len to dst_len samples.
/// Every destination index owns exactly kernel.taps() entries, stored flat.
class ResamplePlan {
 public:
  ResamplePlan(InterpKernel kernel, std::size_t src_len, std::size_t dst_len)
      : kernel_(kernel), src_len_(src_len), dst_len_(dst_len) {
    if (src_len == 0 || dst_len == 0) throw Error(ErrorCode::InvalidArgument, "plan lengths must be positive");
    const std::size_t n = kernel.taps();
    taps_.reserve(dst_len * n);
    const auto last = static_cast<long long>(src_len) - 1;
    auto clamp_index = [last](long long i) {
      return static_cast<std::size_t>(i < 0 ? 0 : (i > last ? last : i));
    };
    for (std::size_t d = 0; d < dst_len; ++d) {
      const double x = source_coordinate(d);
      if (kernel.method == Method::Nearest) {
        // ceil(x - 0.5) is the closest grid point, ties going to the lower
        // index; its distance is within the unit branch by construction.
        taps_.push_back({clamp_index(static_cast<long long>(std::ceil(x - 0.5))), 1.0});
        continue;
      }
      const auto first = static_cast<long long>(std::floor(x)) - static_cast<long long>(n / 2 - 1);
      for (std::size_t j = 0; j < n; ++j) {
        const long long k = first + static_cast<long long>(j);
        taps_.push_back({clamp_index(k), kernel(x - static_cast<double>(k))});
      }
    }
  }

  InterpKernel kernel() const noexcept { return kernel_; }
  std::size_t src_len() const noexcept { return src_len_; }
  std::size_t dst_len() const noexcept { return dst_len_; }
  std::size_t taps_per_index() const noexcept { return kernel_.taps(); }

  std::span<const Tap> taps(std::size_t d) const noexcept {
    const std::size_t n = kernel_.taps();
    return std::span<const Tap>(taps_).subspan(d * n, n);
  }
  std::span<const Tap> all_taps() const noexcept { return taps_; }

  double source_coordinate(std::size_t d) const noexcept {
    const double ratio = static_cast<double>(src_len_) / static_cast<double>(dst_len_);
    return (static_cast<double>(d) + 0.5) * ratio - 0.5;
  }

 private:
  InterpKernel kernel_;
  std::size_t src_len_;
  std::size_t dst_len_;
  std::vector<Tap> taps_;
};

inline ResamplePlan build_plan(InterpKernel kernel, std::size_t src_len, std::size_t dst_len) {
  return ResamplePlan(kernel, src_len, dst_len);
}

namespace detail {

// Fixed tap count lets the compiler unroll; the summation order is always
// tap 0..N-1, which keeps results independent of how rows are scheduled.
template <std::size_t N, typename Src>
void horizontal_pass(const Src* src, std::size_t src_w, std::size_t rows, const ResamplePlan& plan,
                     double* dst) {
  const std::size_t dst_w = plan.dst_len();
  const Tap* taps = plan.all_taps().data();
  for (std::size_t y = 0; y < rows; ++y) {
    const Src* in = src + y * src_w;
    double* out = dst + y * dst_w;
    for (std::size_t d = 0; d < dst_w; ++d) {
      const Tap* t = taps + d * N;
      double acc = 0.0;
      for (std::size_t j = 0; j < N; ++j) acc += t[j].weight * static_cast<double>(in[t[j].index]);
      out[d] = acc;
    }
  }
}

template <std::size_t N, typename Dst>
void vertical_pass(const double* src, std::size_t width, const ResamplePlan& plan, Dst* dst) {
  std::vector<double> acc(width);
  for (std::size_t d = 0; d < plan.dst_len(); ++d) {
    const auto taps = plan.taps(d);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t j = 0; j < N; ++j) {
      const double w = taps[j].weight;
      const double* in = src + taps[j].index * width;
      for (std::size_t x = 0; x < width; ++x) acc[x] += w * in[x];
    }
    Dst* out = dst + d * width;
    for (std::size_t x = 0; x < width; ++x) out[x] = static_cast<Dst>(acc[x]);
  }
}

template <typename Fn>
void dispatch_taps(std::size_t taps, Fn&& fn) {
  switch (taps) {
    case 1: fn(std::integral_constant<std::size_t, 1>{}); break;
    case 2: fn(std::integral_constant<std::size_t, 2>{}); break;
    case 4: fn(std::integral_constant<std::size_t, 4>{}); break;
    default: throw Error(ErrorCode::InvalidArgument, "unsupported tap count");
  }
}

}  // namespace detail

/// Separable 2D resampling: a horizontal pass into a double buffer, then a
/// vertical pass. Accumulation is in double regardless of F.
template <std::floating_point F>
Image<F> resample_2d(const Image<F>& img, InterpKernel kernel, std::size_t out_w, std::size_t out_h) {
  if (out_w == 0 || out_h == 0) throw Error(ErrorCode::DegenerateOutput, "output dimensions must be positive");
  const ResamplePlan hplan(kernel, img.width(), out_w);
  const ResamplePlan vplan(kernel, img.height(), out_h);
  std::vector<double> tmp(out_w * img.height());
  Image<F> out(out_w, out_h);
  detail::dispatch_taps(kernel.taps(), [&](auto n) {
    detail::horizontal_pass<decltype(n)::value>(img.samples().data(), img.width(), img.height(), hplan,
                                                tmp.data());
    detail::vertical_pass<decltype(n)::value>(tmp.data(), out_w, vplan, out.samples().data());
  });
  return out;
}

/// Output extent for a scale factor; each dimension rounds half away from zero.
inline Extent scaled_extent(Extent in, double scale) {
  if (!std::isfinite(scale) || scale <= 0.0) {
    throw Error(ErrorCode::DegenerateOutput, "scale must be a positive finite number");
  }
  const double w = std::round(static_cast<double>(in.width) * scale);
  const double h = std::round(static_cast<double>(in.height) * scale);
  if (w < 1.0 || h < 1.0) {
    throw Error(ErrorCode::DegenerateOutput, "scale " + std::to_string(scale) + " rounds an output dimension to 0");
  }
  return {static_cast<std::size_t>(w), static_cast<std::size_t>(h)};
}

template <std::floating_point F>
Image<F> enlarge(const Image<F>& img, InterpKernel kernel, double scale) {
  const Extent out = scaled_extent(img.extent(), scale);
  return resample_2d(img, kernel, out.width, out.height);
}

}  // namespace shadowzoom
