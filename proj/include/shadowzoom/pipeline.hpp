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

// Enlargement with distortion removal: interpolate up, smooth with the
// neighbour-average mask, sharpen with the alpha unsharp mask, quantize once.

#include "shadowzoom/error.hpp"
#include "shadowzoom/filters.hpp"
#include "shadowzoom/image.hpp"
#include "shadowzoom/interp.hpp"

namespace shadowzoom {

struct PipelineConfig {
  Method method = Method::Bilinear;
  double scale = 2.0;
  double alpha = 1.0;
  AverageVariant average_variant = AverageVariant::EightNeighbour;
};

inline void validate(const PipelineConfig& cfg) {
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
    throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 1], got " + std::to_string(cfg.alpha));
  }
  if (!std::isfinite(cfg.scale) || cfg.scale <= 0.0) {
    throw Error(ErrorCode::DegenerateOutput, "scale must be a positive finite number");
  }
}

/// The three filtering stages on a real-valued image, without quantization.
/// `out` overrides the scale-derived output extent.
inline ImageF32 run_pipeline_f32(const ImageF32& img, const PipelineConfig& cfg, Extent out) {
  validate(cfg);
  const FilterMask sharpen = unsharp_mask(cfg.alpha);
  const ImageF32 enlarged = resample_2d(img, InterpKernel{cfg.method}, out.width, out.height);
  const ImageF32 averaged = convolve_3x3(enlarged, average_mask(cfg.average_variant));
  return convolve_3x3(averaged, sharpen);
}

inline ImageU8 run_pipeline(const ImageU8& img, const PipelineConfig& cfg, Extent out) {
  return to_u8(run_pipeline_f32(to_float(img), cfg, out));
}

inline ImageU8 run_pipeline(const ImageU8& img, const PipelineConfig& cfg) {
  validate(cfg);
  return run_pipeline(img, cfg, scaled_extent(img.extent(), cfg.scale));
}

}  // namespace shadowzoom
