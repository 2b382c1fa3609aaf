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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shadowzoom/error.hpp"
#include "shadowzoom/eval/report.hpp"
#include "shadowzoom/image.hpp"
#include "shadowzoom/interp.hpp"
#include "shadowzoom/metrics.hpp"
#include "shadowzoom/pipeline.hpp"
#include "shadowzoom/pnm.hpp"

namespace shadowzoom::eval {

/// Arithmetic alpha sequence start, start+step, ... up to stop inclusive.
struct AlphaRange {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.1;

  void validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorCode::InvalidArgument, "alpha step must be > 0");
    if (!(start <= stop)) throw Error(ErrorCode::InvalidArgument, "alpha start must not exceed stop");
    if (!(start >= 0.0 && stop <= 1.0)) {
      throw Error(ErrorCode::AlphaOutOfRange, "alpha range must lie within [0, 1]");
    }
  }

  /// Values are snapped to 12 decimals so 0:1:0.1 yields 0.3 rather than
  /// 0.30000000000000004.
  std::vector<double> values() const {
    validate();
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double v = start + static_cast<double>(i) * step;
      out.push_back(std::min(stop, std::round(v * 1e12) / 1e12));
    }
    return out;
  }
};

/// Parses "start:stop:step".
inline AlphaRange parse_alpha_range(std::string_view text) {
  const auto a = text.find(':');
  const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (b == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "alpha range must be start:stop:step, got '" + std::string(text) + "'");
  }
  AlphaRange r{detail::parse_double(text.substr(0, a)), detail::parse_double(text.substr(a + 1, b - a - 1)),
               detail::parse_double(text.substr(b + 1))};
  r.validate();
  return r;
}

/// Compare against an externally supplied enlargement.
struct ProvidedImage {
  std::filesystem::path path;
};

/// Downscale the input by 1/scale, re-enlarge it through the pipeline and
/// compare with the untouched input.
struct RoundTrip {
  Method downscale_method = Method::Bilinear;
};

struct SweepSpec {
  std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
  AlphaRange alphas{};
  double scale = 2.0;
  std::variant<RoundTrip, ProvidedImage> reference = RoundTrip{};
  AverageVariant average_variant = AverageVariant::EightNeighbour;
};

/// The low-resolution image fed to the pipeline and the image its output is
/// scored against.
struct SweepInputs {
  ImageU8 shadow;
  ImageU8 reference;
};

inline SweepInputs prepare_inputs(const SweepSpec& spec, const ImageU8& input) {
  if (!std::isfinite(spec.scale) || spec.scale <= 0.0) {
    throw Error(ErrorCode::DegenerateOutput, "scale must be a positive finite number");
  }
  if (const auto* rt = std::get_if<RoundTrip>(&spec.reference)) {
    const Extent small = scaled_extent(input.extent(), 1.0 / spec.scale);
    ImageU8 shadow = to_u8(resample_2d(to_float(input), InterpKernel{rt->downscale_method}, small.width, small.height));
    return {std::move(shadow), input};
  }
  const auto& provided = std::get<ProvidedImage>(spec.reference);
  return {input, read_pgm_file(provided.path)};
}

/// One report per method, one row per alpha. Under RoundTrip the pipeline
/// targets the reference extent exactly, so odd sizes still compare.
inline std::vector<ErrorReport> run_sweep(const SweepSpec& spec, const SweepInputs& inputs) {
  const std::vector<double> alphas = spec.alphas.values();
  const bool round_trip = std::holds_alternative<RoundTrip>(spec.reference);
  std::vector<ErrorReport> reports;
  for (Method method : spec.methods) {
    ErrorReport report{method, {}};
    for (double alpha : alphas) {
      const PipelineConfig cfg{method, spec.scale, alpha, spec.average_variant};
      const ImageU8 out = round_trip ? run_pipeline(inputs.shadow, cfg, inputs.reference.extent())
                                     : run_pipeline(inputs.shadow, cfg);
      const ImageMetrics m = compare(out, inputs.reference);
      report.rows.push_back({alpha, m.error_percent, m.mae, m.mse, m.psnr});
    }
    validate(report);
    reports.push_back(std::move(report));
  }
  return reports;
}

inline std::vector<ErrorReport> run_sweep(const SweepSpec& spec, const ImageU8& input) {
  return run_sweep(spec, prepare_inputs(spec, input));
}

struct BestCell {
  Method method = Method::Bilinear;
  double alpha = 0.0;
  double error_percent = 0.0;
};

/// Lowest error_percent across all cells; earlier cells win ties.
inline BestCell best_cell(std::span<const ErrorReport> reports) {
  BestCell best{};
  bool found = false;
  for (const auto& report : reports) {
    for (const auto& row : report.rows) {
      if (!found || row.error_percent < best.error_percent) {
        best = {report.method, row.alpha, row.error_percent};
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "no sweep cells");
  return best;
}

}  // namespace shadowzoom::eval
