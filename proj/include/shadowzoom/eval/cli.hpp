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

// Command-line driver: enlarge, pipeline, sweep, bench and diff verbs.
// Normal output goes to `out`; anything written to `err` implies a non-zero
// exit status and vice versa.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "shadowzoom/error.hpp"
#include "shadowzoom/eval/bench.hpp"
#include "shadowzoom/eval/report.hpp"
#include "shadowzoom/eval/sweep.hpp"
#include "shadowzoom/interp.hpp"
#include "shadowzoom/metrics.hpp"
#include "shadowzoom/pipeline.hpp"
#include "shadowzoom/pnm.hpp"

namespace shadowzoom::eval {

namespace detail {

inline const std::vector<std::string>& method_choices() {
  static const std::vector<std::string> names = {"nearest", "bilinear", "bicubic"};
  return names;
}

inline Method to_method(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
  return *m;
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorCode::Io, "write failed for " + path);
}

inline std::string format_metrics(const ImageMetrics& m) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "error_percent=%.6f\nmae=%.6f\nmse=%.6f\npsnr=%s\n", m.error_percent, m.mae,
                m.mse, std::isinf(m.psnr) ? "inf" : std::to_string(m.psnr).c_str());
  return buf;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"shadowzoom: grayscale enlargement with average + unsharp distortion removal", "shadowzoom"};
  app.require_subcommand(1);

  // enlarge
  std::string in_path, out_path;
  std::string method = "bilinear";
  double scale = 2.0;
  bool ascii = false;
  auto* enlarge_cmd = app.add_subcommand("enlarge", "interpolate only, no filtering");
  enlarge_cmd->add_option("input", in_path, "input PGM")->required();
  enlarge_cmd->add_option("output", out_path, "output PGM")->required();
  enlarge_cmd->add_option("--method", method, "nearest|bilinear|bicubic")->check(CLI::IsMember(detail::method_choices()));
  enlarge_cmd->add_option("--scale", scale, "scale factor")->check(CLI::PositiveNumber);
  enlarge_cmd->add_flag("--ascii", ascii, "write P2 instead of P5");

  // pipeline
  double alpha = 1.0;
  std::string average = "eight";
  auto* pipeline_cmd = app.add_subcommand("pipeline", "enlarge, average, unsharp");
  pipeline_cmd->add_option("input", in_path, "input PGM")->required();
  pipeline_cmd->add_option("output", out_path, "output PGM")->required();
  pipeline_cmd->add_option("--method", method, "nearest|bilinear|bicubic")->check(CLI::IsMember(detail::method_choices()));
  pipeline_cmd->add_option("--scale", scale, "scale factor")->check(CLI::PositiveNumber);
  pipeline_cmd->add_option("--alpha", alpha, "unsharp alpha in [0, 1]");
  pipeline_cmd->add_option("--average", average, "eight|nine")->check(CLI::IsMember({"eight", "nine"}));
  pipeline_cmd->add_flag("--ascii", ascii, "write P2 instead of P5");

  // sweep
  std::vector<std::string> methods = detail::method_choices();
  std::string alphas = "0:1:0.1";
  std::string reference_path;
  bool round_trip = false;
  std::string downscale_method = "bilinear";
  std::string format = "md";
  std::string output;
  auto* sweep_cmd = app.add_subcommand("sweep", "alpha sweep error tables");
  sweep_cmd->add_option("input", in_path, "input PGM")->required();
  sweep_cmd->add_option("--methods", methods, "comma-separated methods")
      ->delimiter(',')
      ->check(CLI::IsMember(detail::method_choices()));
  sweep_cmd->add_option("--alphas", alphas, "start:stop:step");
  sweep_cmd->add_option("--scale", scale, "scale factor")->check(CLI::PositiveNumber);
  auto* ref_opt = sweep_cmd->add_option("--reference", reference_path, "compare against this enlargement");
  auto* rt_opt = sweep_cmd->add_flag("--round-trip", round_trip, "downscale input, re-enlarge, compare (default)");
  ref_opt->excludes(rt_opt);
  sweep_cmd->add_option("--downscale-method", downscale_method, "round-trip downscale kernel")
      ->check(CLI::IsMember(detail::method_choices()));
  sweep_cmd->add_option("--average", average, "eight|nine")->check(CLI::IsMember({"eight", "nine"}));
  sweep_cmd->add_option("--format", format, "csv|md")->check(CLI::IsMember({"csv", "md"}));
  sweep_cmd->add_option("--output", output, "output file (default stdout)");

  // bench
  std::vector<std::size_t> sizes{256, 512};
  std::size_t repetitions = 5;
  auto* bench_cmd = app.add_subcommand("bench", "time enlarge-only per method and size");
  bench_cmd->add_option("--sizes", sizes, "square source sizes")->delimiter(',');
  bench_cmd->add_option("--methods", methods, "comma-separated methods")
      ->delimiter(',')
      ->check(CLI::IsMember(detail::method_choices()));
  bench_cmd->add_option("--repetitions", repetitions, "timed runs per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--scale", scale, "scale factor")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--output", output, "output file (default stdout)");

  // diff
  std::string other_path;
  auto* diff_cmd = app.add_subcommand("diff", "metrics between two same-sized PGMs");
  diff_cmd->add_option("a", in_path, "first PGM")->required();
  diff_cmd->add_option("b", other_path, "second PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const AverageVariant average_variant =
        average == "nine" ? AverageVariant::NineCell : AverageVariant::EightNeighbour;
    std::vector<Method> method_list;
    for (const auto& name : methods) method_list.push_back(detail::to_method(name));

    if (enlarge_cmd->parsed()) {
      const ImageU8 img = read_pgm_file(in_path);
      const ImageU8 result = to_u8(enlarge(to_float(img), InterpKernel{detail::to_method(method)}, scale));
      write_pgm_file(out_path, result, ascii ? PnmFormat::P2 : PnmFormat::P5);
    } else if (pipeline_cmd->parsed()) {
      const PipelineConfig cfg{detail::to_method(method), scale, alpha, average_variant};
      validate(cfg);
      const ImageU8 result = run_pipeline(read_pgm_file(in_path), cfg);
      write_pgm_file(out_path, result, ascii ? PnmFormat::P2 : PnmFormat::P5);
    } else if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.methods = method_list;
      spec.alphas = parse_alpha_range(alphas);
      spec.scale = scale;
      spec.average_variant = average_variant;
      if (!reference_path.empty()) {
        spec.reference = ProvidedImage{reference_path};
      } else {
        spec.reference = RoundTrip{detail::to_method(downscale_method)};
      }
      const auto reports = run_sweep(spec, read_pgm_file(in_path));
      detail::write_text(output, format == "csv" ? to_csv(reports) : to_markdown(reports), out);
    } else if (bench_cmd->parsed()) {
      const BenchReport report = run_bench(sizes, method_list, repetitions, scale);
      detail::write_text(output, format_bench(report), out);
    } else if (diff_cmd->parsed()) {
      out << detail::format_metrics(compare(read_pgm_file(in_path), read_pgm_file(other_path)));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace shadowzoom::eval
