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

// Minimal library usage: enlarge a PGM 2x with the three-stage pipeline and
// report how far each interpolation method alone lands from the result.

#include <iostream>

#include "shadowzoom/shadowzoom.hpp"

int main(int argc, char** argv) {
  namespace sz = shadowzoom;
  if (argc != 3) {
    std::cerr << "usage: enlarge_demo in.pgm out.pgm\n";
    return 2;
  }
  try {
    const sz::ImageU8 input = sz::read_pgm_file(argv[1]);
    const sz::PipelineConfig cfg{sz::Method::Bilinear, 2.0, 1.0};
    const sz::ImageU8 result = sz::run_pipeline(input, cfg);
    sz::write_pgm_file(argv[2], result);

    for (sz::Method m : sz::kAllMethods) {
      const auto plain = sz::to_u8(sz::enlarge(sz::to_float(input), sz::InterpKernel{m}, 2.0));
      std::cout << sz::to_string(m) << ": " << sz::error_ratio(plain, result) << "% from pipeline output\n";
    }
  } catch (const sz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
