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

// Regenerates the bundled corpus and the pipeline golden under the given
// directory. Only needed when the corpus itself changes.

#include <filesystem>
#include <iostream>

#include "shadowzoom/eval/corpus.hpp"
#include "shadowzoom/pipeline.hpp"
#include "shadowzoom/pnm.hpp"

int main(int argc, char** argv) {
  namespace sz = shadowzoom;
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);
  try {
    sz::write_pgm_file(dir / "xray_128.pgm", sz::eval::xray_phantom(128, 128));
    sz::write_pgm_file(dir / "card_128.pgm", sz::eval::test_card(128, 128));
    sz::write_pgm_file(dir / "texture_128.pgm", sz::eval::smooth_texture(128, 128));
    const sz::ImageU8 small = sz::eval::xray_phantom(32, 32, 3);
    sz::write_pgm_file(dir / "xray_32.pgm", small);
    const sz::PipelineConfig cfg{sz::Method::Bilinear, 2.0, 1.0};
    sz::write_pgm_file(dir / "golden_xray_32_bilinear_s2_a1.pgm", sz::run_pipeline(small, cfg));
  } catch (const sz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
