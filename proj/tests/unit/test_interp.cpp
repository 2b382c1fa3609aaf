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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "shadowzoom/interp.hpp"
#include "support/oracles.hpp"

namespace sz = shadowzoom;
using sz::InterpKernel;
using sz::Method;

namespace {

constexpr InterpKernel kNearest{Method::Nearest};
constexpr InterpKernel kBilinear{Method::Bilinear};
constexpr InterpKernel kBicubic{Method::Bicubic};

}  // namespace

TEST(KernelEval, HandDerivedValues) {
  EXPECT_DOUBLE_EQ(sz::kernel_eval(kBilinear, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(sz::kernel_eval(kBicubic, 0.0), 1.0);
  // 3/2 * 0.125 - 5/2 * 0.25 + 1
  EXPECT_NEAR(sz::kernel_eval(kBicubic, 0.5), 0.1875 - 0.625 + 1.0, 1e-15);
  EXPECT_NEAR(sz::kernel_eval(kBicubic, 0.5), 0.5625, 1e-15);
  // -1/2 * 3.375 + 5/2 * 2.25 - 4 * 1.5 + 2
  EXPECT_NEAR(sz::kernel_eval(kBicubic, 1.5), -1.6875 + 5.625 - 6.0 + 2.0, 1e-15);
  EXPECT_NEAR(sz::kernel_eval(kBicubic, 1.5), -0.0625, 1e-15);
  EXPECT_EQ(sz::kernel_eval(kBicubic, 1.0), 0.0);
  EXPECT_EQ(sz::kernel_eval(kBicubic, 2.0), 0.0);
  EXPECT_EQ(sz::kernel_eval(kNearest, 0.7), 0.0);
  EXPECT_EQ(sz::kernel_eval(kNearest, 0.5), 1.0);
  EXPECT_EQ(sz::kernel_eval(kNearest, -0.5), 1.0);
}

TEST(KernelEval, CubicIsContinuousAtKnots) {
  for (double knot : {1.0, 2.0}) {
    const double left = sz::kernel_eval(kBicubic, std::nextafter(knot, 0.0));
    EXPECT_NEAR(left, 0.0, 1e-12) << knot;
  }
}

TEST(KernelEval, EvenAndCompactlySupported) {
  std::mt19937_64 rng(1);
  for (InterpKernel k : {kNearest, kBilinear, kBicubic}) {
    for (int i = 0; i < 1000; ++i) {
      const double s = sz::testing::uniform(rng, -3.0, 3.0);
      EXPECT_EQ(k(s), k(-s));
      if (std::abs(s) > k.support()) {
        EXPECT_EQ(k(s), 0.0);
      }
    }
  }
}

TEST(KernelEval, InterpolatesAtNodes) {
  for (InterpKernel k : {kBilinear, kBicubic}) {
    EXPECT_EQ(k(0.0), 1.0);
    for (int n = 1; n <= 4; ++n) {
      EXPECT_EQ(k(n), 0.0);
      EXPECT_EQ(k(-n), 0.0);
    }
  }
}

TEST(KernelEval, PartitionOfUnity) {
  std::mt19937_64 rng(2);
  for (InterpKernel k : {kBilinear, kBicubic}) {
    for (int i = 0; i < 1000; ++i) {
      const double s = sz::testing::uniform(rng, 0.0, 1.0);
      double sum = 0.0;
      for (int n = -4; n <= 4; ++n) sum += k(s + n);
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(BuildPlan, IdentityScaleHasUnitTap) {
  const auto plan = sz::build_plan(kBilinear, 4, 4);
  for (std::size_t d = 0; d < 4; ++d) {
    const auto taps = plan.taps(d);
    ASSERT_EQ(taps.size(), 2u);
    EXPECT_EQ(taps[0].index, d);
    EXPECT_EQ(taps[0].weight, 1.0);
    EXPECT_EQ(taps[1].weight, 0.0);
  }
}

TEST(BuildPlan, NearestTwoToFour) {
  // x = (d + 0.5) / 2 - 0.5 -> -0.25, 0.25, 0.75, 1.25
  const auto plan = sz::build_plan(kNearest, 2, 4);
  const std::size_t expected[] = {0, 0, 1, 1};
  for (std::size_t d = 0; d < 4; ++d) {
    ASSERT_EQ(plan.taps(d).size(), 1u);
    EXPECT_EQ(plan.taps(d)[0].index, expected[d]);
    EXPECT_EQ(plan.taps(d)[0].weight, 1.0);
  }
}

TEST(BuildPlan, NearestTieGoesToLowerIndex) {
  // Halving maps every destination exactly between two sources.
  const auto plan = sz::build_plan(kNearest, 8, 4);
  for (std::size_t d = 0; d < 4; ++d) {
    EXPECT_DOUBLE_EQ(plan.source_coordinate(d), 2.0 * d + 0.5);
    EXPECT_EQ(plan.taps(d)[0].index, 2 * d);
  }
}

TEST(BuildPlan, TapCountsIndicesAndPartition) {
  std::mt19937_64 rng(3);
  for (InterpKernel k : {kNearest, kBilinear, kBicubic}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t src = sz::testing::uniform_size(rng, 1, 40);
      const std::size_t dst = sz::testing::uniform_size(rng, 1, 80);
      const auto plan = sz::build_plan(k, src, dst);
      for (std::size_t d = 0; d < dst; ++d) {
        const auto taps = plan.taps(d);
        ASSERT_EQ(taps.size(), k.taps());
        double sum = 0.0;
        for (const auto& t : taps) {
          EXPECT_LT(t.index, src);
          sum += t.weight;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
      }
    }
  }
}

TEST(BuildPlan, BicubicEightToSixteen) {
  const auto plan = sz::build_plan(kBicubic, 8, 16);
  for (std::size_t d = 0; d < 16; ++d) {
    const auto taps = plan.taps(d);
    ASSERT_EQ(taps.size(), 4u);
    double sum = 0.0;
    for (const auto& t : taps) sum += t.weight;
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(Resample2d, IdentityIsExact) {
  std::mt19937_64 rng(4);
  for (InterpKernel k : {kNearest, kBilinear, kBicubic}) {
    const auto img = sz::testing::random_real(rng, 7, 5, -1000.0, 1000.0);
    EXPECT_EQ(sz::resample_2d(img, k, 7, 5), img);
    EXPECT_EQ(sz::enlarge(img, k, 1.0), img);
  }
}

TEST(Resample2d, ConstantStaysConstant) {
  const sz::ImageF32 img(6, 4, 100.0f);
  for (InterpKernel k : {kNearest, kBilinear, kBicubic}) {
    const auto out = sz::enlarge(img, k, 2.0);
    for (float v : out.samples()) EXPECT_NEAR(v, 100.0f, 1e-4);
  }
  const auto lin = sz::enlarge(img, kBilinear, 2.0);
  for (float v : lin.samples()) EXPECT_EQ(v, 100.0f);
}

TEST(Resample2d, BicubicMatchesDirectSum6x6) {
  std::mt19937_64 rng(6);
  const auto img = sz::testing::random_real<double>(rng, 6, 6);
  const auto out = sz::resample_2d(img, kBicubic, 12, 12);
  const auto ref = sz::testing::direct_resample(img, Method::Bicubic, 12, 12);
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(out.samples()[i], ref[i], 1e-6);
}

TEST(Resample2d, MatchesDirectSumAcrossScales) {
  std::mt19937_64 rng(7);
  for (Method m : sz::kAllMethods) {
    for (double scale : {0.5, 1.5, 2.0, 3.0}) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto img = sz::testing::random_real<double>(rng, sz::testing::uniform_size(rng, 1, 16),
                                                          sz::testing::uniform_size(rng, 1, 16));
        const auto ext = sz::scaled_extent(img.extent(), scale);
        const auto out = sz::resample_2d(img, InterpKernel{m}, ext.width, ext.height);
        const auto ref = sz::testing::direct_resample(img, m, ext.width, ext.height);
        for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_NEAR(out.samples()[i], ref[i], 1e-6);
      }
    }
  }
}

TEST(Resample2d, ConvexKernelsStayInRange) {
  std::mt19937_64 rng(8);
  for (InterpKernel k : {kNearest, kBilinear}) {
    for (double scale : {0.5, 1.5, 2.0, 3.0}) {
      const auto img = sz::testing::random_real(rng, 9, 11);
      const auto [lo, hi] = std::ranges::minmax(img.samples());
      const auto out = sz::enlarge(img, k, scale);
      for (float v : out.samples()) {
        EXPECT_GE(v, lo);
        EXPECT_LE(v, hi);
      }
    }
  }
}

TEST(Enlarge, OutputDimensions) {
  const sz::ImageF32 a(4, 4);
  EXPECT_EQ(sz::enlarge(a, kBilinear, 2.0).extent(), (sz::Extent{8, 8}));
  const sz::ImageF32 b(5, 3);
  EXPECT_EQ(sz::enlarge(b, kBilinear, 1.5).extent(), (sz::Extent{8, 5}));
}

TEST(Enlarge, DegenerateOutput) {
  const sz::ImageF32 img(3, 3);
  for (double scale : {0.0, -1.0, 0.1, std::nan(""), static_cast<double>(INFINITY)}) {
    try {
      (void)sz::enlarge(img, kBilinear, scale);
      FAIL() << scale;
    } catch (const sz::Error& e) {
      EXPECT_EQ(e.code(), sz::ErrorCode::DegenerateOutput);
    }
  }
}

TEST(Method, ParseRoundTrip) {
  for (Method m : sz::kAllMethods) EXPECT_EQ(sz::parse_method(sz::to_string(m)), m);
  EXPECT_FALSE(sz::parse_method("lanczos"));
}
