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

#include <cmath>
#include <limits>
#include <random>

#include "shadowzoom/image.hpp"
#include "support/oracles.hpp"

namespace sz = shadowzoom;

TEST(Image, RejectsZeroDimensions) {
  EXPECT_THROW(sz::ImageU8(0, 3), sz::Error);
  EXPECT_THROW(sz::ImageU8(3, 0), sz::Error);
}

TEST(Image, RejectsSampleCountMismatch) {
  try {
    sz::ImageU8(2, 2, std::vector<std::uint8_t>{1, 2, 3});
    FAIL() << "expected an error";
  } catch (const sz::Error& e) {
    EXPECT_EQ(e.code(), sz::ErrorCode::InvalidArgument);
  }
}

TEST(Image, RowMajorIndexing) {
  const sz::ImageU8 img(3, 2, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(img(2, 0), 2);
  EXPECT_EQ(img(0, 1), 3);
  EXPECT_EQ((img[sz::PixelCoord{1, 1}]), 4);
  EXPECT_EQ(img.row(1)[2], 5);
}

TEST(ToFloat, ExactWidening) {
  const sz::ImageU8 img(3, 1, {0, 128, 255});
  const auto f = sz::to_float(img);
  EXPECT_EQ(f.samples()[0], 0.0f);
  EXPECT_EQ(f.samples()[1], 128.0f);
  EXPECT_EQ(f.samples()[2], 255.0f);

  const auto one = sz::to_float(sz::ImageU8(1, 1, {7}));
  EXPECT_EQ(one.width(), 1u);
  EXPECT_EQ(one.samples()[0], 7.0f);
}

TEST(ToU8, ClampsAndRoundsHalfAwayFromZero) {
  const sz::ImageF32 img(5, 1, {-3.2f, 127.5f, 300.0f, 0.49f, 0.5f});
  const auto q = sz::to_u8(img);
  EXPECT_EQ(q.samples()[0], 0);
  EXPECT_EQ(q.samples()[1], 128);
  EXPECT_EQ(q.samples()[2], 255);
  EXPECT_EQ(q.samples()[3], 0);
  EXPECT_EQ(q.samples()[4], 1);
}

TEST(ToU8, ConstantImage) {
  const sz::ImageF32 img(4, 3, 42.0f);
  EXPECT_EQ(sz::to_u8(img), sz::ImageU8(4, 3, 42));
}

TEST(ToU8, RejectsNonFinite) {
  for (float bad : {std::numeric_limits<float>::quiet_NaN(), std::numeric_limits<float>::infinity(),
                    -std::numeric_limits<float>::infinity()}) {
    const sz::ImageF32 img(2, 1, {1.0f, bad});
    try {
      (void)sz::to_u8(img);
      FAIL() << "expected NonFiniteSample";
    } catch (const sz::Error& e) {
      EXPECT_EQ(e.code(), sz::ErrorCode::NonFiniteSample);
    }
  }
}

TEST(ToU8, RoundTripThroughFloatIsIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto img = sz::testing::random_u8(rng, sz::testing::uniform_size(rng, 1, 20),
                                            sz::testing::uniform_size(rng, 1, 20));
    EXPECT_EQ(sz::to_u8(sz::to_float(img)), img);
  }
}

TEST(ToU8, OutOfRangeInputsStayInRange) {
  std::mt19937_64 rng(12);
  const auto img = sz::testing::random_real(rng, 32, 32, -1e6, 1e6);
  const auto q = sz::to_u8(img);
  for (std::size_t i = 0; i < img.size(); ++i) {
    EXPECT_EQ(q.samples()[i], sz::testing::oracle_quantize(img.samples()[i]));
  }
}

TEST(MirrorX, ReversesRows) {
  const sz::ImageU8 img(3, 2, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(sz::mirror_x(img), sz::ImageU8(3, 2, {3, 2, 1, 6, 5, 4}));
}
