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

#include <random>
#include <string>

#include "shadowzoom/pnm.hpp"
#include "support/oracles.hpp"

namespace sz = shadowzoom;
using namespace std::string_literals;

namespace {

sz::ErrorCode code_of(std::string_view bytes) {
  try {
    (void)sz::read_pnm(bytes);
  } catch (const sz::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected read_pnm to fail";
  return sz::ErrorCode::Io;
}

}  // namespace

TEST(ReadPnm, AsciiTwoByTwo) {
  const auto img = sz::read_pnm("P2\n2 2\n255\n0 128 255 7\n");
  EXPECT_EQ(img, sz::ImageU8(2, 2, {0, 128, 255, 7}));
}

TEST(ReadPnm, BinarySingleByte) {
  const auto img = sz::read_pnm("P5\n1 1\n255\n\x2a"s);
  EXPECT_EQ(img, sz::ImageU8(1, 1, {42}));
}

TEST(ReadPnm, BinaryZeroByteSample) {
  const auto img = sz::read_pnm("P5\n2 1\n255\n\x00\xff"s);
  EXPECT_EQ(img, sz::ImageU8(2, 1, {0, 255}));
}

TEST(ReadPnm, AcceptsComments) {
  const auto img = sz::read_pnm("P2\n# made by hand\n2 1 # width height\n# max\n255\n3 4\n");
  EXPECT_EQ(img, sz::ImageU8(2, 1, {3, 4}));
}

TEST(ReadPnm, AcceptsSmallerMaxvalVerbatim) {
  const auto img = sz::read_pnm("P2 2 1 15 0 15");
  EXPECT_EQ(img, sz::ImageU8(2, 1, {0, 15}));
}

TEST(ReadPnm, Errors) {
  EXPECT_EQ(code_of("P2\n2 2\n255\n0 1 2\n"), sz::ErrorCode::TruncatedData);
  EXPECT_EQ(code_of("P5\n2 2\n255\n\x01\x02"s), sz::ErrorCode::TruncatedData);
  EXPECT_EQ(code_of("P5\n1 1\n255\n"), sz::ErrorCode::TruncatedData);
  EXPECT_EQ(code_of("P2\n1 1\n65535\n0\n"), sz::ErrorCode::UnsupportedMaxval);
  EXPECT_EQ(code_of("P3\n1 1\n255\n0 0 0\n"), sz::ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of(""), sz::ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of("P2\n0 1\n255\n"), sz::ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of("P2\nx 1\n255\n0\n"), sz::ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of("P2\n1 1\n0\n0\n"), sz::ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of("P2\n1 1\n10\n11\n"), sz::ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of("P2\n2 1\n255\n1 z\n"), sz::ErrorCode::MalformedHeader);
}

TEST(WritePnm, ExactBytes) {
  EXPECT_EQ(sz::write_pnm(sz::ImageU8(1, 1, {42}), sz::PnmFormat::P5), "P5\n1 1\n255\n\x2a"s);
  EXPECT_EQ(sz::write_pnm(sz::ImageU8(2, 1, {0, 255}), sz::PnmFormat::P2), "P2\n2 1\n255\n0 255\n");
}

TEST(WritePnm, RoundTripRandom16x16) {
  std::mt19937_64 rng(5);
  for (auto format : {sz::PnmFormat::P2, sz::PnmFormat::P5}) {
    for (int i = 0; i < 20; ++i) {
      const auto img = sz::testing::random_u8(rng, 16, 16);
      EXPECT_EQ(sz::read_pnm(sz::write_pnm(img, format)), img);
    }
  }
}

TEST(PgmFile, MissingFileIsIoError) {
  try {
    (void)sz::read_pgm_file("/nonexistent/dir/none.pgm");
    FAIL();
  } catch (const sz::Error& e) {
    EXPECT_EQ(e.code(), sz::ErrorCode::Io);
  }
}
