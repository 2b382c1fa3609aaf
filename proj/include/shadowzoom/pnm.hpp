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

// Netpbm graymap (PGM) reader/writer. Input accepts P2 and P5 with maxval up
// to 255 and '#' comments in the header; output always uses maxval 255 and
// never emits comments.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

#include "shadowzoom/error.hpp"
#include "shadowzoom/image.hpp"

namespace shadowzoom {

enum class PnmFormat { P2, P5 };

namespace detail {

class PnmCursor {
 public:
  explicit PnmCursor(std::string_view bytes) : bytes_(bytes) {}

  void skip_whitespace_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Header integers must be followed by whitespace or a comment.
  std::optional<unsigned long> header_uint() {
    skip_whitespace_and_comments();
    auto value = digits();
    if (!value) return std::nullopt;
    if (pos_ >= bytes_.size()) return std::nullopt;
    const char c = bytes_[pos_];
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '#') return std::nullopt;
    return value;
  }

  // Returns nullopt at end of input; throws on a non-digit token.
  std::optional<unsigned long> payload_uint() {
    while (pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
    if (pos_ >= bytes_.size()) return std::nullopt;
    auto value = digits();
    if (!value) throw Error(ErrorCode::MalformedHeader, "non-numeric token in ASCII payload");
    return value;
  }

  std::size_t position() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  char peek() const noexcept { return bytes_[pos_]; }

 private:
  std::optional<unsigned long> digits() {
    unsigned long value = 0;
    const char* first = bytes_.data() + pos_;
    const char* last = bytes_.data() + bytes_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) return std::nullopt;
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ImageU8 read_pnm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw Error(ErrorCode::MalformedHeader, "expected magic P2 or P5");
  }
  const bool binary = bytes[1] == '5';
  detail::PnmCursor cur(bytes);
  cur.advance(2);
  if (cur.remaining() == 0 || (!std::isspace(static_cast<unsigned char>(cur.peek())) && cur.peek() != '#')) {
    throw Error(ErrorCode::MalformedHeader, "magic must be followed by whitespace");
  }

  const auto width = cur.header_uint();
  const auto height = cur.header_uint();
  const auto maxval = cur.header_uint();
  if (!width || !height || *width == 0 || *height == 0) {
    throw Error(ErrorCode::MalformedHeader, "bad image dimensions");
  }
  if (!maxval || *maxval == 0) throw Error(ErrorCode::MalformedHeader, "bad maxval");
  if (*maxval > 255) throw Error(ErrorCode::UnsupportedMaxval, "maxval " + std::to_string(*maxval) + " > 255");

  const std::size_t count = *width * *height;
  std::vector<std::uint8_t> samples;
  samples.reserve(count);

  if (binary) {
    cur.advance(1);  // single whitespace byte separates header from raster
    if (cur.remaining() < count) {
      throw Error(ErrorCode::TruncatedData, "expected " + std::to_string(count) + " bytes, found " +
                                                std::to_string(cur.remaining()));
    }
    const auto raster = bytes.substr(cur.position(), count);
    for (char c : raster) samples.push_back(static_cast<std::uint8_t>(c));
  } else {
    while (samples.size() < count) {
      const auto v = cur.payload_uint();
      if (!v) {
        throw Error(ErrorCode::TruncatedData, "expected " + std::to_string(count) + " samples, found " +
                                                  std::to_string(samples.size()));
      }
      if (*v > *maxval) throw Error(ErrorCode::MalformedHeader, "sample exceeds maxval");
      samples.push_back(static_cast<std::uint8_t>(*v));
    }
  }
  if (binary && std::ranges::any_of(samples, [&](std::uint8_t v) { return v > *maxval; })) {
    throw Error(ErrorCode::MalformedHeader, "sample exceeds maxval");
  }
  return ImageU8(*width, *height, std::move(samples));
}

inline std::string write_pnm(const ImageU8& img, PnmFormat format) {
  std::string out = format == PnmFormat::P5 ? "P5\n" : "P2\n";
  out += std::to_string(img.width()) + ' ' + std::to_string(img.height()) + "\n255\n";
  if (format == PnmFormat::P5) {
    out.reserve(out.size() + img.size());
    for (std::uint8_t v : img.samples()) out.push_back(static_cast<char>(v));
    return out;
  }
  // one raster row per line
  for (std::size_t y = 0; y < img.height(); ++y) {
    const auto row = img.row(y);
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (x) out.push_back(' ');
      out += std::to_string(row[x]);
    }
    out.push_back('\n');
  }
  return out;
}

inline ImageU8 read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_pnm(bytes);
}

inline void write_pgm_file(const std::filesystem::path& path, const ImageU8& img,
                           PnmFormat format = PnmFormat::P5) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  const std::string bytes = write_pnm(img, format);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace shadowzoom
