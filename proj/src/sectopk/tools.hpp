// Copyright 2026 The sectopk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Small utilities behind the CLI: the key-size table, curve point dumps and
// a one-message pipeline demo.

#ifndef SECTOPK_TOOLS_HPP
#define SECTOPK_TOOLS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sectopk::tools {

struct KeySizeRow {
  int serial;
  int symmetric_bits;
  int rsa_bits;
  std::string_view ecc_bits;
};

const std::vector<KeySizeRow>& key_size_rows();

// Header plus five tab-separated rows, newline terminated.
std::string keys_table();

// "x,y" lines sorted by x then y. Throws InvalidCurve for a non-prime p or a
// singular curve, CurveTooLarge above the enumeration limit.
std::string curve_points_csv(std::uint64_t p, std::int64_t a, std::int64_t b);

struct DemoResult {
  std::string transcript;
  std::string recovered;
};

// ascii -> dummies -> encrypt -> sign -> frame -> embed -> extract -> verify
// -> decrypt -> strip. Throws on any stage error (NonAsciiCharacter etc.).
DemoResult demo(std::string_view text, std::uint64_t seed = 1);

}  // namespace sectopk::tools

#endif  // SECTOPK_TOOLS_HPP
