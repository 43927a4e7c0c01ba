// Copyright 2026 The QSS Authors
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

#ifndef QSS_BYTES_H_
#define QSS_BYTES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qss {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ByteView b);
std::string to_hex(ByteView b);

Bytes concat(std::initializer_list<ByteView> parts);

// True if `needle` occurs as a contiguous run inside `haystack`.
bool contains(ByteView haystack, ByteView needle);

void append_u32_be(Bytes& out, std::uint32_t v);
std::uint32_t read_u32_be(ByteView in, std::size_t offset);

// Constant-time equality for equal-length secrets.
bool equal_ct(ByteView a, ByteView b);

}  // namespace qss

#endif  // QSS_BYTES_H_
