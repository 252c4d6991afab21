// Copyright 2026 The natprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NATPROG_SOURCE_SPAN_HPP_
#define NATPROG_SOURCE_SPAN_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace natprog {

// Half-open byte range [start_offset, end_offset) into UTF-8 source text, with
// the 1-based line/column of start_offset.
struct SourceSpan {
  std::size_t start_offset = 0;
  std::size_t end_offset = 0;
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  std::size_t length() const { return end_offset - start_offset; }
  bool operator==(const SourceSpan&) const = default;
};

// Hull of two spans; line/column come from whichever starts first.
SourceSpan span_merge(const SourceSpan& a, const SourceSpan& b);

// Builds a span for [start, end) by counting lines in `source`.
SourceSpan span_at(std::string_view source, std::size_t start, std::size_t end);

}  // namespace natprog

#endif  // NATPROG_SOURCE_SPAN_HPP_
