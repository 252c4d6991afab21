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

#include "natprog/source_span.hpp"

#include <algorithm>

namespace natprog {

SourceSpan span_merge(const SourceSpan& a, const SourceSpan& b) {
  const SourceSpan& first = b.start_offset < a.start_offset ? b : a;
  return SourceSpan{first.start_offset,
                    std::max(a.end_offset, b.end_offset), first.line,
                    first.column};
}

SourceSpan span_at(std::string_view source, std::size_t start,
                   std::size_t end) {
  SourceSpan span{start, end, 1, 1};
  start = std::min(start, source.size());
  for (std::size_t i = 0; i < start; ++i) {
    if (source[i] == '\n') {
      ++span.line;
      span.column = 1;
    } else {
      ++span.column;
    }
  }
  return span;
}

}  // namespace natprog
