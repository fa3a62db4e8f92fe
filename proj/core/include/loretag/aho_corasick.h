// Copyright 2026 The Loretag Authors
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

#ifndef LORETAG_AHO_CORASICK_H_
#define LORETAG_AHO_CORASICK_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace loretag {

// Multi-pattern exact matcher over code point strings. Reports every
// occurrence of every pattern, including overlapping ones.
class AhoCorasick {
 public:
  struct Match {
    std::size_t pattern;  // index in insertion order
    std::size_t start;    // code point offset, inclusive
    std::size_t end;      // exclusive
  };

  AhoCorasick() = default;
  explicit AhoCorasick(const std::vector<std::u32string>& patterns);

  std::size_t pattern_count() const { return pattern_lengths_.size(); }

  // Calls visit(Match) for each occurrence, ordered by end offset and, for
  // equal ends, from the longest pattern to the shortest.
  template <typename Visitor>
  void for_each_match(std::u32string_view text, Visitor&& visit) const;

  std::vector<Match> find_all(std::u32string_view text) const;

 private:
  struct Node {
    std::unordered_map<char32_t, std::int32_t> next;
    std::int32_t fail = 0;
    std::int32_t output = -1;       // pattern ending exactly here
    std::int32_t dict_suffix = -1;  // nearest fail-chain node with output
  };

  std::int32_t step(std::int32_t state, char32_t cp) const;

  std::vector<Node> nodes_{1};
  std::vector<std::size_t> pattern_lengths_;
};

template <typename Visitor>
void AhoCorasick::for_each_match(std::u32string_view text,
                                 Visitor&& visit) const {
  if (pattern_lengths_.empty()) return;
  std::int32_t state = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    state = step(state, text[i]);
    std::int32_t hit = nodes_[state].output >= 0 ? state
                                                 : nodes_[state].dict_suffix;
    while (hit >= 0) {
      const auto pattern = static_cast<std::size_t>(nodes_[hit].output);
      const std::size_t end = i + 1;
      visit(Match{pattern, end - pattern_lengths_[pattern], end});
      hit = nodes_[hit].dict_suffix;
    }
  }
}

}  // namespace loretag

#endif  // LORETAG_AHO_CORASICK_H_
