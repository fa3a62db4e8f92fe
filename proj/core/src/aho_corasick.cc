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

#include "loretag/aho_corasick.h"

#include <queue>
#include <stdexcept>

namespace loretag {

AhoCorasick::AhoCorasick(const std::vector<std::u32string>& patterns) {
  pattern_lengths_.reserve(patterns.size());
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const auto& pattern = patterns[p];
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    std::int32_t state = 0;
    for (char32_t cp : pattern) {
      auto it = nodes_[state].next.find(cp);
      if (it == nodes_[state].next.end()) {
        nodes_.emplace_back();
        const auto created = static_cast<std::int32_t>(nodes_.size() - 1);
        nodes_[state].next.emplace(cp, created);
        state = created;
      } else {
        state = it->second;
      }
    }
    if (nodes_[state].output >= 0) {
      throw std::invalid_argument("duplicate pattern");
    }
    nodes_[state].output = static_cast<std::int32_t>(p);
    pattern_lengths_.push_back(pattern.size());
  }

  // Breadth-first so every node's fail target is finalized before its
  // children are visited.
  std::queue<std::int32_t> pending;
  for (const auto& [cp, child] : nodes_[0].next) {
    nodes_[child].fail = 0;
    pending.push(child);
  }
  while (!pending.empty()) {
    const std::int32_t node = pending.front();
    pending.pop();
    for (const auto& [cp, child] : nodes_[node].next) {
      std::int32_t f = nodes_[node].fail;
      while (f != 0 && !nodes_[f].next.contains(cp)) f = nodes_[f].fail;
      auto it = nodes_[f].next.find(cp);
      nodes_[child].fail =
          (it != nodes_[f].next.end() && it->second != child) ? it->second : 0;
      const std::int32_t fail = nodes_[child].fail;
      nodes_[child].dict_suffix =
          nodes_[fail].output >= 0 ? fail : nodes_[fail].dict_suffix;
      pending.push(child);
    }
  }
}

std::int32_t AhoCorasick::step(std::int32_t state, char32_t cp) const {
  while (true) {
    const auto& next = nodes_[state].next;
    auto it = next.find(cp);
    if (it != next.end()) return it->second;
    if (state == 0) return 0;
    state = nodes_[state].fail;
  }
}

std::vector<AhoCorasick::Match> AhoCorasick::find_all(
    std::u32string_view text) const {
  std::vector<Match> matches;
  for_each_match(text, [&](const Match& m) { matches.push_back(m); });
  return matches;
}

}  // namespace loretag
