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

#ifndef LORETAG_GAZETTEER_H_
#define LORETAG_GAZETTEER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loretag/ingest.h"

namespace loretag {

struct GazetteerConfig {
  // A name is ignored when it occurs in strictly more than this many
  // documents.
  std::size_t ignore_threshold = 30;
  bool case_insensitive = true;
};

struct GazetteerEntry {
  std::string surface;  // first-seen original spelling
  std::string norm;     // matching key

  bool operator==(const GazetteerEntry&) const = default;
};

// The matching dictionary. Entries are ordered longest key first (code
// point length), ties by ascending key, so that a scan in entry order
// prefers longer names. Keys are unique and never in the ignore set.
class Gazetteer {
 public:
  Gazetteer() = default;

  const std::vector<GazetteerEntry>& entries() const { return entries_; }
  const std::set<std::string>& ignored() const { return ignored_; }
  bool case_insensitive() const { return case_insensitive_; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Surface forms in entry order, for serialization.
  std::vector<std::string> surfaces() const;

 private:
  friend Gazetteer build_gazetteer(std::span<const std::string>,
                                   const std::set<std::string>&,
                                   const GazetteerConfig&);

  std::vector<GazetteerEntry> entries_;
  std::set<std::string> ignored_;
  bool case_insensitive_ = true;
};

// Trims, collapses internal whitespace runs to one space and, if requested,
// lowercases. An empty result means the name should be dropped.
std::string normalize_name(std::string_view raw, bool case_insensitive = true);

// `a` followed by `b`, dropping any name whose key was already seen. The
// first spelling wins.
std::vector<std::string> merge_name_lists(std::span<const std::string> a,
                                          std::span<const std::string> b,
                                          bool case_insensitive = true);

// For every distinct key, the number of documents whose (folded) text
// contains it as a raw substring.
std::map<std::string, std::size_t> document_frequencies(
    const LoreCorpus& corpus, std::span<const std::string> names,
    bool case_insensitive = true);

// Keys whose document frequency exceeds config.ignore_threshold.
std::set<std::string> compute_ignore_list(const LoreCorpus& corpus,
                                          std::span<const std::string> names,
                                          const GazetteerConfig& config = {});

Gazetteer build_gazetteer(std::span<const std::string> names,
                          const std::set<std::string>& ignore,
                          const GazetteerConfig& config = {});

// Name-per-line files. Ignore lists hold normalized keys; loading one
// re-normalizes each line.
void write_gazetteer(const std::filesystem::path& path,
                     const Gazetteer& gazetteer);
void write_ignore_list(const std::filesystem::path& path,
                       const std::set<std::string>& ignore);
std::set<std::string> load_ignore_list(const std::filesystem::path& path,
                                       bool case_insensitive = true);

}  // namespace loretag

#endif  // LORETAG_GAZETTEER_H_
