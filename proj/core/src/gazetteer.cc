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

#include "loretag/gazetteer.h"

#include <algorithm>
#include <unordered_set>

#include "loretag/aho_corasick.h"
#include "loretag/error.h"
#include "loretag/unicode.h"

namespace loretag {

std::vector<std::string> Gazetteer::surfaces() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.surface);
  return out;
}

std::string normalize_name(std::string_view raw, bool case_insensitive) {
  std::u32string text = unicode::decode_utf8(raw);
  std::u32string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t cp : text) {
    if (unicode::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(case_insensitive ? unicode::fold_case(cp) : cp);
  }
  return unicode::encode_utf8(out);
}

std::vector<std::string> merge_name_lists(std::span<const std::string> a,
                                          std::span<const std::string> b,
                                          bool case_insensitive) {
  std::vector<std::string> merged;
  std::unordered_set<std::string> seen;
  auto take = [&](std::span<const std::string> names) {
    for (const auto& name : names) {
      std::string key = normalize_name(name, case_insensitive);
      if (key.empty()) continue;
      if (seen.insert(std::move(key)).second) {
        merged.emplace_back(unicode::trim(name));
      }
    }
  };
  take(a);
  take(b);
  return merged;
}

std::map<std::string, std::size_t> document_frequencies(
    const LoreCorpus& corpus, std::span<const std::string> names,
    bool case_insensitive) {
  std::vector<std::string> keys;
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    std::string key = normalize_name(name, case_insensitive);
    if (!key.empty() && seen.insert(key).second) keys.push_back(key);
  }

  std::vector<std::u32string> patterns;
  patterns.reserve(keys.size());
  for (const auto& key : keys) patterns.push_back(unicode::decode_utf8(key));
  const AhoCorasick automaton(patterns);

  std::vector<std::size_t> counts(keys.size(), 0);
  std::vector<char> hit(keys.size(), 0);
  for (const auto& doc : corpus.documents) {
    std::u32string text = unicode::decode_utf8(doc.text);
    if (case_insensitive) text = unicode::fold_case(text);
    std::fill(hit.begin(), hit.end(), 0);
    automaton.for_each_match(text, [&](const AhoCorasick::Match& m) {
      if (!hit[m.pattern]) {
        hit[m.pattern] = 1;
        ++counts[m.pattern];
      }
    });
  }

  std::map<std::string, std::size_t> frequencies;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    frequencies.emplace(keys[i], counts[i]);
  }
  return frequencies;
}

std::set<std::string> compute_ignore_list(const LoreCorpus& corpus,
                                          std::span<const std::string> names,
                                          const GazetteerConfig& config) {
  if (names.empty()) {
    throw DataError("cannot compute an ignore list for an empty name list");
  }
  std::set<std::string> ignore;
  for (const auto& [key, count] :
       document_frequencies(corpus, names, config.case_insensitive)) {
    if (count > config.ignore_threshold) ignore.insert(key);
  }
  return ignore;
}

Gazetteer build_gazetteer(std::span<const std::string> names,
                          const std::set<std::string>& ignore,
                          const GazetteerConfig& config) {
  Gazetteer gazetteer;
  gazetteer.case_insensitive_ = config.case_insensitive;
  gazetteer.ignored_ = ignore;

  struct Keyed {
    GazetteerEntry entry;
    std::size_t length;
  };
  std::vector<Keyed> keyed;
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    std::string norm = normalize_name(name, config.case_insensitive);
    if (norm.empty() || ignore.contains(norm)) continue;
    if (!seen.insert(norm).second) continue;
    const std::size_t length = unicode::decode_utf8(norm).size();
    keyed.push_back({{std::string(unicode::trim(name)), std::move(norm)},
                     length});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.entry.norm < y.entry.norm;
  });
  gazetteer.entries_.reserve(keyed.size());
  for (auto& k : keyed) gazetteer.entries_.push_back(std::move(k.entry));
  return gazetteer;
}

void write_gazetteer(const std::filesystem::path& path,
                     const Gazetteer& gazetteer) {
  write_name_list(path, gazetteer.surfaces());
}

void write_ignore_list(const std::filesystem::path& path,
                       const std::set<std::string>& ignore) {
  const std::vector<std::string> keys(ignore.begin(), ignore.end());
  write_name_list(path, keys);
}

std::set<std::string> load_ignore_list(const std::filesystem::path& path,
                                       bool case_insensitive) {
  std::set<std::string> ignore;
  for (const auto& name : load_name_list(path)) {
    ignore.insert(normalize_name(name, case_insensitive));
  }
  return ignore;
}

}  // namespace loretag
