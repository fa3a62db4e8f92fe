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

// Loading of entity name lists, lore document collections and wiki infobox
// dumps.
//
// Lore file:    {"Owner Name": "lore text", ...}   (flat, UTF-8)
// Name list:    one name per line, UTF-8
// Infobox file: [{"page": "Archdevil", "type5e": "fiend", ...}, ...]

#ifndef LORETAG_INGEST_H_
#define LORETAG_INGEST_H_

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loretag {

struct LoreDocument {
  std::string owner_name;  // trimmed, non-empty
  std::string text;        // may be empty

  bool operator==(const LoreDocument&) const = default;
};

// Documents in file order. Owner names are unique ignoring case.
struct LoreCorpus {
  std::vector<LoreDocument> documents;

  bool operator==(const LoreCorpus&) const = default;
};

struct InfoboxRecord {
  std::string page_name;
  std::map<std::string, std::string> attributes;

  bool operator==(const InfoboxRecord&) const = default;
};

LoreCorpus parse_lore_corpus(std::string_view json_text);
LoreCorpus load_lore_corpus(const std::filesystem::path& path);

// Array of objects; "page" is required, every other member is an attribute.
// Scalar attribute values are stored as their string form; nested arrays
// and objects are rejected.
std::vector<InfoboxRecord> parse_infobox_records(std::string_view json_text);
std::vector<InfoboxRecord> load_infobox_records(
    const std::filesystem::path& path);

// Page names of records whose `type_key` attribute is present and not one
// of `excluded_values`. Order and duplicates are kept.
std::vector<std::string> filter_infobox_entities(
    std::span<const InfoboxRecord> records, std::string_view type_key,
    const std::set<std::string>& excluded_values);

std::vector<std::string> parse_name_list(std::string_view text);
std::vector<std::string> load_name_list(const std::filesystem::path& path);

std::string format_name_list(std::span<const std::string> names);
void write_name_list(const std::filesystem::path& path,
                     std::span<const std::string> names);

}  // namespace loretag

#endif  // LORETAG_INGEST_H_
