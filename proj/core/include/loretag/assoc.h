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

// Association maps: mentioned entity -> owners of the documents that
// mention it. Each (entity, owner) pair is one edge "owner -> entity" of the
// association graph.

#ifndef LORETAG_ASSOC_H_
#define LORETAG_ASSOC_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "loretag/bio.h"

namespace loretag {

enum class NameNormalization {
  kCaseFold,  // trim, collapse whitespace, lowercase
  kExact,     // trim and collapse whitespace only
};

std::string normalize_entity(std::string_view name, NameNormalization mode);

struct AssociationMap {
  // Entity display name -> owners in first-mention order, no duplicates.
  std::map<std::string, std::vector<std::string>> entries;
  bool include_self = false;

  std::size_t pair_count() const;
  bool operator==(const AssociationMap&) const = default;
};

// Mentions are the tagged spans of each document, deduplicated per document
// by normalized name. When a mention normalizes to a document owner's name
// the owner's spelling is used as the entity name; otherwise the first
// spelling seen in the text is.
AssociationMap build_association_map(
    const BioCorpus& corpus,
    NameNormalization normalization = NameNormalization::kCaseFold,
    bool include_self = false);

struct MapDiff {
  std::map<std::string, std::vector<std::string>> only_in_a;
  std::map<std::string, std::vector<std::string>> only_in_b;
  std::size_t common = 0;  // shared (entity, owner) pairs

  bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
  std::string to_json() const;
};

// Set difference over (entity, owner) pairs compared by normalized name.
MapDiff diff_maps(const AssociationMap& a, const AssociationMap& b,
                  NameNormalization normalization = NameNormalization::kCaseFold);

// Graphviz digraph named "assoc": sorted quoted node statements, then
// sorted "owner" -> "entity" edges. An empty map gives "digraph assoc {}".
std::string export_dot(const AssociationMap& map);

// {"Ettin": ["Green Dragon Wyrmling", "Goblin"], ...}
std::string association_map_to_json(const AssociationMap& map);
AssociationMap parse_association_map(std::string_view json_text);
AssociationMap load_association_map(const std::filesystem::path& path);

}  // namespace loretag

#endif  // LORETAG_ASSOC_H_
