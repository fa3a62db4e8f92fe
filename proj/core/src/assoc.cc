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

#include "loretag/assoc.h"

#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "loretag/error.h"
#include "loretag/eval.h"
#include "loretag/gazetteer.h"
#include "loretag/io.h"
#include "loretag/unicode.h"

namespace loretag {
namespace {

using Pair = std::pair<std::string, std::string>;  // (entity, owner)

std::string span_surface(const Sentence& sentence, const TokenSpan& span) {
  std::string surface;
  for (std::size_t i = span.token_start; i < span.token_end; ++i) {
    if (i > span.token_start) surface += ' ';
    surface += sentence.tokens[i].text;
  }
  return surface;
}

// Normalized pair -> display pair, in map iteration order.
std::map<Pair, Pair> keyed_pairs(const AssociationMap& map,
                                 NameNormalization normalization) {
  std::map<Pair, Pair> pairs;
  for (const auto& [entity, owners] : map.entries) {
    const std::string e = normalize_entity(entity, normalization);
    for (const auto& owner : owners) {
      pairs.emplace(Pair{e, normalize_entity(owner, normalization)},
                    Pair{entity, owner});
    }
  }
  return pairs;
}

std::string quote_dot(std::string_view id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json grouped_json(
    const std::map<std::string, std::vector<std::string>>& groups) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [entity, owners] : groups) j[entity] = owners;
  return j;
}

}  // namespace

std::string normalize_entity(std::string_view name, NameNormalization mode) {
  return normalize_name(name, mode == NameNormalization::kCaseFold);
}

std::size_t AssociationMap::pair_count() const {
  std::size_t n = 0;
  for (const auto& [entity, owners] : entries) n += owners.size();
  return n;
}

AssociationMap build_association_map(const BioCorpus& corpus,
                                     NameNormalization normalization,
                                     bool include_self) {
  std::unordered_map<std::string, std::string> owner_spelling;
  for (const auto& doc : corpus.documents) {
    owner_spelling.emplace(normalize_entity(doc.owner_name, normalization),
                           doc.owner_name);
  }

  struct Mentioned {
    std::string display;
    std::vector<std::string> owners;
  };
  std::map<std::string, Mentioned> by_key;

  for (const auto& doc : corpus.documents) {
    const std::string owner_key = normalize_entity(doc.owner_name, normalization);
    std::unordered_set<std::string> seen;
    for (const auto& tagged : doc.sentences) {
      for (const auto& span : extract_spans_from_bio(tagged.tags).spans) {
        std::string surface = span_surface(tagged.sentence, span);
        std::string key = normalize_entity(surface, normalization);
        if (key.empty() || !seen.insert(key).second) continue;
        if (key == owner_key && !include_self) continue;
        auto [it, inserted] = by_key.try_emplace(key);
        if (inserted) {
          auto owner = owner_spelling.find(key);
          it->second.display = owner != owner_spelling.end()
                                   ? owner->second
                                   : normalize_entity(surface,
                                                      NameNormalization::kExact);
        }
        it->second.owners.push_back(doc.owner_name);
      }
    }
  }

  AssociationMap map;
  map.include_self = include_self;
  for (auto& [key, mentioned] : by_key) {
    auto& owners = map.entries[mentioned.display];
    owners.insert(owners.end(), mentioned.owners.begin(), mentioned.owners.end());
  }
  return map;
}

MapDiff diff_maps(const AssociationMap& a, const AssociationMap& b,
                  NameNormalization normalization) {
  const auto pairs_a = keyed_pairs(a, normalization);
  const auto pairs_b = keyed_pairs(b, normalization);

  // Regroup by entity, keeping each map's own owner order.
  auto only = [](const AssociationMap& source,
                 const std::map<Pair, Pair>& mine,
                 const std::map<Pair, Pair>& theirs) {
    std::set<Pair> missing;
    for (const auto& [key, display] : mine) {
      if (!theirs.contains(key)) missing.insert(display);
    }
    std::map<std::string, std::vector<std::string>> grouped;
    for (const auto& [entity, owners] : source.entries) {
      for (const auto& owner : owners) {
        if (missing.contains({entity, owner})) grouped[entity].push_back(owner);
      }
    }
    return grouped;
  };

  MapDiff diff;
  diff.only_in_a = only(a, pairs_a, pairs_b);
  diff.only_in_b = only(b, pairs_b, pairs_a);
  for (const auto& [key, display] : pairs_a) {
    if (pairs_b.contains(key)) ++diff.common;
  }
  return diff;
}

std::string MapDiff::to_json() const {
  nlohmann::ordered_json j;
  j["only_in_a"] = grouped_json(only_in_a);
  j["only_in_b"] = grouped_json(only_in_b);
  j["common"] = common;
  return j.dump(2) + "\n";
}

std::string export_dot(const AssociationMap& map) {
  std::set<std::string> nodes;
  std::set<Pair> edges;  // (owner, entity)
  for (const auto& [entity, owners] : map.entries) {
    for (const auto& owner : owners) {
      nodes.insert(entity);
      nodes.insert(owner);
      edges.emplace(owner, entity);
    }
  }
  if (nodes.empty()) return "digraph assoc {}\n";
  std::string out = "digraph assoc {\n";
  for (const auto& node : nodes) out += "  " + quote_dot(node) + ";\n";
  for (const auto& [from, to] : edges) {
    out += "  " + quote_dot(from) + " -> " + quote_dot(to) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string association_map_to_json(const AssociationMap& map) {
  return grouped_json(map.entries).dump(2) + "\n";
}

AssociationMap parse_association_map(std::string_view json_text) {
  if (!unicode::is_valid_utf8(json_text)) {
    throw DataError("association map is not valid UTF-8");
  }
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("malformed association map: ") + e.what());
  }
  if (!root.is_object()) {
    throw DataError("association map must be a JSON object");
  }
  AssociationMap map;
  for (const auto& [entity, owners] : root.items()) {
    if (!owners.is_array()) {
      throw DataError("owners of '" + entity + "' must be an array");
    }
    auto& list = map.entries[entity];
    std::unordered_set<std::string> seen;
    const std::string entity_key =
        normalize_entity(entity, NameNormalization::kCaseFold);
    for (const auto& owner : owners) {
      if (!owner.is_string()) {
        throw DataError("owner of '" + entity + "' is not a string");
      }
      const auto& name = owner.get_ref<const std::string&>();
      if (!seen.insert(name).second) {
        throw DataError("duplicate owner '" + name + "' for '" + entity + "'");
      }
      if (normalize_entity(name, NameNormalization::kCaseFold) == entity_key) {
        map.include_self = true;
      }
      list.push_back(name);
    }
  }
  return map;
}

AssociationMap load_association_map(const std::filesystem::path& path) {
  try {
    return parse_association_map(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

}  // namespace loretag
