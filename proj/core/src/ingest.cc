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

#include "loretag/ingest.h"

#include <unordered_map>

#include "json.hpp"
#include "loretag/error.h"
#include "loretag/io.h"
#include "loretag/unicode.h"

namespace loretag {

using ordered_json = nlohmann::ordered_json;

namespace {

void require_utf8(std::string_view bytes, const std::string& what) {
  if (!unicode::is_valid_utf8(bytes)) {
    throw DataError(what + " is not valid UTF-8");
  }
}

template <typename Json, typename Callback>
Json parse_json(std::string_view text, Callback callback,
                const char* what) {
  try {
    return Json::parse(text.begin(), text.end(), callback);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

LoreCorpus parse_lore_corpus(std::string_view json_text) {
  require_utf8(json_text, "lore file");

  // The parsed object silently keeps only one of two identical keys, so
  // duplicates have to be caught while parsing.
  std::unordered_map<std::string, std::string> seen;
  std::string duplicate;
  auto on_event = [&](int depth, nlohmann::json::parse_event_t event,
                      ordered_json& parsed) {
    if (event == nlohmann::json::parse_event_t::key && depth == 1 &&
        duplicate.empty()) {
      const auto& raw = parsed.get_ref<const std::string&>();
      std::string key = unicode::fold_case_utf8(unicode::trim(raw));
      auto [it, inserted] = seen.emplace(key, raw);
      if (!inserted) duplicate = "'" + it->second + "' and '" + raw + "'";
    }
    return true;
  };
  ordered_json root =
      parse_json<ordered_json>(json_text, on_event, "lore file");

  if (!duplicate.empty()) {
    throw DataError("duplicate lore owner names (case-insensitive): " +
                    duplicate);
  }
  if (!root.is_object()) {
    throw DataError("lore file must be a JSON object mapping name to text");
  }

  LoreCorpus corpus;
  corpus.documents.reserve(root.size());
  for (const auto& [key, value] : root.items()) {
    std::string owner(unicode::trim(key));
    if (owner.empty()) throw DataError("lore file has an empty owner name");
    if (!value.is_string()) {
      throw DataError("lore for '" + owner + "' is not a string");
    }
    corpus.documents.push_back({std::move(owner), value.get<std::string>()});
  }
  return corpus;
}

LoreCorpus load_lore_corpus(const std::filesystem::path& path) {
  try {
    return parse_lore_corpus(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::vector<InfoboxRecord> parse_infobox_records(std::string_view json_text) {
  require_utf8(json_text, "infobox file");
  nlohmann::json root =
      parse_json<nlohmann::json>(json_text, nullptr, "infobox file");
  if (!root.is_array()) {
    throw DataError("infobox file must be a JSON array of objects");
  }
  std::vector<InfoboxRecord> records;
  records.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const auto& item = root[i];
    const std::string where = "infobox record " + std::to_string(i);
    if (!item.is_object()) throw DataError(where + " is not an object");
    auto page = item.find("page");
    if (page == item.end() || !page->is_string()) {
      throw DataError(where + " lacks a string \"page\" member");
    }
    InfoboxRecord record;
    record.page_name = std::string(unicode::trim(page->get<std::string>()));
    for (const auto& [key, value] : item.items()) {
      if (key == "page") continue;
      if (value.is_string()) {
        record.attributes.emplace(key, value.get<std::string>());
      } else if (value.is_primitive()) {
        record.attributes.emplace(key, value.dump());
      } else {
        throw DataError(where + " attribute '" + key +
                        "' is not a scalar value");
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<InfoboxRecord> load_infobox_records(
    const std::filesystem::path& path) {
  try {
    return parse_infobox_records(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::vector<std::string> filter_infobox_entities(
    std::span<const InfoboxRecord> records, std::string_view type_key,
    const std::set<std::string>& excluded_values) {
  if (type_key.empty()) throw UsageError("infobox type key must not be empty");
  std::vector<std::string> names;
  const std::string key(type_key);
  for (const auto& record : records) {
    auto it = record.attributes.find(key);
    if (it == record.attributes.end()) continue;
    if (excluded_values.contains(it->second)) continue;
    names.push_back(record.page_name);
  }
  return names;
}

std::vector<std::string> parse_name_list(std::string_view text) {
  require_utf8(text, "name list");
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view name = unicode::trim(text.substr(pos, eol - pos));
    if (!name.empty()) names.emplace_back(name);
    pos = eol + 1;
  }
  return names;
}

std::vector<std::string> load_name_list(const std::filesystem::path& path) {
  try {
    return parse_name_list(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string format_name_list(std::span<const std::string> names) {
  std::string out;
  for (const auto& name : names) {
    if (name.find('\n') != std::string::npos) {
      throw DataError("name contains a newline: '" + name + "'");
    }
    out += name;
    out += '\n';
  }
  return out;
}

void write_name_list(const std::filesystem::path& path,
                     std::span<const std::string> names) {
  write_file_atomic(path, format_name_list(names));
}

}  // namespace loretag
