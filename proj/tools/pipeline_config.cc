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

#include "pipeline_config.h"

#include <charconv>

#include "loretag/error.h"
#include "loretag/io.h"
#include "loretag/unicode.h"

namespace loretag::cli {

namespace fs = std::filesystem;

namespace {

std::string unquote(std::string_view value) {
  value = unicode::trim(value);
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    value = value.substr(1, value.size() - 2);
  }
  return std::string(value);
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    std::size_t comma = value.find(',', pos);
    if (comma == std::string_view::npos) comma = value.size();
    std::string item = unquote(value.substr(pos, comma - pos));
    if (!item.empty()) items.push_back(std::move(item));
    pos = comma + 1;
  }
  return items;
}

bool parse_bool(std::string_view value, const std::string& where) {
  if (value == "true" || value == "yes" || value == "on" || value == "1") {
    return true;
  }
  if (value == "false" || value == "no" || value == "off" || value == "0") {
    return false;
  }
  throw UsageError(where + ": expected a boolean, got '" + std::string(value) +
                   "'");
}

template <typename Int>
Int parse_uint(std::string_view value, const std::string& where) {
  Int out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw UsageError(where + ": expected a non-negative integer, got '" +
                     std::string(value) + "'");
  }
  return out;
}

fs::path resolve(const fs::path& base, const std::string& value) {
  fs::path p(value);
  return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

void PipelineConfig::validate() const {
  if (lore.empty()) throw UsageError("no lore file given");
  if (names.empty() && !infobox) {
    throw UsageError("no name lists or infobox file given");
  }
  std::error_code ec;
  auto require = [&](const fs::path& p) {
    if (!fs::is_regular_file(p, ec)) {
      throw UsageError("input file '" + p.string() + "' does not exist");
    }
  };
  require(lore);
  for (const auto& p : names) require(p);
  if (infobox) require(*infobox);
  if (infobox_type_key.empty()) throw UsageError("empty infobox type key");
  if (!is_valid_label(label)) throw UsageError("invalid label '" + label + "'");
  split.validate();
}

PipelineConfig parse_pipeline_config(std::string_view text,
                                     const fs::path& base_dir) {
  PipelineConfig config;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = unicode::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    const std::string where = "config line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') throw UsageError(where + ": unterminated section");
      section = std::string(unicode::trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(where + ": expected key = value");
    }
    const std::string key(unicode::trim(line.substr(0, eq)));
    const std::string value = unquote(line.substr(eq + 1));
    const std::string name = section.empty() ? key : section + "." + key;

    if (name == "paths.lore") {
      config.lore = resolve(base_dir, value);
    } else if (name == "paths.names") {
      config.names.clear();
      for (const auto& item : split_list(line.substr(eq + 1))) {
        config.names.push_back(resolve(base_dir, item));
      }
    } else if (name == "paths.infobox") {
      if (value.empty()) {
        config.infobox.reset();
      } else {
        config.infobox = resolve(base_dir, value);
      }
    } else if (name == "paths.out_dir") {
      config.out_dir = resolve(base_dir, value);
    } else if (name == "gazetteer.ignore_threshold") {
      config.gazetteer.ignore_threshold = parse_uint<std::size_t>(value, where);
    } else if (name == "gazetteer.case_insensitive") {
      config.gazetteer.case_insensitive = parse_bool(value, where);
    } else if (name == "gazetteer.type_key") {
      config.infobox_type_key = value;
    } else if (name == "gazetteer.exclude") {
      const auto items = split_list(line.substr(eq + 1));
      config.infobox_exclude = {items.begin(), items.end()};
    } else if (name == "tagger.mode") {
      config.mode = parse_match_mode(value);
    } else if (name == "tagger.label") {
      config.label = value;
    } else if (name == "split.ratios") {
      config.split.ratios = SplitSpec::parse_ratios(value);
    } else if (name == "split.seed") {
      if (value.empty() || value == "none") {
        config.split.shuffle_seed.reset();
      } else {
        config.split.shuffle_seed = parse_uint<std::uint64_t>(value, where);
      }
    } else {
      throw UsageError(where + ": unknown setting '" + name + "'");
    }
  }
  return config;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error&) {
    throw UsageError("cannot read config file '" + path.string() + "'");
  }
  try {
    return parse_pipeline_config(text, path.parent_path());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

}  // namespace loretag::cli
