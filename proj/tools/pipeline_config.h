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

// Configuration for `loretag pipeline`. The file is sectioned key = value
// text; '#' and ';' start comments, values may be double-quoted, lists are
// comma-separated and relative paths resolve against the file's directory.
//
//   [paths]
//   lore = lore.json
//   names = names_initial.txt, names_extra.txt
//   infobox = infobox.json
//   out_dir = out
//
//   [gazetteer]
//   ignore_threshold = 30
//   case_insensitive = true
//   type_key = type5e
//   exclude = spell
//
//   [tagger]
//   mode = word_boundary
//   label = MONS
//
//   [split]
//   ratios = 2/3, 1/6, 1/6
//   seed = 7

#ifndef LORETAG_TOOLS_PIPELINE_CONFIG_H_
#define LORETAG_TOOLS_PIPELINE_CONFIG_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "loretag/bio.h"
#include "loretag/corpus.h"
#include "loretag/gazetteer.h"
#include "loretag/tagger.h"

namespace loretag::cli {

struct PipelineConfig {
  std::filesystem::path lore;
  std::vector<std::filesystem::path> names;
  std::optional<std::filesystem::path> infobox;
  std::filesystem::path out_dir = "out";

  std::string infobox_type_key = "type5e";
  std::set<std::string> infobox_exclude;

  GazetteerConfig gazetteer;
  MatchMode mode = MatchMode::kWordBoundary;
  SplitSpec split;
  std::string label = std::string(kDefaultLabel);

  // Throws Error(kUsage) for missing inputs or inconsistent settings.
  void validate() const;
};

PipelineConfig parse_pipeline_config(std::string_view text,
                                     const std::filesystem::path& base_dir);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

}  // namespace loretag::cli

#endif  // LORETAG_TOOLS_PIPELINE_CONFIG_H_
