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

#ifndef LORETAG_TOOLS_CLI_H_
#define LORETAG_TOOLS_CLI_H_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "pipeline_config.h"

namespace loretag::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitIo = 3;

// Output file name (relative to out_dir) -> contents.
using PipelineOutputs = std::map<std::string, std::string>;

// gazetteer -> ignore -> tag -> split -> stats, entirely in memory. Stage
// progress goes to `log`.
PipelineOutputs run_pipeline(const PipelineConfig& config, std::ostream& log);

// `args` excludes the program name. Data goes to `out`, diagnostics to
// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace loretag::cli

#endif  // LORETAG_TOOLS_CLI_H_
