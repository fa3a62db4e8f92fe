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

// Exact-match span evaluation over BIO corpora.
//
// A predicted span counts as a true positive only when a gold span has the
// same sentence, the same token range and the same label. Malformed I- tags
// (after O, at sentence start, or after a different label) are read as B-
// before decoding.

#ifndef LORETAG_EVAL_H_
#define LORETAG_EVAL_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loretag/bio.h"

namespace loretag {

struct SpanKey {
  std::size_t sentence_index = 0;  // global, in corpus order
  std::size_t token_start = 0;
  std::size_t token_end = 0;
  std::string label;

  auto operator<=>(const SpanKey&) const = default;
};

struct DecodedSpans {
  std::vector<TokenSpan> spans;
  std::size_t repairs = 0;
};

// Rewrites malformed I-X tags to B-X in place; returns how many changed.
// Throws Error(kData) on a string that is not a BIO tag at all.
std::size_t repair_bio(std::vector<std::string>& tags);

DecodedSpans extract_spans_from_bio(std::span<const std::string> tags);

// All spans of a corpus, optionally restricted to `labels`.
std::set<SpanKey> extract_span_keys(
    const BioCorpus& corpus,
    const std::optional<std::set<std::string>>& labels = std::nullopt);

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;  // fractions in [0, 1]
  double recall = 0.0;
  double f1 = 0.0;

  // Counts plus percentages rounded to two decimals.
  std::string to_json() const;
  // "P=86.44 R=89.33 F1=87.86 (tp=.. fp=.. fn=..)"
  std::string summary() const;
};

// Metrics from counts; every 0/0 is defined as 0.
EvalReport make_report(std::size_t tp, std::size_t fp, std::size_t fn);

// Harmonic mean with the same zero convention.
double f1_from(double precision, double recall);

// A fraction as a percentage rounded half away from zero to 2 decimals.
double round_percent(double fraction);

// Throws Error(kData) naming the first sentence/token where the two
// corpora's token sequences differ.
EvalReport score(const BioCorpus& pred, const BioCorpus& gold,
                 const std::optional<std::set<std::string>>& target_labels =
                     std::nullopt);

enum class UnmappedPolicy { kDropToOutside, kKeep };

struct LabelMap {
  std::map<std::string, std::string> mapping;
  UnmappedPolicy unmapped = UnmappedPolicy::kDropToOutside;

  // "PER=MONS,ORG=FACTION"
  static LabelMap parse(std::string_view spec,
                        UnmappedPolicy unmapped =
                            UnmappedPolicy::kDropToOutside);
};

UnmappedPolicy parse_unmapped_policy(std::string_view name);

// Replaces tag labels per `map`, keeping B/I prefixes, then repairs the
// result (dropping a B- can leave a dangling I-).
BioCorpus remap_labels(const BioCorpus& corpus, const LabelMap& map);

}  // namespace loretag

#endif  // LORETAG_EVAL_H_
