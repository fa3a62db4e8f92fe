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

#include "loretag/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "loretag/error.h"
#include "loretag/unicode.h"

namespace loretag {
namespace {

BioTag parse_or_throw(const std::string& tag) {
  auto parsed = parse_tag(tag);
  if (!parsed) throw DataError("invalid BIO tag '" + tag + "'");
  return *std::move(parsed);
}

std::string format_percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", round_percent(fraction));
  return buf;
}

}  // namespace

std::size_t repair_bio(std::vector<std::string>& tags) {
  std::size_t repairs = 0;
  BioTag previous;
  for (auto& tag : tags) {
    BioTag current = parse_or_throw(tag);
    if (current.prefix == BioTag::Prefix::kInside &&
        (previous.prefix == BioTag::Prefix::kOutside ||
         previous.label != current.label)) {
      current.prefix = BioTag::Prefix::kBegin;
      tag = current.str();
      ++repairs;
    }
    previous = std::move(current);
  }
  return repairs;
}

DecodedSpans extract_spans_from_bio(std::span<const std::string> tags) {
  std::vector<std::string> repaired(tags.begin(), tags.end());
  DecodedSpans decoded;
  decoded.repairs = repair_bio(repaired);

  std::optional<TokenSpan> open;
  for (std::size_t i = 0; i < repaired.size(); ++i) {
    const BioTag tag = parse_or_throw(repaired[i]);
    if (tag.prefix == BioTag::Prefix::kInside) {
      open->token_end = i + 1;  // repair guarantees an open span
      continue;
    }
    if (open) decoded.spans.push_back(*std::move(open));
    open.reset();
    if (tag.prefix == BioTag::Prefix::kBegin) {
      open = TokenSpan{i, i + 1, tag.label};
    }
  }
  if (open) decoded.spans.push_back(*std::move(open));
  return decoded;
}

std::set<SpanKey> extract_span_keys(
    const BioCorpus& corpus, const std::optional<std::set<std::string>>& labels) {
  std::set<SpanKey> keys;
  std::size_t index = 0;
  for (const auto& doc : corpus.documents) {
    for (const auto& sentence : doc.sentences) {
      for (auto& span : extract_spans_from_bio(sentence.tags).spans) {
        if (labels && !labels->contains(span.label)) continue;
        keys.insert({index, span.token_start, span.token_end,
                     std::move(span.label)});
      }
      ++index;
    }
  }
  return keys;
}

double round_percent(double fraction) {
  return std::round(fraction * 10000.0) / 100.0;
}

double f1_from(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

EvalReport make_report(std::size_t tp, std::size_t fp, std::size_t fn) {
  EvalReport report;
  report.tp = tp;
  report.fp = fp;
  report.fn = fn;
  report.precision =
      tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  report.recall =
      tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  report.f1 = f1_from(report.precision, report.recall);
  return report;
}

std::string EvalReport::to_json() const {
  // Written by hand so percentages keep exactly two decimals ("50.00").
  return "{\n  \"tp\": " + std::to_string(tp) + ",\n  \"fp\": " +
         std::to_string(fp) + ",\n  \"fn\": " + std::to_string(fn) +
         ",\n  \"precision\": " + format_percent(precision) +
         ",\n  \"recall\": " + format_percent(recall) +
         ",\n  \"f1\": " + format_percent(f1) + "\n}\n";
}

std::string EvalReport::summary() const {
  return "P=" + format_percent(precision) + " R=" + format_percent(recall) +
         " F1=" + format_percent(f1) + " (tp=" + std::to_string(tp) +
         " fp=" + std::to_string(fp) + " fn=" + std::to_string(fn) + ")";
}

EvalReport score(const BioCorpus& pred, const BioCorpus& gold,
                 const std::optional<std::set<std::string>>& target_labels) {
  // Flatten to check token alignment sentence by sentence.
  std::vector<const TaggedSentence*> p;
  std::vector<const TaggedSentence*> g;
  for (const auto& doc : pred.documents) {
    for (const auto& s : doc.sentences) p.push_back(&s);
  }
  for (const auto& doc : gold.documents) {
    for (const auto& s : doc.sentences) g.push_back(&s);
  }
  const std::size_t common = std::min(p.size(), g.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& pt = p[i]->sentence.tokens;
    const auto& gt = g[i]->sentence.tokens;
    const std::size_t n = std::min(pt.size(), gt.size());
    for (std::size_t t = 0; t < n; ++t) {
      if (pt[t].text != gt[t].text) {
        throw DataError("token mismatch in sentence " + std::to_string(i + 1) +
                        " at token " + std::to_string(t + 1) + ": predicted '" +
                        pt[t].text + "', gold '" + gt[t].text + "'");
      }
    }
    if (pt.size() != gt.size()) {
      throw DataError("token count mismatch in sentence " +
                      std::to_string(i + 1) + ": predicted " +
                      std::to_string(pt.size()) + ", gold " +
                      std::to_string(gt.size()));
    }
  }
  if (p.size() != g.size()) {
    throw DataError("sentence count mismatch: predicted " +
                    std::to_string(p.size()) + ", gold " +
                    std::to_string(g.size()) + " (first unmatched sentence " +
                    std::to_string(common + 1) + ")");
  }

  const auto pred_keys = extract_span_keys(pred, target_labels);
  const auto gold_keys = extract_span_keys(gold, target_labels);
  std::size_t tp = 0;
  for (const auto& key : pred_keys) tp += gold_keys.contains(key) ? 1 : 0;
  return make_report(tp, pred_keys.size() - tp, gold_keys.size() - tp);
}

LabelMap LabelMap::parse(std::string_view spec, UnmappedPolicy unmapped) {
  LabelMap map;
  map.unmapped = unmapped;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = unicode::trim(spec.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("label mapping '" + std::string(item) +
                       "' is not of the form FROM=TO");
    }
    std::string from(unicode::trim(item.substr(0, eq)));
    std::string to(unicode::trim(item.substr(eq + 1)));
    if (!is_valid_label(from) || !is_valid_label(to)) {
      throw UsageError("invalid label in mapping '" + std::string(item) + "'");
    }
    if (map.mapping.contains(from)) {
      throw UsageError("label '" + from + "' is mapped more than once");
    }
    map.mapping.emplace(std::move(from), std::move(to));
  }
  return map;
}

UnmappedPolicy parse_unmapped_policy(std::string_view name) {
  if (name == "drop" || name == "drop_to_O" || name == "O") {
    return UnmappedPolicy::kDropToOutside;
  }
  if (name == "keep") return UnmappedPolicy::kKeep;
  throw UsageError("unknown unmapped-label policy '" + std::string(name) +
                   "' (expected drop or keep)");
}

BioCorpus remap_labels(const BioCorpus& corpus, const LabelMap& map) {
  BioCorpus out = corpus;
  for (auto& doc : out.documents) {
    for (auto& sentence : doc.sentences) {
      for (auto& tag : sentence.tags) {
        BioTag parsed = parse_or_throw(tag);
        if (parsed.prefix == BioTag::Prefix::kOutside) continue;
        auto it = map.mapping.find(parsed.label);
        if (it != map.mapping.end()) {
          parsed.label = it->second;
        } else if (map.unmapped == UnmappedPolicy::kDropToOutside) {
          parsed = BioTag{};
        }
        tag = parsed.str();
      }
      repair_bio(sentence.tags);
    }
  }
  return out;
}

}  // namespace loretag
