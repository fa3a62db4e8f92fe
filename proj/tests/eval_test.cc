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

#include <cmath>

#include <gtest/gtest.h>

#include "loretag/error.h"
#include "testing.h"

namespace loretag {
namespace {

using Strings = std::vector<std::string>;

// Corpus with one sentence of `n` tokens and MONS spans at the given
// [start, end) token ranges.
BioCorpus with_spans(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& spans) {
  Strings tokens;
  Strings tags(n, "O");
  for (std::size_t i = 0; i < n; ++i) tokens.push_back("t" + std::to_string(i));
  for (const auto& [s, e] : spans) {
    tags[s] = "B-MONS";
    for (std::size_t i = s + 1; i < e; ++i) tags[i] = "I-MONS";
  }
  BioCorpus corpus;
  corpus.documents.push_back({"doc", {testing::make_tagged(tokens, tags)}});
  return corpus;
}

TEST(ExtractSpans, Basic) {
  const auto d = extract_spans_from_bio(Strings{"O", "B-MONS", "I-MONS", "O"});
  ASSERT_EQ(d.spans.size(), 1u);
  EXPECT_EQ(d.spans[0], (TokenSpan{1, 3, "MONS"}));
  EXPECT_EQ(d.repairs, 0u);
}

TEST(ExtractSpans, RepairsLeadingInside) {
  const auto d = extract_spans_from_bio(Strings{"I-MONS", "O"});
  ASSERT_EQ(d.spans.size(), 1u);
  EXPECT_EQ(d.spans[0], (TokenSpan{0, 1, "MONS"}));
  EXPECT_EQ(d.repairs, 1u);
}

TEST(ExtractSpans, AdjacentBegins) {
  const auto d = extract_spans_from_bio(Strings{"B-MONS", "B-MONS"});
  EXPECT_EQ(d.spans, (std::vector<TokenSpan>{{0, 1, "MONS"}, {1, 2, "MONS"}}));
}

TEST(ExtractSpans, LabelChangeRepairs) {
  Strings tags = {"B-PER", "I-MONS", "I-MONS", "O", "I-PER"};
  EXPECT_EQ(repair_bio(tags), 2u);
  EXPECT_EQ(tags, (Strings{"B-PER", "B-MONS", "I-MONS", "O", "B-PER"}));
  EXPECT_THROW(extract_spans_from_bio(Strings{"X"}), Error);
}

TEST(Score, Identity) {
  const auto c = with_spans(6, {{0, 2}, {4, 5}});
  const auto r = score(c, c);
  EXPECT_EQ(r.tp, 2u);
  EXPECT_EQ(r.fp, 0u);
  EXPECT_EQ(r.fn, 0u);
  EXPECT_EQ(r.summary(), "P=100.00 R=100.00 F1=100.00 (tp=2 fp=0 fn=0)");
}

TEST(Score, HalfRight) {
  // pred {A, B}, gold {A, C}
  const auto r = score(with_spans(6, {{0, 1}, {2, 3}}), with_spans(6, {{0, 1}, {4, 6}}));
  EXPECT_EQ(r.tp, 1u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_EQ(r.fn, 1u);
  EXPECT_EQ(r.summary(), "P=50.00 R=50.00 F1=50.00 (tp=1 fp=1 fn=1)");
  EXPECT_EQ(r.to_json(),
            "{\n  \"tp\": 1,\n  \"fp\": 1,\n  \"fn\": 1,\n"
            "  \"precision\": 50.00,\n  \"recall\": 50.00,\n"
            "  \"f1\": 50.00\n}\n");
}

TEST(Score, PartialOverlapEarnsNothing) {
  const auto r = score(with_spans(4, {{0, 2}}), with_spans(4, {{0, 3}}));
  EXPECT_EQ(r.tp, 0u);
  EXPECT_EQ(r.f1, 0.0);
}

TEST(Score, EmptyPredictionsAndAllOutside) {
  const auto none = with_spans(5, {});
  const auto r = score(none, with_spans(5, {{1, 2}}));
  EXPECT_EQ(r.summary(), "P=0.00 R=0.00 F1=0.00 (tp=0 fp=0 fn=1)");
  const auto o = score(none, none);
  EXPECT_EQ(o.tp + o.fp + o.fn, 0u);
  EXPECT_EQ(o.f1, 0.0);
}

TEST(Score, TokenMismatchNamesSentence) {
  auto pred = testing::make_corpus({{"d", {{"a/O"}, {"b/O", "c/O"}}}});
  auto gold = testing::make_corpus({{"d", {{"a/O"}, {"b/O", "x/O"}}}});
  try {
    score(pred, gold);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    EXPECT_NE(std::string(e.what()).find("sentence 2"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(score(pred, testing::make_corpus({{"d", {{"a/O"}}}})), Error);
}

TEST(Score, LabelFilter) {
  const auto pred = testing::make_corpus({{"d", {{"a/B-MONS", "b/B-PER"}}}});
  const auto gold = testing::make_corpus({{"d", {{"a/B-MONS", "b/O"}}}});
  EXPECT_EQ(score(pred, gold).fp, 1u);
  EXPECT_EQ(score(pred, gold, std::set<std::string>{"MONS"}).fp, 0u);
}

TEST(Score, PropertiesOnRandomCorpora) {
  testing::Rng rng(8);
  for (int round = 0; round < 300; ++round) {
    const auto a = testing::random_bio_corpus(rng, 4, 4);
    // Same tokens, independently drawn tags.
    BioCorpus b = a;
    for (auto& doc : b.documents) {
      for (auto& s : doc.sentences) {
        for (auto& tag : s.tags) tag = (rng() % 3 == 0) ? "B-MONS" : "O";
      }
    }
    const auto ab = score(a, b);
    const auto ba = score(b, a);
    EXPECT_EQ(ab.fp, ba.fn);
    EXPECT_EQ(ab.fn, ba.fp);
    EXPECT_EQ(ab.tp, ba.tp);
    EXPECT_EQ(ab.tp + ab.fp, extract_span_keys(a).size());
    EXPECT_EQ(ab.tp + ab.fn, extract_span_keys(b).size());
    for (double m : {ab.precision, ab.recall, ab.f1}) {
      EXPECT_GE(m, 0.0);
      EXPECT_LE(m, 1.0);
    }
    const auto self = score(a, a);
    EXPECT_EQ(self.fp + self.fn, 0u);
    if (self.tp > 0) EXPECT_EQ(self.f1, 1.0);
  }
}

TEST(Metrics, HarmonicMean) {
  EXPECT_NEAR(f1_from(0.8644, 0.8933) * 100, 87.86, 0.02);
  EXPECT_NEAR(f1_from(0.9667, 0.9226) * 100, 94.42, 0.02);
  EXPECT_EQ(f1_from(0, 0), 0.0);
  EXPECT_EQ(round_percent(0.5), 50.0);
  EXPECT_EQ(round_percent(2.0 / 3.0), 66.67);
  const auto r = make_report(0, 0, 0);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
}

TEST(Remap, PersonToMonster) {
  const auto c = testing::make_corpus({{"d", {{"a/B-PER", "b/I-PER", "c/B-LOC"}}}});
  const auto out = remap_labels(c, LabelMap::parse("PER=MONS"));
  EXPECT_EQ(out.documents[0].sentences[0].tags,
            (Strings{"B-MONS", "I-MONS", "O"}));
}

TEST(Remap, KeepAndIdentity) {
  const auto c = testing::make_corpus({{"d", {{"a/B-PER", "b/B-LOC"}}}});
  EXPECT_EQ(remap_labels(c, LabelMap::parse("PER=PER", UnmappedPolicy::kKeep)), c);
  EXPECT_EQ(remap_labels(c, LabelMap::parse("PER=MONS", UnmappedPolicy::kKeep))
                .documents[0]
                .sentences[0]
                .tags,
            (Strings{"B-MONS", "B-LOC"}));
}

TEST(Remap, AdjacentSpansStaySeparate) {
  const auto c = testing::make_corpus({{"d", {{"a/B-PER", "b/B-LOC", "c/I-LOC"}}}});
  const auto out = remap_labels(c, LabelMap::parse("PER=MONS,LOC=MONS"));
  EXPECT_EQ(out.documents[0].sentences[0].tags,
            (Strings{"B-MONS", "B-MONS", "I-MONS"}));
}

TEST(Remap, ParseErrors) {
  EXPECT_THROW(LabelMap::parse("PER"), Error);
  EXPECT_THROW(LabelMap::parse("=MONS"), Error);
  EXPECT_THROW(LabelMap::parse("PER=MONS,PER=LOC"), Error);
  EXPECT_EQ(parse_unmapped_policy("keep"), UnmappedPolicy::kKeep);
  EXPECT_EQ(parse_unmapped_policy("drop"), UnmappedPolicy::kDropToOutside);
  EXPECT_THROW(parse_unmapped_policy("maybe"), Error);
}

TEST(Remap, CommutesWithSpanExtraction) {
  testing::Rng rng(31);
  const LabelMap map = LabelMap::parse("PER=MONS,LOC=PLACE", UnmappedPolicy::kKeep);
  for (int round = 0; round < 300; ++round) {
    const auto c = testing::random_bio_corpus(rng, 3, 3);
    std::set<SpanKey> relabeled;
    for (auto key : extract_span_keys(c)) {
      const auto it = map.mapping.find(key.label);
      if (it != map.mapping.end()) key.label = it->second;
      relabeled.insert(key);
    }
    EXPECT_EQ(extract_span_keys(remap_labels(c, map)), relabeled);
  }
}

}  // namespace
}  // namespace loretag
