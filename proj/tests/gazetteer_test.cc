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

#include "loretag/gazetteer.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "loretag/error.h"
#include "loretag/unicode.h"
#include "testing.h"

namespace loretag {
namespace {

std::vector<std::string> norms(const Gazetteer& g) {
  std::vector<std::string> out;
  for (const auto& e : g.entries()) out.push_back(e.norm);
  return out;
}

// 40 documents; `hits` of them contain "impressive".
LoreCorpus imp_corpus(std::size_t hits) {
  LoreCorpus corpus;
  for (std::size_t i = 0; i < 40; ++i) {
    corpus.documents.push_back(
        {"Monster " + std::to_string(i),
         i < hits ? "An impressive beast." : "A quiet beast."});
  }
  return corpus;
}

TEST(NormalizeName, WhitespaceAndCase) {
  EXPECT_EQ(normalize_name("  Steam   Mephit "), "steam mephit");
  EXPECT_EQ(normalize_name("imp"), "imp");
  EXPECT_EQ(normalize_name("Ettin"), normalize_name("ettin"));
  EXPECT_EQ(normalize_name(" Ettin ", false), "Ettin");
  EXPECT_EQ(normalize_name(" \t "), "");
}

TEST(MergeNameLists, CaseInsensitiveDedupe) {
  EXPECT_EQ(merge_name_lists(std::vector<std::string>{"goblin", "ettin"},
                             std::vector<std::string>{"Ettin", "archdevil"}),
            (std::vector<std::string>{"goblin", "ettin", "archdevil"}));
  EXPECT_EQ(merge_name_lists({}, std::vector<std::string>{"imp"}),
            std::vector<std::string>{"imp"});
  EXPECT_EQ(merge_name_lists(std::vector<std::string>{"Ettin"},
                             std::vector<std::string>{"ettin"}, false),
            (std::vector<std::string>{"Ettin", "ettin"}));
}

TEST(MergeNameLists, Idempotent) {
  const std::vector<std::string> list = {"Goblin", "goblin", "Steam  Mephit",
                                         "steam mephit", "imp"};
  const auto once = merge_name_lists(list, {});
  EXPECT_EQ(merge_name_lists(once, once), once);
  EXPECT_EQ(once, (std::vector<std::string>{"Goblin", "Steam  Mephit", "imp"}));
}

TEST(IgnoreList, StrictlyMoreThanThreshold) {
  const std::vector<std::string> names = {"imp", "beast"};
  GazetteerConfig config;
  config.ignore_threshold = 30;
  EXPECT_EQ(compute_ignore_list(imp_corpus(31), names, config),
            (std::set<std::string>{"beast", "imp"}));
  EXPECT_EQ(compute_ignore_list(imp_corpus(30), names, config),
            std::set<std::string>{"beast"});
}

TEST(IgnoreList, ThresholdZeroIgnoresEveryOccurringName) {
  GazetteerConfig config;
  config.ignore_threshold = 0;
  EXPECT_EQ(compute_ignore_list(imp_corpus(1),
                                std::vector<std::string>{"imp", "wyvern"},
                                config),
            std::set<std::string>{"imp"});
}

TEST(IgnoreList, CountsDocumentsNotOccurrences) {
  LoreCorpus corpus;
  corpus.documents.push_back({"A", "imp imp imp imp"});
  corpus.documents.push_back({"B", "nothing"});
  const auto freq =
      document_frequencies(corpus, std::vector<std::string>{"IMP"}, true);
  EXPECT_EQ(freq.at("imp"), 1u);
}

TEST(IgnoreList, EmptyNamesIsAnError) {
  try {
    compute_ignore_list(imp_corpus(3), std::vector<std::string>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
  }
}

TEST(IgnoreList, FrequenciesMatchBruteForce) {
  testing::Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    const auto inst = testing::random_matcher_instance(rng);
    LoreCorpus corpus;
    for (int d = 0; d < 5; ++d) {
      corpus.documents.push_back(
          {"d" + std::to_string(d),
           testing::random_matcher_instance(rng).sentence});
    }
    if (inst.names.empty()) continue;
    const auto freq = document_frequencies(corpus, inst.names);
    for (const auto& name : inst.names) {
      const std::string key = normalize_name(name);
      EXPECT_EQ(freq.at(key), testing::reference_document_count(corpus, key))
          << key;
    }
  }
}

TEST(IgnoreList, MonotoneInThreshold) {
  testing::Rng rng(9);
  LoreCorpus corpus;
  for (int d = 0; d < 40; ++d) {
    corpus.documents.push_back(
        {"d" + std::to_string(d), testing::random_matcher_instance(rng).sentence});
  }
  const auto names = testing::random_matcher_instance(rng).names;
  std::set<std::string> previous;
  for (std::size_t t = 0; t <= 40; ++t) {
    GazetteerConfig config;
    config.ignore_threshold = t;
    const auto current = compute_ignore_list(corpus, names, config);
    if (t > 0) {
      EXPECT_TRUE(std::includes(previous.begin(), previous.end(),
                                current.begin(), current.end()));
    }
    previous = current;
  }
}

TEST(BuildGazetteer, LongestFirst) {
  const auto g = build_gazetteer(
      std::vector<std::string>{"mephit", "steam mephit"}, {});
  EXPECT_EQ(norms(g), (std::vector<std::string>{"steam mephit", "mephit"}));
}

TEST(BuildGazetteer, IgnoreApplied) {
  const auto g = build_gazetteer(std::vector<std::string>{"ape", "imp"}, {"imp"});
  EXPECT_EQ(norms(g), std::vector<std::string>{"ape"});
  EXPECT_EQ(g.ignored(), std::set<std::string>{"imp"});
}

TEST(BuildGazetteer, LexicographicTieBreak) {
  const auto g = build_gazetteer(std::vector<std::string>{"dog", "cat"}, {});
  EXPECT_EQ(norms(g), (std::vector<std::string>{"cat", "dog"}));
}

TEST(BuildGazetteer, FirstSpellingWinsAndBlanksDropped) {
  const auto g = build_gazetteer(
      std::vector<std::string>{"Steam Mephit", "steam  mephit", "  "}, {});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.entries()[0].surface, "Steam Mephit");
  EXPECT_EQ(g.entries()[0].norm, "steam mephit");
}

TEST(BuildGazetteer, OrderingInvariant) {
  testing::Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    const auto inst = testing::random_matcher_instance(rng);
    std::set<std::string> ignore;
    for (std::size_t i = 0; i < inst.names.size(); i += 3) {
      ignore.insert(normalize_name(inst.names[i]));
    }
    const auto g = build_gazetteer(inst.names, ignore);
    const auto& e = g.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      EXPECT_FALSE(e[i].norm.empty());
      EXPECT_FALSE(ignore.contains(e[i].norm));
      if (i + 1 < e.size()) {
        const auto a = unicode::decode_utf8(e[i].norm).size();
        const auto b = unicode::decode_utf8(e[i + 1].norm).size();
        EXPECT_TRUE(a > b || (a == b && e[i].norm < e[i + 1].norm));
      }
    }
  }
}

TEST(GazetteerFiles, IgnoreListRoundTrip) {
  const auto dir = testing::temp_dir("gaz");
  const std::set<std::string> ignore = {"imp", "steam mephit"};
  write_ignore_list(dir / "ignore.txt", ignore);
  EXPECT_EQ(load_ignore_list(dir / "ignore.txt"), ignore);
  const auto g =
      build_gazetteer(std::vector<std::string>{"Imp", "Steam Mephit"}, {});
  write_gazetteer(dir / "gaz.txt", g);
  EXPECT_EQ(load_name_list(dir / "gaz.txt"),
            (std::vector<std::string>{"Steam Mephit", "Imp"}));
}

}  // namespace
}  // namespace loretag
