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

// Generators, reference implementations and fixture builders shared by the
// unit tests and the acceptance runner. The reference implementations are
// deliberately naive and must not call into the code they check beyond the
// tokenizer and case folding.

#ifndef LORETAG_TESTS_TESTING_H_
#define LORETAG_TESTS_TESTING_H_

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loretag/assoc.h"
#include "loretag/bio.h"
#include "loretag/gazetteer.h"
#include "loretag/ingest.h"
#include "loretag/tagger.h"

namespace loretag::testing {

using Rng = std::mt19937_64;

// Sentence whose tokens are joined by single spaces, with matching offsets.
Sentence make_sentence(const std::vector<std::string>& tokens,
                       const std::string& owner = "doc");

TaggedSentence make_tagged(const std::vector<std::string>& tokens,
                           const std::vector<std::string>& tags,
                           const std::string& owner = "doc");

// One document per entry; each sentence is a list of "token/TAG" items.
BioCorpus make_corpus(
    const std::vector<std::pair<std::string,
                                std::vector<std::vector<std::string>>>>& docs);

// Plain ordered-acceptance lookup: every entry in gazetteer order, every
// start position left to right, accepted unless it overlaps a span already
// accepted. Word boundaries are taken from tokenizer offsets.
std::vector<EntitySpan> reference_find_spans(const std::string& sentence,
                                             const Gazetteer& gazetteer,
                                             MatchMode mode,
                                             const std::string& label);

// Number of documents whose folded text contains the folded name.
std::size_t reference_document_count(const LoreCorpus& corpus,
                                     const std::string& name);

// Entity key -> owners, from raw substring containment of gazetteer keys in
// each document, minus self pairs.
std::map<std::string, std::set<std::string>> reference_lookup_associations(
    const LoreCorpus& corpus, const Gazetteer& gazetteer);

struct MatcherInstance {
  std::string sentence;
  std::vector<std::string> names;
};

// <=40 tokens, <=50 names of <=4 words, drawn from a small vocabulary so
// that overlaps, nested names and in-word hits are frequent.
MatcherInstance random_matcher_instance(Rng& rng);

// Random well-formed corpus; tokens never contain whitespace and sentences
// are space-joined, so it survives a CoNLL round trip.
BioCorpus random_bio_corpus(Rng& rng, std::size_t max_documents = 8,
                            std::size_t max_sentences = 6);

// Random corpus where every document has at least one sentence.
BioCorpus random_split_corpus(Rng& rng);

// Fresh, empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& name);

// Directory holding the bundled fixture.
std::filesystem::path fixture_dir();

}  // namespace loretag::testing

#endif  // LORETAG_TESTS_TESTING_H_
