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

#include "loretag/corpus.h"

#include <cmath>
#include <numeric>
#include <random>

#include "json.hpp"
#include "loretag/error.h"
#include "loretag/eval.h"
#include "loretag/io.h"
#include "loretag/unicode.h"

namespace loretag {

namespace {

constexpr std::string_view kDocMarker = "# doc: ";
constexpr const char* kSplitNames[3] = {"train", "dev", "test"};

double parse_fraction(std::string_view item) {
  const std::string text(unicode::trim(item));
  try {
    std::size_t used = 0;
    const std::size_t slash = text.find('/');
    double value = 0.0;
    if (slash == std::string::npos) {
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string num = text.substr(0, slash);
      const std::string den = text.substr(slash + 1);
      const double n = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(text);
      const double d = std::stod(den, &used);
      if (used != den.size() || d == 0.0) throw std::invalid_argument(text);
      value = n / d;
    }
    return value;
  } catch (const std::logic_error&) {
    throw UsageError("invalid split ratio '" + text + "'");
  }
}

// Uniform integer in [0, bound) by rejection, so the sequence depends only
// on the mt19937_64 output and not on the standard library in use.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool contains_space(std::string_view text) {
  for (char32_t cp : unicode::decode_utf8(text)) {
    if (unicode::is_space(cp)) return true;
  }
  return false;
}

// Splits a line on runs of spaces and tabs.
std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

void SplitSpec::validate() const {
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw UsageError("split ratios must be non-negative");
    }
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw UsageError("split ratios must sum to 1 (got " +
                     std::to_string(sum) + ")");
  }
}

std::array<double, 3> SplitSpec::parse_ratios(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    values.push_back(parse_fraction(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (values.size() != 3) {
    throw UsageError("expected three split ratios (train,dev,test), got '" +
                     std::string(text) + "'");
  }
  return {values[0], values[1], values[2]};
}

std::vector<std::size_t> document_order(std::size_t count,
                                        std::optional<std::uint64_t> seed) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!seed || count < 2) return order;
  std::mt19937_64 rng(*seed);
  for (std::size_t i = count - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

SplitResult split_corpus(const BioCorpus& corpus, const SplitSpec& spec) {
  spec.validate();
  if (corpus.empty()) throw DataError("cannot split an empty corpus");

  const auto total = static_cast<double>(corpus.sentence_count());
  const std::array<double, 3> cumulative_quota{
      spec.ratios[0] * total, (spec.ratios[0] + spec.ratios[1]) * total, total};

  SplitResult result;
  std::array<BioCorpus*, 3> splits{&result.train, &result.dev, &result.test};
  std::size_t assigned = 0;  // sentences placed so far, across all splits
  std::size_t current = 0;   // splits fill strictly in order
  for (std::size_t index : document_order(corpus.documents.size(),
                                          spec.shuffle_seed)) {
    const BioDocument& doc = corpus.documents[index];
    while (current < 2 &&
           !(static_cast<double>(assigned) < cumulative_quota[current])) {
      ++current;
    }
    splits[current]->documents.push_back(doc);
    assigned += doc.sentences.size();
  }

  for (std::size_t k = 0; k < 3; ++k) {
    if (splits[k]->sentence_count() == 0) {
      result.warnings.push_back(std::string(kSplitNames[k]) +
                                " split has no sentences");
    }
  }
  return result;
}

std::string to_conll(const BioCorpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.documents) {
    const std::string_view owner = unicode::trim(doc.owner_name);
    if (owner.empty() || owner.size() != doc.owner_name.size() ||
        doc.owner_name.find('\n') != std::string::npos) {
      throw DataError("document owner '" + doc.owner_name +
                      "' cannot be written (empty, padded or multi-line)");
    }
    out += kDocMarker;
    out += doc.owner_name;
    out += '\n';
    for (const auto& tagged : doc.sentences) {
      const auto& tokens = tagged.sentence.tokens;
      if (tokens.size() != tagged.tags.size()) {
        throw DataError("sentence has mismatched token and tag counts: '" +
                        tagged.sentence.text + "'");
      }
      if (tokens.empty()) {
        throw DataError("sentence without tokens in document '" +
                        doc.owner_name + "'");
      }
      if (!is_well_formed(tagged.tags)) {
        throw DataError("malformed BIO tags in sentence '" +
                        tagged.sentence.text + "'");
      }
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].text.empty() || contains_space(tokens[i].text)) {
          throw DataError("token '" + tokens[i].text +
                          "' is empty or contains whitespace");
        }
        out += tokens[i].text;
        out += ' ';
        out += tagged.tags[i];
        out += '\n';
      }
      out += '\n';
    }
  }
  return out;
}

void write_conll(const BioCorpus& corpus, const std::filesystem::path& path) {
  write_file_atomic(path, to_conll(corpus));
}

ConllParseResult parse_conll(std::string_view text,
                             std::string_view default_owner) {
  if (!unicode::is_valid_utf8(text)) {
    throw DataError("CoNLL input is not valid UTF-8");
  }
  ConllParseResult result;
  BioCorpus& corpus = result.corpus;
  TaggedSentence pending;

  auto current_doc = [&]() -> BioDocument& {
    if (corpus.documents.empty()) {
      corpus.documents.push_back({std::string(default_owner), {}});
    }
    return corpus.documents.back();
  };
  auto flush = [&] {
    if (pending.sentence.tokens.empty()) return;
    result.repairs += repair_bio(pending.tags);
    BioDocument& doc = current_doc();
    pending.sentence.doc_owner = doc.owner_name;
    doc.sentences.push_back(std::move(pending));
    pending = TaggedSentence{};
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.starts_with(kDocMarker)) {
      flush();
      std::string owner(unicode::trim(line.substr(kDocMarker.size())));
      if (owner.empty()) {
        throw DataError("line " + std::to_string(line_no) +
                        ": empty document name");
      }
      corpus.documents.push_back({std::move(owner), {}});
      continue;
    }
    const auto fields = fields_of(line);
    if (fields.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#' && fields.size() != 2) continue;  // comment
    if (fields.size() != 2) {
      throw DataError("line " + std::to_string(line_no) + ": expected 2 fields "
                      "(token tag), found " + std::to_string(fields.size()));
    }
    if (contains_space(fields[0])) {
      throw DataError("line " + std::to_string(line_no) +
                      ": token contains whitespace");
    }
    if (!parse_tag(fields[1])) {
      throw DataError("line " + std::to_string(line_no) + ": invalid tag '" +
                      std::string(fields[1]) + "'");
    }
    auto& sentence = pending.sentence;
    const std::size_t start =
        sentence.tokens.empty() ? 0 : sentence.tokens.back().end + 1;
    if (!sentence.tokens.empty()) sentence.text += ' ';
    sentence.text += fields[0];
    const std::size_t length = unicode::decode_utf8(fields[0]).size();
    sentence.tokens.push_back({std::string(fields[0]), start, start + length});
    pending.tags.emplace_back(fields[1]);
  }
  flush();
  return result;
}

ConllParseResult read_conll(const std::filesystem::path& path) {
  try {
    return parse_conll(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kIo) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& other) {
  n_documents += other.n_documents;
  n_sentences += other.n_sentences;
  n_tokens += other.n_tokens;
  n_spans += other.n_spans;
  for (const auto& [label, count] : other.spans_per_label) {
    spans_per_label[label] += count;
  }
  return *this;
}

std::string CorpusStats::to_json() const {
  nlohmann::ordered_json j;
  j["n_documents"] = n_documents;
  j["n_sentences"] = n_sentences;
  j["n_tokens"] = n_tokens;
  j["n_spans"] = n_spans;
  j["spans_per_label"] = nlohmann::ordered_json::object();
  for (const auto& [label, count] : spans_per_label) {
    j["spans_per_label"][label] = count;
  }
  return j.dump(2) + "\n";
}

CorpusStats corpus_stats(const BioCorpus& corpus) {
  CorpusStats stats;
  stats.n_documents = corpus.documents.size();
  for (const auto& doc : corpus.documents) {
    stats.n_sentences += doc.sentences.size();
    for (const auto& sentence : doc.sentences) {
      stats.n_tokens += sentence.sentence.tokens.size();
      for (const auto& span : extract_spans_from_bio(sentence.tags).spans) {
        ++stats.n_spans;
        ++stats.spans_per_label[span.label];
      }
    }
  }
  return stats;
}

}  // namespace loretag
