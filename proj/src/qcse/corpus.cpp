// Copyright 2026 The QCSE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcse/corpus.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qcse/error.hpp"
#include "qcse/random.hpp"

namespace qcse::corpus {

Sentence tokenize(std::string_view line) {
  Sentence out;
  std::string current;
  for (char ch : line) {
    const auto uc = static_cast<unsigned char>(ch);
    if (std::isspace(uc)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else if (!std::ispunct(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<Sentence> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read corpus " + path.string());
  }
  std::vector<Sentence> sentences;
  std::string line;
  while (std::getline(in, line)) {
    Sentence s = tokenize(line);
    if (!s.empty()) sentences.push_back(std::move(s));
  }
  return sentences;
}

void write_corpus(const std::filesystem::path& path,
                  const std::vector<Sentence>& sentences) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& s : sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
}

int Vocabulary::add(const std::string& token) {
  auto [it, inserted] = index_.emplace(token, size());
  if (inserted) words_.push_back(token);
  return it->second;
}

Vocabulary Vocabulary::build(const std::vector<Sentence>& sentences,
                             bool with_pad) {
  Vocabulary v;
  if (with_pad) {
    v.add(std::string(kPadToken));
    v.has_pad_ = true;
  }
  bool any = false;
  for (const auto& s : sentences) {
    for (const auto& t : s) {
      v.add(t);
      any = true;
    }
  }
  if (!any) throw Error(ErrorCode::kInvalidInput, "corpus has no tokens");
  return v;
}

bool Vocabulary::contains(std::string_view token) const {
  return index_.contains(std::string(token));
}

int Vocabulary::index_of(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) {
    throw Error(ErrorCode::kInvalidInput,
                "unknown token '" + std::string(token) + "'");
  }
  return it->second;
}

const std::string& Vocabulary::word(int index) const {
  if (index < 0 || index >= size()) {
    throw Error(ErrorCode::kIndex,
                "vocabulary index " + std::to_string(index) + " out of range");
  }
  return words_[index];
}

std::vector<TrainPair> extract_pairs(const std::vector<Sentence>& sentences,
                                     const Vocabulary& vocab, int radius) {
  if (radius < 1) {
    throw Error(ErrorCode::kConfiguration, "window radius must be >= 1");
  }
  const int pad = vocab.has_pad() ? vocab.index_of(kPadToken) : -1;
  std::vector<TrainPair> pairs;
  for (const auto& s : sentences) {
    std::vector<int> ids;
    ids.reserve(s.size());
    for (const auto& t : s) ids.push_back(vocab.index_of(t));
    const int n = static_cast<int>(ids.size());
    for (int c = 0; c < n; ++c) {
      TrainPair p;
      p.center = ids[c];
      for (int k = c - radius; k <= c + radius; ++k) {
        if (k == c) continue;
        if (k >= 0 && k < n) {
          p.context.push_back(ids[k]);
        } else if (pad >= 0) {
          p.context.push_back(pad);
        }
      }
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

void write_pairs(const std::filesystem::path& path,
                 const std::vector<TrainPair>& pairs) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& p : pairs) {
    out << p.center << '\t';
    for (std::size_t i = 0; i < p.context.size(); ++i) {
      if (i) out << ' ';
      out << p.context[i];
    }
    out << '\n';
  }
}

int qubits_for_vocab(int vocab_size) {
  int m = 1;
  while ((std::int64_t{1} << m) < vocab_size) ++m;
  return m;
}

std::vector<std::uint8_t> target_bits(int center, int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw Error(ErrorCode::kConfiguration, "unsupported qubit count");
  }
  if (center < 0 || center >= (1 << num_qubits)) {
    throw Error(ErrorCode::kCapacity,
                "index " + std::to_string(center) + " does not fit in " +
                    std::to_string(num_qubits) + " qubits");
  }
  std::vector<std::uint8_t> bits(num_qubits);
  for (int k = 0; k < num_qubits; ++k) {
    bits[k] = static_cast<std::uint8_t>((center >> (num_qubits - 1 - k)) & 1);
  }
  return bits;
}

std::vector<Sentence> generate_synthetic(const SyntheticSpec& spec) {
  const int v = spec.vocab_size;
  if (v < 2) {
    throw Error(ErrorCode::kInvalidInput, "synthetic vocabulary needs >= 2");
  }
  if (spec.num_sentences < 1 || spec.sentence_len < 1 ||
      static_cast<std::int64_t>(spec.num_sentences) * spec.sentence_len < v) {
    throw Error(ErrorCode::kInvalidInput,
                "corpus too small to use every synthetic token");
  }
  Rng rng(spec.seed);

  const int width = static_cast<int>(std::to_string(v - 1).size());
  std::vector<std::string> names(v);
  for (int k = 0; k < v; ++k) {
    std::string digits = std::to_string(k);
    names[k] = "w" + std::string(width - digits.size(), '0') + digits;
  }

  std::vector<double> cumulative(v);
  double total = 0.0;
  for (int k = 0; k < v; ++k) {
    total += 1.0 / static_cast<double>(k + 1);
    cumulative[k] = total;
  }
  auto zipf = [&]() {
    const double u = rng.uniform() * total;
    for (int k = 0; k < v; ++k) {
      if (u < cumulative[k]) return k;
    }
    return v - 1;
  };

  std::vector<int> successor(v);
  for (int k = 0; k < v; ++k) successor[k] = static_cast<int>(rng.below(v));

  std::vector<std::vector<int>> ids(spec.num_sentences);
  std::vector<int> counts(v, 0);
  for (auto& s : ids) {
    s.resize(spec.sentence_len);
    for (int t = 0; t < spec.sentence_len; ++t) {
      s[t] = (t > 0 && rng.uniform() < 0.5) ? successor[s[t - 1]] : zipf();
      ++counts[s[t]];
    }
  }

  // Guarantee full coverage by overwriting slots whose token is repeated.
  for (int k = 0; k < v; ++k) {
    while (counts[k] == 0) {
      auto& s = ids[rng.below(ids.size())];
      int& slot = s[rng.below(s.size())];
      if (counts[slot] > 1) {
        --counts[slot];
        slot = k;
        ++counts[k];
      }
    }
  }

  std::vector<Sentence> out;
  out.reserve(ids.size());
  for (const auto& s : ids) {
    Sentence words;
    for (int k : s) words.push_back(names[k]);
    out.push_back(std::move(words));
  }
  return out;
}

}  // namespace qcse::corpus
