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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qcse::corpus {

using Sentence = std::vector<std::string>;

inline constexpr std::string_view kPadToken = "<pad>";

// Lowercases, drops ASCII punctuation and splits on whitespace.
Sentence tokenize(std::string_view line);

// One sentence per non-blank line. Throws kIo when unreadable.
std::vector<Sentence> read_corpus(const std::filesystem::path& path);
void write_corpus(const std::filesystem::path& path,
                  const std::vector<Sentence>& sentences);

class Vocabulary {
 public:
  // Indices follow first appearance. With `with_pad`, index 0 is reserved
  // for kPadToken. Throws kInvalidInput if no sentence has a token.
  static Vocabulary build(const std::vector<Sentence>& sentences,
                          bool with_pad = false);

  int size() const noexcept { return static_cast<int>(words_.size()); }
  bool contains(std::string_view token) const;
  // Throws kInvalidInput for unknown tokens.
  int index_of(std::string_view token) const;
  const std::string& word(int index) const;
  bool has_pad() const noexcept { return has_pad_; }

 private:
  int add(const std::string& token);

  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
  bool has_pad_ = false;
};

struct TrainPair {
  int center = 0;
  std::vector<int> context;

  bool operator==(const TrainPair&) const = default;
};

// One pair per token position with up to `radius` neighbours on each side,
// left to right. Contexts are truncated at sentence edges unless the
// vocabulary carries a pad token, in which case edges are filled with it.
std::vector<TrainPair> extract_pairs(const std::vector<Sentence>& sentences,
                                     const Vocabulary& vocab, int radius);

// Line-delimited "center<TAB>ctx ctx ..." records.
void write_pairs(const std::filesystem::path& path,
                 const std::vector<TrainPair>& pairs);

// Smallest m with 2^m >= vocab_size (at least 1).
int qubits_for_vocab(int vocab_size);

// Big-endian m-bit expansion of `center`: bits[0] is the most significant.
// Throws kCapacity when center >= 2^m.
std::vector<std::uint8_t> target_bits(int center, int num_qubits);

struct SyntheticSpec {
  std::uint64_t seed = 42;
  int num_sentences = 300;
  int vocab_size = 34;
  int sentence_len = 4;
};

// Deterministic Zipf-like corpus that uses exactly `vocab_size` tokens.
// Each next token follows a fixed per-token successor half of the time, so
// contexts carry some signal about their center. Throws kInvalidInput when
// vocab_size < 2 or there are fewer slots than tokens.
std::vector<Sentence> generate_synthetic(const SyntheticSpec& spec);

}  // namespace qcse::corpus
