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

// Config-driven experiment runners behind the command-line subcommands.
// Each runner confines its writes to the output directory it is given.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qcse/corpus.hpp"
#include "qcse/model.hpp"
#include "qcse/train.hpp"

namespace qcse::experiment {

inline constexpr const char* kVersion = "1.0.0";

struct CorpusSource {
  std::optional<std::string> path;  // otherwise synthetic
  corpus::SyntheticSpec synthetic;
  int window = 2;
  bool pad_boundaries = false;
};

struct RunConfig {
  CorpusSource corpus;
  int qubits = 0;  // 0: smallest m that fits the vocabulary (at least 2)
  model::ModelConfig model;
  train::TrainSettings train;
  std::vector<int> baseline_dims;
  bool verbose = false;

  // JSON document; missing keys keep their defaults. Throws kConfiguration.
  static RunConfig from_json(const std::string& text);
  std::string to_json() const;
};

struct PreparedData {
  corpus::Vocabulary vocab;
  std::vector<corpus::TrainPair> pairs;
  std::size_t dropped_empty = 0;
  int qubits = 0;
};

// Loads or generates the corpus, extracts pairs and resolves m. Pairs with
// an empty context are dropped and counted. Throws kCapacity when an
// explicit qubit count cannot hold the vocabulary.
PreparedData prepare(const RunConfig& config);

struct RunSummary {
  std::string label;
  int layers = 0;
  int qubits_or_dim = 0;
  std::size_t trainable_params = 0;
  std::size_t training_words = 0;
  double final_accuracy = 0.0;
  double final_loss = 0.0;
};

// loss.csv, accuracy.csv, params.json, manifest.json.
RunSummary run_train(const RunConfig& config, const std::filesystem::path& out);

// One run_train per encoding under out/<method>/ plus out/sweep.csv.
std::vector<RunSummary> run_method_sweep(const RunConfig& config,
                                         const std::filesystem::path& out);

// One run per depth under out/layers_<M>/, optional CBOW rows for each
// baseline dimension, and out/table.csv + out/table.txt. Returns the
// aligned text table.
std::string run_depth_sweep(const RunConfig& config, int first_layer,
                            int last_layer, const std::filesystem::path& out);

// Trains the quantum model and CBOW (first baseline dimension, default 20)
// on the same split; writes compare.csv, params.json, manifest.json.
std::vector<RunSummary> run_compare_baseline(const RunConfig& config,
                                             const std::filesystem::path& out);

// corpus.txt, vocab.txt and pairs.txt for inspection.
void generate_corpus(const RunConfig& config, const std::filesystem::path& out);

std::string format_table(const std::vector<RunSummary>& rows);

}  // namespace qcse::experiment
