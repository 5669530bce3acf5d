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

// Per-qubit binary cross-entropy training of the ansatz angles.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qcse/corpus.hpp"
#include "qcse/model.hpp"
#include "qcse/optimizer.hpp"
#include "qcse/qsim.hpp"

namespace qcse::train {

inline constexpr double kProbClamp = 1e-9;

enum class GradMode { kFiniteDifference, kParameterShift, kAdjoint };

std::string_view grad_mode_name(GradMode mode);
std::optional<GradMode> parse_grad_mode(std::string_view name);

struct TrainSettings {
  int epochs = 50;
  double learning_rate = 0.05;
  std::uint64_t seed = 42;
  GradMode grad_mode = GradMode::kAdjoint;
  double fd_epsilon = 1e-4;
  int hamming_max = 1;
  double train_fraction = 0.8;
  // Pairs per optimizer step; 0 means the whole training split.
  int batch_size = 0;
  // 0 lets QCSE_THREADS / hardware concurrency decide.
  int threads = 0;

  void validate() const;
};

struct TrainRecord {
  int epoch = 0;
  double mean_loss = 0.0;
  double accuracy = 0.0;        // held-out split
  double train_accuracy = 0.0;  // training split
};

// sum_q -[b_q ln p_q + (1 - b_q) ln(1 - p_q)], p clamped to [1e-9, 1 - 1e-9].
// Throws kShape on length mismatch.
double loss(std::span<const double> probs, std::span<const std::uint8_t> bits);

// dL/dp_q; zero where the clamp is active.
std::vector<double> loss_grad_probs(std::span<const double> probs,
                                    std::span<const std::uint8_t> bits);

// Thresholds p >= 0.5 to 1 and compares bitwise.
int hamming_distance(std::span<const double> probs,
                     std::span<const std::uint8_t> bits);

// A pair with its encoded state cached; encoding does not depend on the
// trainable angles.
struct Sample {
  qsim::StateVector encoded;
  std::vector<std::uint8_t> bits;
};

// Throws kInvalidContext for an empty context, kCapacity when the center
// does not fit in m qubits.
Sample make_sample(const corpus::TrainPair& pair, int vocab_size,
                   const model::ModelConfig& cfg);
std::vector<Sample> make_samples(std::span<const corpus::TrainPair> pairs,
                                 int vocab_size, const model::ModelConfig& cfg,
                                 int threads = 1);

struct LossGradient {
  double loss = 0.0;
  std::vector<double> grad;
};

LossGradient loss_and_gradient(const Sample& sample,
                               const model::AnsatzParams& params,
                               GradMode mode, double fd_epsilon = 1e-4);

LossGradient gradient(const corpus::TrainPair& pair, int vocab_size,
                      const model::AnsatzParams& params,
                      const model::ModelConfig& cfg,
                      const TrainSettings& settings);

std::vector<double> predict(const Sample& sample,
                            const model::AnsatzParams& params);

double sample_loss(const Sample& sample, const model::AnsatzParams& params);

// Fraction of samples whose thresholded prediction is within `hamming_max`
// bits of the target.
double accuracy(std::span<const Sample> samples,
                const model::AnsatzParams& params, int hamming_max,
                int threads = 1);

class Trainer {
 public:
  Trainer(model::AnsatzParams initial, const TrainSettings& settings);

  // One shuffled pass over `samples`, one update per batch; returns the mean
  // of the per-sample losses seen before each update.
  double train_epoch(std::span<const Sample> samples);

  const model::AnsatzParams& params() const noexcept { return params_; }

 private:
  model::AnsatzParams params_;
  TrainSettings settings_;
  Adam adam_;
  Rng order_rng_;
  int threads_;
};

struct Split {
  std::vector<corpus::TrainPair> train;
  std::vector<corpus::TrainPair> test;
};

// Seeded shuffle then cut at round(fraction * n), keeping at least one
// training pair.
Split split_pairs(std::span<const corpus::TrainPair> pairs, double fraction,
                  std::uint64_t seed);

struct ExperimentResult {
  std::vector<TrainRecord> records;
  model::AnsatzParams params;
  std::size_t train_pairs = 0;
  std::size_t test_pairs = 0;
};

using EpochCallback = std::function<void(const TrainRecord&)>;

// Splits, initializes angles from the seed and trains for settings.epochs.
// When the held-out split is empty, accuracy is measured on training pairs.
// Throws kCapacity if the vocabulary does not fit in m qubits.
ExperimentResult run_experiment(std::span<const corpus::TrainPair> pairs,
                                int vocab_size, const model::ModelConfig& cfg,
                                const TrainSettings& settings,
                                const EpochCallback& on_epoch = {});

}  // namespace qcse::train
