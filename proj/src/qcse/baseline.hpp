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

// Classical CBOW baseline with a single tied |V| x d embedding matrix: the
// context average is scored against every row and softmax-normalized.

#include <span>
#include <vector>

#include "qcse/corpus.hpp"
#include "qcse/random.hpp"
#include "qcse/train.hpp"

namespace qcse::baseline {

class CbowModel {
 public:
  CbowModel(int vocab_size, int dim);
  static CbowModel random(int vocab_size, int dim, Rng& rng);

  int vocab_size() const noexcept { return vocab_size_; }
  int dim() const noexcept { return dim_; }
  std::size_t parameter_count() const noexcept { return weights_.size(); }

  std::span<const double> row(int word) const;
  std::span<double> weights() noexcept { return weights_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  int vocab_size_;
  int dim_;
  std::vector<double> weights_;
};

// Throws kInvalidInput for an empty context and kIndex for an unknown word.
std::vector<double> cbow_forward(std::span<const int> context,
                                 const CbowModel& model);

struct CbowLossGradient {
  double loss = 0.0;
  std::vector<double> grad;  // same layout as CbowModel::weights()
};

// -ln softmax(center) and its gradient through both roles of the tied matrix.
CbowLossGradient cbow_loss_and_gradient(const corpus::TrainPair& pair,
                                        const CbowModel& model);

// Top-1 accuracy.
double cbow_accuracy(std::span<const corpus::TrainPair> pairs,
                     const CbowModel& model);

struct CbowResult {
  CbowModel model;
  std::vector<train::TrainRecord> records;
};

// Categorical cross-entropy training with the same Adam, batch and split
// settings as the quantum path. Pairs with empty contexts must be filtered
// out by the caller.
CbowResult cbow_train(std::span<const corpus::TrainPair> train_pairs,
                      std::span<const corpus::TrainPair> eval_pairs,
                      int vocab_size, int dim,
                      const train::TrainSettings& settings);

}  // namespace qcse::baseline
