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

#include "qcse/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcse/error.hpp"
#include "qcse/optimizer.hpp"

namespace qcse::baseline {

namespace {

std::vector<double> context_mean(std::span<const int> context,
                                 const CbowModel& model) {
  if (context.empty()) {
    throw Error(ErrorCode::kInvalidInput, "CBOW needs a nonempty context");
  }
  std::vector<double> h(model.dim(), 0.0);
  for (int c : context) {
    const auto r = model.row(c);
    for (int k = 0; k < model.dim(); ++k) h[k] += r[k];
  }
  for (auto& v : h) v /= static_cast<double>(context.size());
  return h;
}

std::vector<double> softmax_scores(std::span<const double> h,
                                   const CbowModel& model) {
  std::vector<double> s(model.vocab_size());
  for (int v = 0; v < model.vocab_size(); ++v) {
    const auto r = model.row(v);
    s[v] = std::inner_product(r.begin(), r.end(), h.begin(), 0.0);
  }
  const double top = *std::max_element(s.begin(), s.end());
  double z = 0.0;
  for (auto& x : s) {
    x = std::exp(x - top);
    z += x;
  }
  for (auto& x : s) x /= z;
  return s;
}

}  // namespace

CbowModel::CbowModel(int vocab_size, int dim)
    : vocab_size_(vocab_size), dim_(dim) {
  if (vocab_size < 1 || dim < 1) {
    throw Error(ErrorCode::kConfiguration,
                "CBOW needs a positive vocabulary and dimension");
  }
  weights_.assign(static_cast<std::size_t>(vocab_size) * dim, 0.0);
}

CbowModel CbowModel::random(int vocab_size, int dim, Rng& rng) {
  CbowModel m(vocab_size, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (auto& w : m.weights_) w = rng.uniform(-scale, scale);
  return m;
}

std::span<const double> CbowModel::row(int word) const {
  if (word < 0 || word >= vocab_size_) {
    throw Error(ErrorCode::kIndex,
                "word " + std::to_string(word) + " outside CBOW vocabulary");
  }
  return std::span<const double>(weights_).subspan(
      static_cast<std::size_t>(word) * dim_, dim_);
}

std::vector<double> cbow_forward(std::span<const int> context,
                                 const CbowModel& model) {
  const auto h = context_mean(context, model);
  return softmax_scores(h, model);
}

CbowLossGradient cbow_loss_and_gradient(const corpus::TrainPair& pair,
                                        const CbowModel& model) {
  const int d = model.dim();
  const auto h = context_mean(pair.context, model);
  auto probs = softmax_scores(h, model);
  (void)model.row(pair.center);

  CbowLossGradient out;
  out.loss = -std::log(std::max(probs[pair.center], 1e-300));
  out.grad.assign(model.parameter_count(), 0.0);

  // dL/ds_v = p_v - [v == center]; s_v = E_v . h.
  probs[pair.center] -= 1.0;
  std::vector<double> dh(d, 0.0);
  for (int v = 0; v < model.vocab_size(); ++v) {
    const auto r = model.row(v);
    double* g = out.grad.data() + static_cast<std::size_t>(v) * d;
    for (int k = 0; k < d; ++k) {
      g[k] += probs[v] * h[k];
      dh[k] += probs[v] * r[k];
    }
  }
  const double share = 1.0 / static_cast<double>(pair.context.size());
  for (int c : pair.context) {
    double* g = out.grad.data() + static_cast<std::size_t>(c) * d;
    for (int k = 0; k < d; ++k) g[k] += share * dh[k];
  }
  return out;
}

double cbow_accuracy(std::span<const corpus::TrainPair> pairs,
                     const CbowModel& model) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kInvalidInput, "accuracy needs at least one pair");
  }
  std::size_t correct = 0;
  for (const auto& p : pairs) {
    const auto probs = cbow_forward(p.context, model);
    const auto best = std::max_element(probs.begin(), probs.end()) - probs.begin();
    correct += best == p.center;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

CbowResult cbow_train(std::span<const corpus::TrainPair> train_pairs,
                      std::span<const corpus::TrainPair> eval_pairs,
                      int vocab_size, int dim,
                      const train::TrainSettings& settings) {
  settings.validate();
  if (train_pairs.empty()) {
    throw Error(ErrorCode::kInvalidInput, "CBOW training set is empty");
  }
  const auto eval = eval_pairs.empty() ? train_pairs : eval_pairs;

  Rng init_rng(settings.seed ^ 0xc0b0c0b0ULL);
  CbowResult result{CbowModel::random(vocab_size, dim, init_rng), {}};
  Adam adam(result.model.parameter_count(),
            Adam::Options{settings.learning_rate});
  Rng order_rng(settings.seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<std::size_t> order(train_pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t batch = settings.batch_size > 0
                                ? static_cast<std::size_t>(settings.batch_size)
                                : train_pairs.size();
  std::vector<double> grad(result.model.parameter_count());

  for (int epoch = 1; epoch <= settings.epochs; ++epoch) {
    order_rng.shuffle(order.begin(), order.end());
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t count = std::min(batch, order.size() - start);
      std::fill(grad.begin(), grad.end(), 0.0);
      for (std::size_t i = 0; i < count; ++i) {
        const auto r =
            cbow_loss_and_gradient(train_pairs[order[start + i]], result.model);
        loss_sum += r.loss;
        for (std::size_t k = 0; k < grad.size(); ++k) grad[k] += r.grad[k];
      }
      for (auto& g : grad) g /= static_cast<double>(count);
      adam.step(result.model.weights(), grad);
    }
    train::TrainRecord rec;
    rec.epoch = epoch;
    rec.mean_loss = loss_sum / static_cast<double>(train_pairs.size());
    rec.accuracy = cbow_accuracy(eval, result.model);
    rec.train_accuracy = cbow_accuracy(train_pairs, result.model);
    result.records.push_back(rec);
  }
  return result;
}

}  // namespace qcse::baseline
