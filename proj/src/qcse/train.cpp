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

#include "qcse/train.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qcse/error.hpp"
#include "qcse/parallel.hpp"

namespace qcse::train {

using model::AnsatzParams;
using qsim::Amplitude;
using qsim::GateKind;
using qsim::GateOp;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::vector<double> probs_from(std::vector<Amplitude> amps, int m,
                               std::span<const GateOp> ops) {
  for (const auto& op : ops) qsim::apply_unchecked(amps, op);
  std::vector<double> z(m, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    for (int q = 0; q < m; ++q) z[q] += ((i >> q) & 1u) ? -p : p;
  }
  for (auto& v : z) v = (1.0 - v) / 2.0;
  return z;
}

std::vector<Amplitude> copy_amps(const qsim::StateVector& s) {
  const auto a = s.amplitudes();
  return {a.begin(), a.end()};
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

LossGradient finite_difference(const Sample& sample,
                               const AnsatzParams& params, double eps) {
  LossGradient out;
  out.loss = sample_loss(sample, params);
  out.grad.resize(params.size());
  AnsatzParams shifted = params;
  for (std::size_t k = 0; k < params.size(); ++k) {
    shifted[k] = params[k] + eps;
    const double up = sample_loss(sample, shifted);
    shifted[k] = params[k] - eps;
    const double down = sample_loss(sample, shifted);
    shifted[k] = params[k];
    out.grad[k] = (up - down) / (2.0 * eps);
  }
  return out;
}

// Two-term shift rule on every rotation. A CRZ(phi) on (c, t) is rewritten
// as CNOT . RZ_t(-phi/2) . CNOT . RZ_t(phi/2) (rightmost first) and each
// half-angle rotation is shifted separately.
LossGradient parameter_shift(const Sample& sample, const AnsatzParams& params) {
  const int m = params.num_qubits();
  const auto ops = model::build_ansatz_ops(params);

  LossGradient out;
  std::vector<Amplitude> prefix = copy_amps(sample.encoded);
  const auto probs = probs_from(prefix, m, ops);
  out.loss = loss(probs, sample.bits);
  const auto dl_dp = loss_grad_probs(probs, sample.bits);
  out.grad.assign(ops.size(), 0.0);

  auto shifted_probs = [&](std::span<const GateOp> replacement,
                           std::size_t k) {
    std::vector<Amplitude> amps = prefix;
    for (const auto& op : replacement) qsim::apply_unchecked(amps, op);
    return probs_from(std::move(amps), m,
                      std::span<const GateOp>(ops).subspan(k + 1));
  };
  auto shift_derivative = [&](auto make_ops, std::size_t k) {
    const auto plus = shifted_probs(make_ops(kHalfPi), k);
    const auto minus = shifted_probs(make_ops(-kHalfPi), k);
    std::vector<double> dp(m);
    for (int q = 0; q < m; ++q) dp[q] = (plus[q] - minus[q]) / 2.0;
    return dot(dl_dp, dp);
  };

  for (std::size_t k = 0; k < ops.size(); ++k) {
    const GateOp& op = ops[k];
    if (op.kind == GateKind::CRZ) {
      const double half = op.angle / 2.0;
      const GateOp cx = GateOp::controlled(GateKind::CNOT, op.control, op.target);
      auto decomposed = [&](double shift_first, double shift_second) {
        return std::vector<GateOp>{
            cx, GateOp::single(GateKind::RZ, op.target, -half + shift_first), cx,
            GateOp::single(GateKind::RZ, op.target, half + shift_second)};
      };
      const double d_second = shift_derivative(
          [&](double s) { return decomposed(0.0, s); }, k);
      const double d_first = shift_derivative(
          [&](double s) { return decomposed(s, 0.0); }, k);
      out.grad[k] = 0.5 * d_second - 0.5 * d_first;
    } else {
      out.grad[k] = shift_derivative(
          [&](double s) {
            GateOp shifted = op;
            shifted.angle += s;
            return std::vector<GateOp>{shifted};
          },
          k);
    }
    qsim::apply_unchecked(prefix, op);
  }
  return out;
}

// Im <lambda| G |psi> for the generator G of a rotation op, where the op is
// exp(-i angle G / 2).
double generator_overlap(std::span<const Amplitude> lambda,
                         std::span<const Amplitude> psi, const GateOp& op) {
  const std::size_t tbit = std::size_t{1} << op.target;
  Amplitude acc{};
  switch (op.kind) {
    case GateKind::RX:
      for (std::size_t i = 0; i < psi.size(); ++i) {
        acc += std::conj(lambda[i]) * psi[i ^ tbit];
      }
      break;
    case GateKind::RZ:
      for (std::size_t i = 0; i < psi.size(); ++i) {
        const Amplitude t = std::conj(lambda[i]) * psi[i];
        acc += (i & tbit) ? -t : t;
      }
      break;
    case GateKind::CRZ: {
      const std::size_t cbit = std::size_t{1} << op.control;
      for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i & cbit) == 0) continue;
        const Amplitude t = std::conj(lambda[i]) * psi[i];
        acc += (i & tbit) ? -t : t;
      }
      break;
    }
    default:
      return 0.0;
  }
  return acc.imag();
}

// Reverse-mode sweep over the ansatz. The loss depends on the state only
// through <Z_q>, so dL/dtheta = d<O>/dtheta with O = sum_q w_q Z_q and
// w_q = -dL/dp_q / 2.
LossGradient adjoint(const Sample& sample, const AnsatzParams& params) {
  const int m = params.num_qubits();
  const auto ops = model::build_ansatz_ops(params);
  std::vector<Amplitude> psi = copy_amps(sample.encoded);
  for (const auto& op : ops) qsim::apply_unchecked(psi, op);

  std::vector<double> probs(m, 0.0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi[i]);
    for (int q = 0; q < m; ++q) {
      if ((i >> q) & 1u) probs[q] += p;
    }
  }
  LossGradient out;
  out.loss = loss(probs, sample.bits);
  const auto dl_dp = loss_grad_probs(probs, sample.bits);

  std::vector<Amplitude> lambda(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    double o = 0.0;
    for (int q = 0; q < m; ++q) {
      const double w = -0.5 * dl_dp[q];
      o += ((i >> q) & 1u) ? -w : w;
    }
    lambda[i] = o * psi[i];
  }

  out.grad.assign(ops.size(), 0.0);
  for (std::size_t k = ops.size(); k-- > 0;) {
    out.grad[k] = generator_overlap(lambda, psi, ops[k]);
    qsim::apply_inverse_unchecked(psi, ops[k]);
    qsim::apply_inverse_unchecked(lambda, ops[k]);
  }
  return out;
}

}  // namespace

std::string_view grad_mode_name(GradMode mode) {
  switch (mode) {
    case GradMode::kFiniteDifference: return "finite-difference";
    case GradMode::kParameterShift: return "parameter-shift";
    case GradMode::kAdjoint: return "adjoint";
  }
  return "?";
}

std::optional<GradMode> parse_grad_mode(std::string_view name) {
  for (auto mode : {GradMode::kFiniteDifference, GradMode::kParameterShift,
                    GradMode::kAdjoint}) {
    if (grad_mode_name(mode) == name) return mode;
  }
  return std::nullopt;
}

void TrainSettings::validate() const {
  if (epochs < 0) throw Error(ErrorCode::kConfiguration, "epochs must be >= 0");
  if (!(learning_rate >= 0.0)) {
    throw Error(ErrorCode::kConfiguration, "learning rate must be >= 0");
  }
  if (!(fd_epsilon > 0.0) || !(fd_epsilon < 0.1)) {
    throw Error(ErrorCode::kConfiguration, "fd_epsilon must lie in (0, 0.1)");
  }
  if (hamming_max < 0) {
    throw Error(ErrorCode::kConfiguration, "hamming_max must be >= 0");
  }
  if (!(train_fraction > 0.0) || !(train_fraction <= 1.0)) {
    throw Error(ErrorCode::kConfiguration, "train fraction must lie in (0, 1]");
  }
  if (batch_size < 0) {
    throw Error(ErrorCode::kConfiguration, "batch size must be >= 0");
  }
}

double loss(std::span<const double> probs, std::span<const std::uint8_t> bits) {
  if (probs.size() != bits.size()) {
    throw Error(ErrorCode::kShape, "prediction and target lengths differ");
  }
  double total = 0.0;
  for (std::size_t q = 0; q < probs.size(); ++q) {
    const double p = std::clamp(probs[q], kProbClamp, 1.0 - kProbClamp);
    total -= bits[q] ? std::log(p) : std::log(1.0 - p);
  }
  return total;
}

std::vector<double> loss_grad_probs(std::span<const double> probs,
                                    std::span<const std::uint8_t> bits) {
  if (probs.size() != bits.size()) {
    throw Error(ErrorCode::kShape, "prediction and target lengths differ");
  }
  std::vector<double> g(probs.size(), 0.0);
  for (std::size_t q = 0; q < probs.size(); ++q) {
    const double p = probs[q];
    if (p < kProbClamp || p > 1.0 - kProbClamp) continue;
    g[q] = bits[q] ? -1.0 / p : 1.0 / (1.0 - p);
  }
  return g;
}

int hamming_distance(std::span<const double> probs,
                     std::span<const std::uint8_t> bits) {
  if (probs.size() != bits.size()) {
    throw Error(ErrorCode::kShape, "prediction and target lengths differ");
  }
  int d = 0;
  for (std::size_t q = 0; q < probs.size(); ++q) {
    const std::uint8_t predicted = probs[q] >= 0.5 ? 1 : 0;
    d += predicted != bits[q];
  }
  return d;
}

Sample make_sample(const corpus::TrainPair& pair, int vocab_size,
                   const model::ModelConfig& cfg) {
  context::Window w{pair.context, vocab_size};
  return Sample{model::encode_state(w, cfg),
                corpus::target_bits(pair.center, cfg.num_qubits)};
}

std::vector<Sample> make_samples(std::span<const corpus::TrainPair> pairs,
                                 int vocab_size, const model::ModelConfig& cfg,
                                 int threads) {
  std::vector<std::optional<Sample>> slots(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    slots[i] = make_sample(pairs[i], vocab_size, cfg);
  });
  std::vector<Sample> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<double> predict(const Sample& sample, const AnsatzParams& params) {
  return probs_from(copy_amps(sample.encoded), params.num_qubits(),
                    model::build_ansatz_ops(params));
}

double sample_loss(const Sample& sample, const AnsatzParams& params) {
  return loss(predict(sample, params), sample.bits);
}

LossGradient loss_and_gradient(const Sample& sample, const AnsatzParams& params,
                               GradMode mode, double fd_epsilon) {
  if (sample.encoded.num_qubits() != params.num_qubits()) {
    throw Error(ErrorCode::kShape, "sample and ansatz widths differ");
  }
  switch (mode) {
    case GradMode::kFiniteDifference:
      return finite_difference(sample, params, fd_epsilon);
    case GradMode::kParameterShift:
      return parameter_shift(sample, params);
    case GradMode::kAdjoint:
      return adjoint(sample, params);
  }
  throw Error(ErrorCode::kConfiguration, "unknown gradient mode");
}

LossGradient gradient(const corpus::TrainPair& pair, int vocab_size,
                      const AnsatzParams& params, const model::ModelConfig& cfg,
                      const TrainSettings& settings) {
  return loss_and_gradient(make_sample(pair, vocab_size, cfg), params,
                           settings.grad_mode, settings.fd_epsilon);
}

double accuracy(std::span<const Sample> samples, const AnsatzParams& params,
                int hamming_max, int threads) {
  if (samples.empty()) {
    throw Error(ErrorCode::kInvalidInput, "accuracy needs at least one sample");
  }
  std::vector<char> hit(samples.size(), 0);
  parallel_for(samples.size(), threads, [&](std::size_t i) {
    hit[i] = hamming_distance(predict(samples[i], params), samples[i].bits) <=
             hamming_max;
  });
  const auto correct = std::count(hit.begin(), hit.end(), 1);
  return static_cast<double>(correct) / static_cast<double>(samples.size());
}

Trainer::Trainer(AnsatzParams initial, const TrainSettings& settings)
    : params_(std::move(initial)),
      settings_(settings),
      adam_(params_.size(), Adam::Options{settings.learning_rate}),
      order_rng_(settings.seed ^ 0x9e3779b97f4a7c15ULL),
      threads_(resolve_thread_count(settings.threads)) {
  settings_.validate();
}

double Trainer::train_epoch(std::span<const Sample> samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::kInvalidInput, "training set is empty");
  }
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  order_rng_.shuffle(order.begin(), order.end());

  const std::size_t batch = settings_.batch_size > 0
                                ? static_cast<std::size_t>(settings_.batch_size)
                                : samples.size();
  double loss_sum = 0.0;
  std::vector<LossGradient> results;
  std::vector<double> grad(params_.size());
  for (std::size_t start = 0; start < order.size(); start += batch) {
    const std::size_t count = std::min(batch, order.size() - start);
    results.assign(count, {});
    parallel_for(count, threads_, [&](std::size_t i) {
      results[i] = loss_and_gradient(samples[order[start + i]], params_,
                                     settings_.grad_mode, settings_.fd_epsilon);
    });
    std::fill(grad.begin(), grad.end(), 0.0);
    for (const auto& r : results) {
      loss_sum += r.loss;
      for (std::size_t k = 0; k < grad.size(); ++k) grad[k] += r.grad[k];
    }
    for (auto& g : grad) g /= static_cast<double>(count);
    adam_.step(params_.values(), grad);
  }
  return loss_sum / static_cast<double>(samples.size());
}

Split split_pairs(std::span<const corpus::TrainPair> pairs, double fraction,
                  std::uint64_t seed) {
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed ^ 0x5851f42d4c957f2dULL);
  rng.shuffle(order.begin(), order.end());
  auto cut = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(pairs.size())));
  cut = std::clamp<std::size_t>(cut, pairs.empty() ? 0 : 1, pairs.size());
  Split s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    (i < cut ? s.train : s.test).push_back(pairs[order[i]]);
  }
  return s;
}

ExperimentResult run_experiment(std::span<const corpus::TrainPair> pairs,
                                int vocab_size, const model::ModelConfig& cfg,
                                const TrainSettings& settings,
                                const EpochCallback& on_epoch) {
  cfg.validate();
  settings.validate();
  cfg.check_capacity(vocab_size);
  if (pairs.empty()) {
    throw Error(ErrorCode::kInvalidInput, "no training pairs");
  }
  const int threads = resolve_thread_count(settings.threads);
  const Split split = split_pairs(pairs, settings.train_fraction, settings.seed);
  const auto train_samples = make_samples(split.train, vocab_size, cfg, threads);
  const auto test_samples = make_samples(split.test, vocab_size, cfg, threads);
  const auto& eval_samples = test_samples.empty() ? train_samples : test_samples;

  Rng init_rng(settings.seed);
  Trainer trainer(AnsatzParams::random(cfg.num_qubits, cfg.layers, init_rng),
                  settings);

  ExperimentResult result{{}, trainer.params(), split.train.size(),
                          split.test.size()};
  for (int epoch = 1; epoch <= settings.epochs; ++epoch) {
    TrainRecord rec;
    rec.epoch = epoch;
    rec.mean_loss = trainer.train_epoch(train_samples);
    rec.accuracy = accuracy(eval_samples, trainer.params(),
                            settings.hamming_max, threads);
    rec.train_accuracy = accuracy(train_samples, trainer.params(),
                                  settings.hamming_max, threads);
    result.records.push_back(rec);
    if (on_epoch) on_epoch(rec);
  }
  result.params = trainer.params();
  return result;
}

}  // namespace qcse::train
