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

// Release acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Pass criterion numbers as arguments to run a
// subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "qcse/corpus.hpp"
#include "qcse/experiment.hpp"
#include "qcse/model.hpp"
#include "qcse/qsim.hpp"
#include "qcse/train.hpp"
#include "support/dense_oracle.hpp"

namespace {

using namespace qcse;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

experiment::PreparedData synthetic_data(int sentences, int vocab, std::uint64_t seed = 42) {
  experiment::RunConfig c;
  c.corpus.synthetic = {seed, sentences, vocab, 4};
  return experiment::prepare(c);
}

model::ModelConfig model_config(int m, int layers, context::Method method) {
  model::ModelConfig cfg;
  cfg.num_qubits = m;
  cfg.layers = layers;
  cfg.method = method;
  return cfg;
}

std::vector<double> losses(const std::vector<train::TrainRecord>& records) {
  std::vector<double> out;
  for (const auto& r : records) out.push_back(r.mean_loss);
  return out;
}

Outcome simulator_oracle() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1);
  double worst = 0.0;
  constexpr int kCircuits = 1000;
  for (int c = 0; c < kCircuits; ++c) {
    const int m = 1 + c % 4;
    auto state = qsim::new_zero_state(m);
    std::vector<testing::Complex> ref(std::size_t{1} << m);
    ref[0] = 1.0;
    for (const auto& op : testing::random_circuit(rng, m, 20)) {
      state.apply(op);
      ref = testing::apply_dense(testing::embed(op, m), ref);
    }
    for (std::size_t i = 0; i < ref.size(); ++i) {
      worst = std::max(worst, std::abs(state.amplitudes()[i] - ref[i]));
    }
  }
  const double secs = seconds_since(start);
  return {worst < 1e-12 && secs < 10.0,
          format("%d circuits, max deviation %.3e, %.2f s", kCircuits, worst, secs)};
}

Outcome parameter_counts() {
  const std::size_t want[] = {17, 34, 51, 68, 85, 102, 119, 136};
  std::string got;
  bool ok = true;
  for (int layers = 1; layers <= 8; ++layers) {
    const auto n = model::AnsatzParams(6, layers).size();
    ok = ok && n == want[layers - 1] && n == model::trainable_parameter_count(6, layers);
    got += (layers > 1 ? "," : "") + std::to_string(n);
  }
  const auto five = model::AnsatzParams(5, 3).size();
  ok = ok && five == 42;
  return {ok, "m=6: [" + got + "], m=5 M=3: " + std::to_string(five)};
}

Outcome gate_counts() {
  int checked = 0, mismatched = 0;
  for (int m = 2; m <= 8; ++m) {
    for (int layers = 1; layers <= 8; ++layers) {
      for (int enc = 1; enc <= 4; ++enc) {
        const context::Schedule schedule(m, std::vector<double>(2 * m * enc, 0.1));
        const auto ops = model::build_encoding_ops(schedule).size() +
                         model::build_ansatz_ops(model::AnsatzParams(m, layers)).size();
        const long formula = (3L * m - 1) * (layers + enc) + m;
        if (static_cast<long>(ops) != formula ||
            model::count_gates(m, layers, enc).total != formula) {
          ++mismatched;
        }
        ++checked;
      }
    }
  }
  return {mismatched == 0, format("%d configurations, %d mismatches", checked, mismatched)};
}

Outcome qubit_rule() {
  const int a = corpus::qubits_for_vocab(31);
  const int b = corpus::qubits_for_vocab(27);
  const int c = corpus::qubits_for_vocab(34);
  return {a == 5 && b == 5 && c == 6, format("|V|=31 -> %d, |V|=27 -> %d, |V|=34 -> %d", a, b, c)};
}

Outcome gradient_agreement() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(5);
  double worst = 0.0;
  std::size_t scalars = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(3));
    const int layers = 1 + static_cast<int>(rng.below(3));
    const int vocab = 1 << m;
    const auto cfg = model_config(m, layers, context::kAllMethods[trial % 5]);
    corpus::TrainPair pair{static_cast<int>(rng.below(vocab)), {}};
    for (int j = 0; j < 4; ++j) pair.context.push_back(static_cast<int>(rng.below(vocab)));
    const auto params = model::AnsatzParams::random(m, layers, rng);
    train::TrainSettings s;
    s.grad_mode = train::GradMode::kParameterShift;
    const auto ps = train::gradient(pair, vocab, params, cfg, s);
    s.grad_mode = train::GradMode::kFiniteDifference;
    const auto fd = train::gradient(pair, vocab, params, cfg, s);
    for (std::size_t k = 0; k < params.size(); ++k) {
      worst = std::max(worst, std::abs(ps.grad[k] - fd.grad[k]));
    }
    scalars += params.size();
  }
  const double secs = seconds_since(start);
  return {worst < 1e-4 && secs < 60.0,
          format("20 configs, %zu angles, max |ps - fd| %.3e, %.2f s", scalars, worst, secs)};
}

Outcome training_trend() {
  const auto start = std::chrono::steady_clock::now();
  const auto data = synthetic_data(300, 34);
  train::TrainSettings s;
  s.seed = 42;
  const auto result =
      train::run_experiment(data.pairs, data.vocab.size(),
                            model_config(6, 6, context::Method::kExpDecaySinusoidal), s);
  const auto l = losses(result.records);
  const double drop = (l.front() - l.back()) / l.front();
  const bool ok = data.vocab.size() == 34 && data.pairs.size() == 1200 && l.size() == 50 &&
                  drop >= 0.05 && l[49] <= l[9];
  return {ok, format("|V|=%d, %zu pairs, loss e1 %.4f e10 %.4f e50 %.4f (-%.1f%%), %.1f s",
                     data.vocab.size(), data.pairs.size(), l.front(), l[9], l.back(),
                     100 * drop, seconds_since(start))};
}

Outcome depth_trend() {
  const auto start = std::chrono::steady_clock::now();
  const auto data = synthetic_data(300, 34);
  double shallow = 0.0, deep = 0.0;
  std::string per_seed;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    train::TrainSettings s;
    s.seed = seed;
    const auto cfg1 = model_config(6, 1, context::Method::kExpDecaySinusoidal);
    const auto cfg6 = model_config(6, 6, context::Method::kExpDecaySinusoidal);
    const double a1 =
        train::run_experiment(data.pairs, data.vocab.size(), cfg1, s).records.back().accuracy;
    const double a6 =
        train::run_experiment(data.pairs, data.vocab.size(), cfg6, s).records.back().accuracy;
    shallow += a1 / 5;
    deep += a6 / 5;
    per_seed += format(" %.3f/%.3f", a1, a6);
  }
  return {deep > shallow,
          format("mean accuracy M=1 %.4f, M=6 %.4f; per seed M1/M6:%s; %.1f s", shallow, deep,
                 per_seed.c_str(), seconds_since(start))};
}

bool moving_average_non_increasing(const std::vector<double>& curve, std::size_t window) {
  if (curve.size() < window) return false;
  double prev = INFINITY;
  for (std::size_t i = 0; i + window <= curve.size(); ++i) {
    const double avg =
        std::accumulate(curve.begin() + i, curve.begin() + i + window, 0.0) / window;
    if (avg > prev) return false;
    prev = avg;
  }
  return true;
}

Outcome method_sweep() {
  const auto start = std::chrono::steady_clock::now();
  struct Corpus {
    int sentences, vocab;
    std::size_t pairs;
  };
  bool ok = true;
  std::string detail;
  for (const Corpus c : {Corpus{32, 27, 128}, Corpus{300, 34, 1200}}) {
    const auto data = synthetic_data(c.sentences, c.vocab);
    ok = ok && data.pairs.size() == c.pairs;
    int finite = 0;
    std::string monotone;
    for (auto method : context::kAllMethods) {
      train::TrainSettings s;
      const auto cfg = model_config(data.qubits, 3, method);
      const auto l = losses(train::run_experiment(data.pairs, data.vocab.size(), cfg, s).records);
      if (l.size() == 50 && std::all_of(l.begin(), l.end(), [](double x) { return std::isfinite(x); })) {
        ++finite;
      }
      if (moving_average_non_increasing(l, 5)) {
        monotone += (monotone.empty() ? "" : ",") + std::string(context::method_name(method));
      }
    }
    ok = ok && finite == 5 && !monotone.empty();
    detail += format("%zu pairs: %d/5 finite, non-increasing MA5: [%s]; ", data.pairs.size(),
                     finite, monotone.c_str());
  }
  return {ok, detail + format("%.1f s", seconds_since(start))};
}

Outcome overfit() {
  Rng rng(42);
  const auto cfg = model_config(2, 2, context::Method::kExpDecaySinusoidal);
  const auto samples = train::make_samples(std::vector<corpus::TrainPair>{{2, {1, 3}}}, 4, cfg);
  train::Trainer trainer(model::AnsatzParams::random(2, 2, rng), train::TrainSettings{});
  for (int e = 0; e < 200; ++e) trainer.train_epoch(samples);
  const double final_loss = train::sample_loss(samples[0], trainer.params());
  return {final_loss < 0.2, format("final loss %.3e after 200 epochs", final_loss)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome determinism() {
  const fs::path root =
      fs::temp_directory_path() / ("qcse_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  ::setenv("QCSE_DETERMINISTIC", "1", 1);
  experiment::RunConfig c;
  c.model.layers = 2;
  c.train.epochs = 10;
  experiment::run_train(c, root / "a");
  experiment::run_train(c, root / "b");
  ::unsetenv("QCSE_DETERMINISTIC");
  const auto a = slurp(root / "a" / "loss.csv");
  const auto b = slurp(root / "b" / "loss.csv");
  fs::remove_all(root);
  return {!a.empty() && a == b, format("loss.csv %zu bytes, identical: %s", a.size(),
                                       a == b ? "yes" : "no")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "simulator matches dense Kronecker oracle", simulator_oracle},
      {2, "trainable parameter counts", parameter_counts},
      {3, "gate-count formula", gate_counts},
      {4, "qubit-count rule", qubit_rule},
      {5, "parameter-shift vs finite-difference gradients", gradient_agreement},
      {6, "training loss trend on 1200-pair corpus", training_trend},
      {7, "deeper ansatz beats single layer over 5 seeds", depth_trend},
      {8, "method sweep on 128- and 1200-pair corpora", method_sweep},
      {9, "single-pair overfit", overfit},
      {10, "deterministic loss.csv", determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
