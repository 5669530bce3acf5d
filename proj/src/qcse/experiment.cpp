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

#include "qcse/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "qcse/baseline.hpp"
#include "qcse/error.hpp"

namespace qcse::experiment {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10f", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create " + dir.string() + ": " + ec.message());
  }
}

template <typename T>
void read_if(const json& obj, const char* key, T& field) {
  if (obj.contains(key) && !obj.at(key).is_null()) {
    field = obj.at(key).get<T>();
  }
}

std::string loss_csv(const std::vector<train::TrainRecord>& records) {
  std::string s = "epoch,mean_loss,accuracy\n";
  for (const auto& r : records) {
    s += std::to_string(r.epoch) + "," + fmt(r.mean_loss) + "," +
         fmt(r.accuracy) + "\n";
  }
  return s;
}

std::string accuracy_csv(const std::vector<train::TrainRecord>& records) {
  std::string s = "epoch,test_accuracy,train_accuracy\n";
  for (const auto& r : records) {
    s += std::to_string(r.epoch) + "," + fmt(r.accuracy) + "," +
         fmt(r.train_accuracy) + "\n";
  }
  return s;
}

model::ModelConfig resolved_model(const RunConfig& config, int qubits) {
  model::ModelConfig cfg = config.model;
  cfg.num_qubits = qubits;
  return cfg;
}

json data_json(const PreparedData& data, const train::Split& split) {
  return {{"vocab_size", data.vocab.size()},
          {"pairs", data.pairs.size()},
          {"dropped_empty_context", data.dropped_empty},
          {"train_pairs", split.train.size()},
          {"test_pairs", split.test.size()},
          {"qubits", data.qubits}};
}

json final_json(const std::vector<train::TrainRecord>& records) {
  if (records.empty()) return nullptr;
  const auto& r = records.back();
  return {{"epoch", r.epoch},
          {"mean_loss", r.mean_loss},
          {"accuracy", r.accuracy},
          {"train_accuracy", r.train_accuracy}};
}

void write_manifest(const fs::path& out, const std::string& command,
                    const RunConfig& config, json extra) {
  json doc;
  doc["tool"] = "qcse";
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["config"] = json::parse(config.to_json());
  for (auto& [k, v] : extra.items()) doc[k] = v;
  write_text(out / "manifest.json", doc.dump(2) + "\n");
}

struct QuantumRun {
  PreparedData data;
  train::Split split;
  model::ModelConfig cfg;
  train::ExperimentResult result;
};

QuantumRun train_quantum(const RunConfig& config, const std::string& label) {
  PreparedData data = prepare(config);
  const model::ModelConfig cfg = resolved_model(config, data.qubits);
  train::Split split = train::split_pairs(
      data.pairs, config.train.train_fraction, config.train.seed);
  train::EpochCallback log;
  if (config.verbose) {
    log = [&label](const train::TrainRecord& r) {
      std::cerr << "[" << label << "] epoch " << r.epoch
                << " loss=" << fmt(r.mean_loss)
                << " acc=" << fmt(r.accuracy) << "\n";
    };
  }
  auto result = train::run_experiment(data.pairs, data.vocab.size(), cfg,
                                      config.train, log);
  return QuantumRun{std::move(data), std::move(split), cfg, std::move(result)};
}

RunSummary summarize(const std::string& label, int layers, int width,
                     std::size_t params, std::size_t words,
                     const std::vector<train::TrainRecord>& records) {
  RunSummary s{label, layers, width, params, words, 0.0, 0.0};
  if (!records.empty()) {
    s.final_accuracy = records.back().accuracy;
    s.final_loss = records.back().mean_loss;
  }
  return s;
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  RunConfig c;
  try {
    const json doc = text.empty() ? json::object() : json::parse(text);
    if (!doc.is_object()) {
      throw Error(ErrorCode::kConfiguration, "run config must be an object");
    }
    if (doc.contains("corpus")) {
      const auto& cj = doc.at("corpus");
      if (cj.contains("path") && !cj.at("path").is_null()) {
        c.corpus.path = cj.at("path").get<std::string>();
      }
      if (cj.contains("synthetic")) {
        const auto& sj = cj.at("synthetic");
        read_if(sj, "seed", c.corpus.synthetic.seed);
        read_if(sj, "sentences", c.corpus.synthetic.num_sentences);
        read_if(sj, "vocab", c.corpus.synthetic.vocab_size);
        read_if(sj, "length", c.corpus.synthetic.sentence_len);
      }
      read_if(cj, "window", c.corpus.window);
      read_if(cj, "pad_boundaries", c.corpus.pad_boundaries);
    }
    if (doc.contains("model")) {
      const auto& mj = doc.at("model");
      read_if(mj, "qubits", c.qubits);
      read_if(mj, "layers", c.model.layers);
      if (mj.contains("method")) {
        const auto name = mj.at("method").get<std::string>();
        const auto method = context::parse_method(name);
        if (!method) {
          throw Error(ErrorCode::kConfiguration,
                      "unknown context method '" + name + "'");
        }
        c.model.method = *method;
      }
      if (mj.contains("hyperparams")) {
        const auto& hj = mj.at("hyperparams");
        read_if(hj, "alpha", c.model.hyperparams.alpha);
        read_if(hj, "omega", c.model.hyperparams.omega);
        read_if(hj, "delta", c.model.hyperparams.delta);
        read_if(hj, "prime", c.model.hyperparams.prime);
        read_if(hj, "hash_space", c.model.hyperparams.hash_space);
      }
    }
    if (doc.contains("train")) {
      const auto& tj = doc.at("train");
      read_if(tj, "epochs", c.train.epochs);
      read_if(tj, "lr", c.train.learning_rate);
      read_if(tj, "seed", c.train.seed);
      if (tj.contains("grad_mode")) {
        const auto name = tj.at("grad_mode").get<std::string>();
        const auto mode = train::parse_grad_mode(name);
        if (!mode) {
          throw Error(ErrorCode::kConfiguration,
                      "unknown gradient mode '" + name + "'");
        }
        c.train.grad_mode = *mode;
      }
      read_if(tj, "fd_epsilon", c.train.fd_epsilon);
      read_if(tj, "hamming_max", c.train.hamming_max);
      read_if(tj, "train_fraction", c.train.train_fraction);
      read_if(tj, "batch_size", c.train.batch_size);
      read_if(tj, "threads", c.train.threads);
    }
    if (doc.contains("baseline")) {
      read_if(doc.at("baseline"), "dims", c.baseline_dims);
    }
    read_if(doc, "verbose", c.verbose);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfiguration,
                std::string("malformed run config: ") + e.what());
  }
  if (c.qubits < 0) {
    throw Error(ErrorCode::kConfiguration, "qubit count must be >= 0");
  }
  for (int d : c.baseline_dims) {
    if (d < 1) throw Error(ErrorCode::kConfiguration, "baseline dim must be >= 1");
  }
  c.train.validate();
  c.model.hyperparams.validate();
  if (c.model.layers < 1) {
    throw Error(ErrorCode::kConfiguration, "ansatz needs at least one layer");
  }
  return c;
}

std::string RunConfig::to_json() const {
  json doc;
  json cj;
  cj["path"] = corpus.path ? json(*corpus.path) : json(nullptr);
  cj["synthetic"] = {{"seed", corpus.synthetic.seed},
                     {"sentences", corpus.synthetic.num_sentences},
                     {"vocab", corpus.synthetic.vocab_size},
                     {"length", corpus.synthetic.sentence_len}};
  cj["window"] = corpus.window;
  cj["pad_boundaries"] = corpus.pad_boundaries;
  doc["corpus"] = cj;
  doc["model"] = {
      {"qubits", qubits},
      {"layers", model.layers},
      {"method", std::string(context::method_name(model.method))},
      {"hyperparams",
       {{"alpha", model.hyperparams.alpha},
        {"omega", model.hyperparams.omega},
        {"delta", model.hyperparams.delta},
        {"prime", model.hyperparams.prime},
        {"hash_space", model.hyperparams.hash_space}}}};
  doc["train"] = {{"epochs", train.epochs},
                  {"lr", train.learning_rate},
                  {"seed", train.seed},
                  {"grad_mode", std::string(train::grad_mode_name(train.grad_mode))},
                  {"fd_epsilon", train.fd_epsilon},
                  {"hamming_max", train.hamming_max},
                  {"train_fraction", train.train_fraction},
                  {"batch_size", train.batch_size},
                  {"threads", train.threads}};
  doc["baseline"] = {{"dims", baseline_dims}};
  doc["verbose"] = verbose;
  return doc.dump(2);
}

PreparedData prepare(const RunConfig& config) {
  const auto sentences = config.corpus.path
                             ? corpus::read_corpus(*config.corpus.path)
                             : corpus::generate_synthetic(config.corpus.synthetic);
  PreparedData data{corpus::Vocabulary::build(sentences,
                                              config.corpus.pad_boundaries),
                    {}, 0, 0};
  for (auto& p :
       corpus::extract_pairs(sentences, data.vocab, config.corpus.window)) {
    if (p.context.empty()) {
      ++data.dropped_empty;
    } else {
      data.pairs.push_back(std::move(p));
    }
  }
  if (data.pairs.empty()) {
    throw Error(ErrorCode::kInvalidInput,
                "corpus yields no pairs with a nonempty context");
  }
  if (config.qubits == 0) {
    data.qubits = std::max(2, corpus::qubits_for_vocab(data.vocab.size()));
  } else {
    data.qubits = config.qubits;
    model::ModelConfig probe = config.model;
    probe.num_qubits = data.qubits;
    probe.check_capacity(data.vocab.size());
  }
  return data;
}

namespace {

struct TrainOutcome {
  RunSummary summary;
  std::vector<train::TrainRecord> records;
};

TrainOutcome train_and_write(const RunConfig& config, const fs::path& out) {
  ensure_dir(out);
  const std::string label(context::method_name(config.model.method));
  const QuantumRun run = train_quantum(config, label);
  write_text(out / "loss.csv", loss_csv(run.result.records));
  write_text(out / "accuracy.csv", accuracy_csv(run.result.records));
  write_text(out / "params.json",
             model::params_to_json(run.cfg, run.result.params) + "\n");

  RunConfig resolved = config;
  resolved.qubits = run.data.qubits;
  write_manifest(out, "train", resolved,
                 {{"data", data_json(run.data, run.split)},
                  {"trainable_params", run.result.params.size()},
                  {"final", final_json(run.result.records)}});
  return {summarize("QCSE", run.cfg.layers, run.cfg.num_qubits,
                    run.result.params.size(), run.data.pairs.size(),
                    run.result.records),
          run.result.records};
}

}  // namespace

RunSummary run_train(const RunConfig& config, const fs::path& out) {
  return train_and_write(config, out).summary;
}

std::vector<RunSummary> run_method_sweep(const RunConfig& config,
                                         const fs::path& out) {
  ensure_dir(out);
  std::vector<RunSummary> rows;
  std::vector<std::vector<train::TrainRecord>> curves;
  std::string header = "epoch";
  for (auto method : context::kAllMethods) {
    RunConfig c = config;
    c.model.method = method;
    const std::string name(context::method_name(method));
    auto outcome = train_and_write(c, out / name);
    outcome.summary.label = name;
    rows.push_back(outcome.summary);
    curves.push_back(std::move(outcome.records));
    header += "," + name;
  }
  std::string csv = header + "\n";
  const std::size_t epochs = curves.front().size();
  for (std::size_t e = 0; e < epochs; ++e) {
    csv += std::to_string(e + 1);
    for (const auto& c : curves) csv += "," + fmt(c[e].mean_loss);
    csv += "\n";
  }
  write_text(out / "sweep.csv", csv);
  return rows;
}

std::string format_table(const std::vector<RunSummary>& rows) {
  std::string s;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-6s %6s %12s %10s %10s %10s %12s\n",
                "model", "layers", "qubits/dim", "params", "words",
                "accuracy%", "final_loss");
  s += buf;
  for (const auto& r : rows) {
    const std::string layers = r.layers > 0 ? std::to_string(r.layers) : "--";
    std::snprintf(buf, sizeof(buf), "%-6s %6s %12d %10zu %10zu %10.2f %12.4f\n",
                  r.label.c_str(), layers.c_str(), r.qubits_or_dim,
                  r.trainable_params, r.training_words,
                  100.0 * r.final_accuracy, r.final_loss);
    s += buf;
  }
  return s;
}

std::string run_depth_sweep(const RunConfig& config, int first_layer,
                            int last_layer, const fs::path& out) {
  if (first_layer < 1 || last_layer < first_layer) {
    throw Error(ErrorCode::kConfiguration, "layer range is empty");
  }
  ensure_dir(out);
  std::vector<RunSummary> rows;
  for (int layers = first_layer; layers <= last_layer; ++layers) {
    RunConfig c = config;
    c.model.layers = layers;
    rows.push_back(run_train(c, out / ("layers_" + std::to_string(layers))));
  }
  if (!config.baseline_dims.empty()) {
    const PreparedData data = prepare(config);
    const auto split = train::split_pairs(
        data.pairs, config.train.train_fraction, config.train.seed);
    for (int dim : config.baseline_dims) {
      const auto res = baseline::cbow_train(split.train, split.test,
                                            data.vocab.size(), dim,
                                            config.train);
      rows.push_back(summarize("CBOW", 0, dim, res.model.parameter_count(),
                               data.pairs.size(), res.records));
    }
  }
  std::string csv =
      "model,layers,qubits_or_dim,trainable_params,training_words,"
      "final_accuracy,final_loss\n";
  for (const auto& r : rows) {
    csv += r.label + "," + (r.layers > 0 ? std::to_string(r.layers) : "") +
           "," + std::to_string(r.qubits_or_dim) + "," +
           std::to_string(r.trainable_params) + "," +
           std::to_string(r.training_words) + "," + fmt(r.final_accuracy) +
           "," + fmt(r.final_loss) + "\n";
  }
  write_text(out / "table.csv", csv);
  const std::string text = format_table(rows);
  write_text(out / "table.txt", text);
  return text;
}

std::vector<RunSummary> run_compare_baseline(const RunConfig& config,
                                             const fs::path& out) {
  ensure_dir(out);
  const QuantumRun run = train_quantum(config, "qcse");
  const int dim = config.baseline_dims.empty() ? 20 : config.baseline_dims.front();
  const auto cbow = baseline::cbow_train(run.split.train, run.split.test,
                                         run.data.vocab.size(), dim,
                                         config.train);

  std::string csv = "epoch,qcse_loss,qcse_accuracy,cbow_loss,cbow_accuracy\n";
  const auto& q = run.result.records;
  const auto& b = cbow.records;
  for (std::size_t e = 0; e < q.size() && e < b.size(); ++e) {
    csv += std::to_string(q[e].epoch) + "," + fmt(q[e].mean_loss) + "," +
           fmt(q[e].accuracy) + "," + fmt(b[e].mean_loss) + "," +
           fmt(b[e].accuracy) + "\n";
  }
  write_text(out / "compare.csv", csv);
  write_text(out / "params.json",
             model::params_to_json(run.cfg, run.result.params) + "\n");

  RunConfig resolved = config;
  resolved.qubits = run.data.qubits;
  resolved.baseline_dims = {dim};
  write_manifest(out, "compare-baseline", resolved,
                 {{"data", data_json(run.data, run.split)},
                  {"qcse", {{"trainable_params", run.result.params.size()},
                            {"final", final_json(q)}}},
                  {"cbow", {{"dim", dim},
                            {"trainable_params", cbow.model.parameter_count()},
                            {"final", final_json(b)}}}});
  return {summarize("QCSE", run.cfg.layers, run.cfg.num_qubits,
                    run.result.params.size(), run.data.pairs.size(), q),
          summarize("CBOW", 0, dim, cbow.model.parameter_count(),
                    run.data.pairs.size(), b)};
}

void generate_corpus(const RunConfig& config, const fs::path& out) {
  ensure_dir(out);
  const auto sentences = config.corpus.path
                             ? corpus::read_corpus(*config.corpus.path)
                             : corpus::generate_synthetic(config.corpus.synthetic);
  const auto vocab =
      corpus::Vocabulary::build(sentences, config.corpus.pad_boundaries);
  corpus::write_corpus(out / "corpus.txt", sentences);
  std::string v;
  for (int i = 0; i < vocab.size(); ++i) {
    v += std::to_string(i) + "\t" + vocab.word(i) + "\n";
  }
  write_text(out / "vocab.txt", v);
  corpus::write_pairs(out / "pairs.txt",
                      corpus::extract_pairs(sentences, vocab, config.corpus.window));
}

}  // namespace qcse::experiment
