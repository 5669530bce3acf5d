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

// Command-line front end. All work goes through the C API; this file only
// turns flags and an optional JSON config file into a run-config document.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcse/qcse.h"

namespace {

using nlohmann::json;

struct CommonFlags {
  std::string config_path;
  std::string corpus;
  std::string synthetic;
  std::optional<int> qubits;
  std::optional<int> layers;
  std::string method;
  std::optional<int> epochs;
  std::optional<double> lr;
  std::optional<unsigned long long> seed;
  std::string grad_mode;
  std::string baseline;
  std::optional<int> batch_size;
  std::optional<int> window;
  std::string out = "runs/qcse";
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON run-config file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--corpus", f.corpus, "Text corpus, one sentence per line");
  cmd->add_option("--synthetic", f.synthetic,
                  "Synthetic corpus spec, e.g. sentences=300,vocab=34,length=4,seed=42");
  cmd->add_option("--qubits", f.qubits, "Qubit count (default: fit vocabulary)");
  cmd->add_option("--layers", f.layers, "Ansatz layers");
  cmd->add_option("--method", f.method,
                  "exp-decay-sin | index-diagonal | phase-shift | hash | angular-vector");
  cmd->add_option("--epochs", f.epochs, "Training epochs");
  cmd->add_option("--lr", f.lr, "Adam learning rate");
  cmd->add_option("--seed", f.seed, "Training seed");
  cmd->add_option("--grad-mode", f.grad_mode,
                  "finite-difference | parameter-shift | adjoint");
  cmd->add_option("--baseline", f.baseline, "CBOW dimensions, e.g. 20,50");
  cmd->add_option("--batch-size", f.batch_size, "Pairs per update (0 = full batch)");
  cmd->add_option("--window", f.window, "Context radius on each side");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_flag("--verbose", f.verbose, "Log every epoch to stderr");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

json synthetic_spec(const std::string& text) {
  json spec = json::object();
  for (const auto& kv : split(text, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--synthetic", "expected key=value, got " + kv);
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key != "sentences" && key != "vocab" && key != "length" && key != "seed") {
      throw CLI::ValidationError("--synthetic", "unknown key " + key);
    }
    spec[key] = std::stoull(value);
  }
  return spec;
}

json build_config(const CommonFlags& f) {
  json doc = json::object();
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    doc = json::parse(in);
  }
  if (!f.corpus.empty()) doc["corpus"]["path"] = f.corpus;
  if (!f.synthetic.empty()) {
    doc["corpus"]["path"] = nullptr;
    doc["corpus"]["synthetic"] = synthetic_spec(f.synthetic);
  }
  if (f.window) doc["corpus"]["window"] = *f.window;
  if (f.qubits) doc["model"]["qubits"] = *f.qubits;
  if (f.layers) doc["model"]["layers"] = *f.layers;
  if (!f.method.empty()) doc["model"]["method"] = f.method;
  if (f.epochs) doc["train"]["epochs"] = *f.epochs;
  if (f.lr) doc["train"]["lr"] = *f.lr;
  if (f.seed) doc["train"]["seed"] = *f.seed;
  if (!f.grad_mode.empty()) doc["train"]["grad_mode"] = f.grad_mode;
  if (f.batch_size) doc["train"]["batch_size"] = *f.batch_size;
  if (!f.baseline.empty()) {
    std::vector<int> dims;
    for (const auto& d : split(f.baseline, ',')) dims.push_back(std::stoi(d));
    doc["baseline"]["dims"] = dims;
  }
  if (f.verbose) doc["verbose"] = true;
  return doc;
}

int report(qcse_status status) {
  if (status != QCSE_OK) {
    std::cerr << "error: " << qcse_status_name(status) << ": "
              << qcse_last_error() << "\n";
  }
  return static_cast<int>(status);
}

void print_and_free(char* text) {
  if (text) {
    std::cout << text;
    qcse_string_free(text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum context-sensitive word embeddings"};
  app.set_version_flag("--version", std::string(qcse_version()));
  app.require_subcommand(1);

  CommonFlags train_flags, method_flags, depth_flags, compare_flags, corpus_flags;
  std::string layer_range = "1-8";

  auto* train = app.add_subcommand("train", "Train one model and write its artifacts");
  add_common(train, train_flags);
  auto* method = app.add_subcommand("method-sweep", "Train once per context encoding");
  add_common(method, method_flags);
  auto* depth = app.add_subcommand("depth-sweep", "Train across ansatz depths");
  add_common(depth, depth_flags);
  depth->add_option("--layer-range", layer_range, "Inclusive depth range, e.g. 1-8");
  auto* compare = app.add_subcommand("compare-baseline",
                                     "Train the quantum model and CBOW side by side");
  add_common(compare, compare_flags);
  auto* gen = app.add_subcommand("gen-corpus", "Write corpus, vocabulary and pairs");
  add_common(gen, corpus_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) {
      return report(qcse_run_train(build_config(train_flags).dump().c_str(),
                                   train_flags.out.c_str()));
    }
    if (*method) {
      return report(qcse_run_method_sweep(
          build_config(method_flags).dump().c_str(), method_flags.out.c_str()));
    }
    if (*depth) {
      const auto bounds = split(layer_range, '-');
      if (bounds.empty() || bounds.size() > 2) {
        std::cerr << "error: --layer-range expects FIRST-LAST\n";
        return 2;
      }
      const int first = std::stoi(bounds.front());
      const int last = std::stoi(bounds.back());
      char* table = nullptr;
      const auto status =
          qcse_run_depth_sweep(build_config(depth_flags).dump().c_str(), first,
                               last, depth_flags.out.c_str(), &table);
      print_and_free(table);
      return report(status);
    }
    if (*compare) {
      char* table = nullptr;
      const auto status = qcse_run_compare_baseline(
          build_config(compare_flags).dump().c_str(), compare_flags.out.c_str(),
          &table);
      print_and_free(table);
      return report(status);
    }
    if (*gen) {
      return report(qcse_generate_corpus(
          build_config(corpus_flags).dump().c_str(), corpus_flags.out.c_str()));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
