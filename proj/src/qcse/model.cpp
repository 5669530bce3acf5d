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

#include "qcse/model.hpp"

#include <numbers>

#include "json.hpp"
#include "qcse/error.hpp"

namespace qcse::model {

using qsim::GateKind;
using qsim::GateOp;

namespace {

constexpr int kParamsFormatVersion = 1;

}  // namespace

void ModelConfig::validate() const {
  if (num_qubits < 2 || num_qubits > qsim::kMaxQubits) {
    throw Error(ErrorCode::kConfiguration,
                "model needs between 2 and 20 qubits, got " +
                    std::to_string(num_qubits));
  }
  if (layers < 1) {
    throw Error(ErrorCode::kConfiguration, "ansatz needs at least one layer");
  }
  hyperparams.validate();
}

void ModelConfig::check_capacity(int vocab_size) const {
  if (static_cast<long long>(vocab_size) > (1LL << num_qubits)) {
    throw Error(ErrorCode::kCapacity,
                "vocabulary of " + std::to_string(vocab_size) +
                    " words does not fit in " + std::to_string(num_qubits) +
                    " qubits");
  }
}

AnsatzParams::AnsatzParams(int num_qubits, int layers)
    : AnsatzParams(num_qubits, layers,
                   std::vector<double>(
                       trainable_parameter_count(num_qubits, layers), 0.0)) {}

AnsatzParams::AnsatzParams(int num_qubits, int layers,
                           std::vector<double> values)
    : num_qubits_(num_qubits), layers_(layers), values_(std::move(values)) {
  if (num_qubits < 1 || layers < 0) {
    throw Error(ErrorCode::kConfiguration, "invalid ansatz shape");
  }
  if (values_.size() != trainable_parameter_count(num_qubits, layers)) {
    throw Error(ErrorCode::kShape,
                "expected " +
                    std::to_string(trainable_parameter_count(num_qubits, layers)) +
                    " ansatz angles, got " + std::to_string(values_.size()));
  }
}

AnsatzParams AnsatzParams::random(int num_qubits, int layers, Rng& rng) {
  AnsatzParams p(num_qubits, layers);
  for (auto& v : p.values_) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return p;
}

std::span<const double> AnsatzParams::rot(int layer) const {
  return std::span<const double>(values_).subspan(layer * per_layer(),
                                                  2 * num_qubits_);
}

std::span<const double> AnsatzParams::crz(int layer) const {
  return std::span<const double>(values_).subspan(
      layer * per_layer() + 2 * num_qubits_, num_qubits_ - 1);
}

std::size_t trainable_parameter_count(int num_qubits, int layers) {
  return static_cast<std::size_t>(layers) * (3 * num_qubits - 1);
}

std::vector<GateOp> build_encoding_ops(const context::Schedule& schedule) {
  const int m = schedule.num_qubits();
  std::vector<GateOp> ops;
  ops.reserve(m + schedule.num_layers() * (3 * m - 1));
  for (int q = 0; q < m; ++q) ops.push_back(GateOp::single(GateKind::H, q));
  for (std::size_t l = 0; l < schedule.num_layers(); ++l) {
    for (int q = 0; q < m; ++q) {
      ops.push_back(GateOp::single(GateKind::RX, q, schedule.rx_angle(l, q)));
      ops.push_back(GateOp::single(GateKind::RZ, q, schedule.rz_angle(l, q)));
    }
    for (int q = 0; q + 1 < m; ++q) {
      ops.push_back(GateOp::controlled(GateKind::CNOT, q, q + 1));
    }
  }
  return ops;
}

std::vector<GateOp> build_ansatz_ops(const AnsatzParams& params) {
  const int m = params.num_qubits();
  std::vector<GateOp> ops;
  ops.reserve(params.size());
  for (int a = 0; a < params.layers(); ++a) {
    const auto rot = params.rot(a);
    const auto crz = params.crz(a);
    for (int q = 0; q < m; ++q) {
      ops.push_back(GateOp::single(GateKind::RX, q, rot[2 * q]));
      ops.push_back(GateOp::single(GateKind::RZ, q, rot[2 * q + 1]));
    }
    for (int q = 0; q + 1 < m; ++q) {
      ops.push_back(GateOp::controlled(GateKind::CRZ, q, q + 1, crz[q]));
    }
  }
  return ops;
}

context::Schedule make_schedule(const context::Window& window,
                                const ModelConfig& cfg) {
  const auto values = context::encode(cfg.method, window, cfg.hyperparams);
  return context::reshape_to_schedule(values, cfg.num_qubits);
}

qsim::StateVector encode_state(const context::Window& window,
                               const ModelConfig& cfg) {
  cfg.validate();
  qsim::StateVector state(cfg.num_qubits);
  state.apply(build_encoding_ops(make_schedule(window, cfg)));
  return state;
}

Prediction forward(const context::Window& window, const AnsatzParams& params,
                   const ModelConfig& cfg) {
  if (params.num_qubits() != cfg.num_qubits) {
    throw Error(ErrorCode::kShape, "ansatz width does not match config");
  }
  auto state = encode_state(window, cfg);
  state.apply(build_ansatz_ops(params));
  return Prediction{qsim::qubit_probabilities(state)};
}

GateCounts count_gates(int num_qubits, int ansatz_layers, int encoding_layers) {
  const long per_layer = 3L * num_qubits - 1;
  GateCounts g;
  g.context = per_layer * encoding_layers;
  g.ansatz = per_layer * ansatz_layers;
  g.total = g.context + g.ansatz + num_qubits;
  return g;
}

std::string params_to_json(const ModelConfig& cfg, const AnsatzParams& params) {
  nlohmann::json doc;
  doc["format"] = "qcse-params";
  doc["version"] = kParamsFormatVersion;
  doc["m"] = cfg.num_qubits;
  doc["M"] = cfg.layers;
  doc["method"] = std::string(context::method_name(cfg.method));
  doc["hyperparams"] = {{"alpha", cfg.hyperparams.alpha},
                        {"omega", cfg.hyperparams.omega},
                        {"delta", cfg.hyperparams.delta},
                        {"prime", cfg.hyperparams.prime},
                        {"hash_space", cfg.hyperparams.hash_space}};
  auto layers = nlohmann::json::array();
  for (int a = 0; a < params.layers(); ++a) {
    const auto rot = params.rot(a);
    const auto crz = params.crz(a);
    layers.push_back({{"rot", std::vector<double>(rot.begin(), rot.end())},
                      {"crz", std::vector<double>(crz.begin(), crz.end())}});
  }
  doc["layers"] = std::move(layers);
  return doc.dump(2);
}

std::pair<ModelConfig, AnsatzParams> params_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.value("format", "") != "qcse-params") {
      throw Error(ErrorCode::kConfiguration, "not a qcse-params document");
    }
    if (doc.at("version").get<int>() != kParamsFormatVersion) {
      throw Error(ErrorCode::kConfiguration, "unsupported params version");
    }
    ModelConfig cfg;
    cfg.num_qubits = doc.at("m").get<int>();
    cfg.layers = doc.at("M").get<int>();
    const auto name = doc.at("method").get<std::string>();
    const auto method = context::parse_method(name);
    if (!method) {
      throw Error(ErrorCode::kConfiguration, "unknown method '" + name + "'");
    }
    cfg.method = *method;
    const auto& hp = doc.at("hyperparams");
    cfg.hyperparams.alpha = hp.at("alpha").get<double>();
    cfg.hyperparams.omega = hp.at("omega").get<double>();
    cfg.hyperparams.delta = hp.at("delta").get<double>();
    cfg.hyperparams.prime = hp.at("prime").get<std::int64_t>();
    cfg.hyperparams.hash_space = hp.at("hash_space").get<std::int64_t>();
    cfg.validate();

    const auto& layers = doc.at("layers");
    if (layers.size() != static_cast<std::size_t>(cfg.layers)) {
      throw Error(ErrorCode::kShape, "layer count does not match M");
    }
    std::vector<double> values;
    for (const auto& layer : layers) {
      const auto rot = layer.at("rot").get<std::vector<double>>();
      const auto crz = layer.at("crz").get<std::vector<double>>();
      if (rot.size() != 2u * cfg.num_qubits ||
          crz.size() != static_cast<std::size_t>(cfg.num_qubits - 1)) {
        throw Error(ErrorCode::kShape, "layer angles do not match m");
      }
      values.insert(values.end(), rot.begin(), rot.end());
      values.insert(values.end(), crz.begin(), crz.end());
    }
    return {cfg, AnsatzParams(cfg.num_qubits, cfg.layers, std::move(values))};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfiguration,
                std::string("malformed params document: ") + e.what());
  }
}

}  // namespace qcse::model
