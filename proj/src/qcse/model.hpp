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

// The context-sensitive embedding circuit: Hadamards, L context-encoding
// layers (RX/RZ per qubit then a CNOT cascade), M trainable ansatz layers
// (RX/RZ per qubit then a CRZ cascade), and a per-qubit P(|1>) readout.
//
// Qubit q here is qubit q+1 in 1-based circuit diagrams.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcse/context.hpp"
#include "qcse/qsim.hpp"
#include "qcse/random.hpp"

namespace qcse::model {

struct ModelConfig {
  int num_qubits = 5;
  int layers = 3;
  context::Method method = context::Method::kExpDecaySinusoidal;
  context::Hyperparams hyperparams;

  // Throws kConfiguration for m outside [2, 20] or M < 1.
  void validate() const;
  // Throws kCapacity when the vocabulary does not fit in m qubits.
  void check_capacity(int vocab_size) const;
};

// Trainable angles, layer-major. Within a layer the first 2m values are the
// rotations (2q -> RX on q, 2q+1 -> RZ on q) and the last m-1 are the CRZ
// angles between q and q+1.
class AnsatzParams {
 public:
  AnsatzParams(int num_qubits, int layers);
  AnsatzParams(int num_qubits, int layers, std::vector<double> values);

  static AnsatzParams random(int num_qubits, int layers, Rng& rng);

  int num_qubits() const noexcept { return num_qubits_; }
  int layers() const noexcept { return layers_; }
  std::size_t per_layer() const noexcept { return 3 * num_qubits_ - 1; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double& operator[](std::size_t k) { return values_[k]; }
  double operator[](std::size_t k) const { return values_[k]; }

  std::span<const double> rot(int layer) const;
  std::span<const double> crz(int layer) const;

  bool operator==(const AnsatzParams&) const = default;

 private:
  int num_qubits_;
  int layers_;
  std::vector<double> values_;
};

std::size_t trainable_parameter_count(int num_qubits, int layers);

struct Prediction {
  std::vector<double> probs_one;
};

std::vector<qsim::GateOp> build_encoding_ops(const context::Schedule& schedule);

// Op k of the result is driven by parameter k of `params`.
std::vector<qsim::GateOp> build_ansatz_ops(const AnsatzParams& params);

context::Schedule make_schedule(const context::Window& window,
                                const ModelConfig& cfg);

// State after the encoding block for `window`.
qsim::StateVector encode_state(const context::Window& window,
                               const ModelConfig& cfg);

Prediction forward(const context::Window& window, const AnsatzParams& params,
                   const ModelConfig& cfg);

struct GateCounts {
  long context = 0;
  long ansatz = 0;
  long total = 0;
};

GateCounts count_gates(int num_qubits, int ansatz_layers, int encoding_layers);

// Versioned JSON document holding the config and trained angles.
std::string params_to_json(const ModelConfig& cfg, const AnsatzParams& params);
// Throws kConfiguration on malformed documents or mismatched shapes.
std::pair<ModelConfig, AnsatzParams> params_from_json(const std::string& text);

}  // namespace qcse::model
