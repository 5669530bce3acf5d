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

// Dense statevector simulator.
//
// Basis-state indices are little-endian: qubit q corresponds to bit q of the
// amplitude index, so qubit 0 is the least significant bit.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qcse::qsim {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 20;

enum class GateKind { H, X, Y, Z, RX, RZ, CNOT, CZ, CRZ };

std::string_view gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);
bool is_parameterized(GateKind kind);

// A single gate application. For two-qubit kinds `control` is the control
// qubit and `target` the target; single-qubit kinds ignore `control`.
struct GateOp {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  static GateOp single(GateKind kind, int target, double angle = 0.0) {
    return GateOp{kind, target, -1, angle};
  }
  static GateOp controlled(GateKind kind, int control, int target,
                           double angle = 0.0) {
    return GateOp{kind, target, control, angle};
  }
};

class StateVector {
 public:
  // |0...0> on `num_qubits` qubits. Throws kConfiguration outside [1, 20].
  explicit StateVector(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

  // Throws kIndex when the op references a qubit outside [0, m) or repeats
  // a qubit.
  void apply(const GateOp& op);
  void apply(std::span<const GateOp> ops);

  // Applies the inverse of `op`.
  void apply_inverse(const GateOp& op);

  double norm_squared() const;

 private:
  void validate(const GateOp& op) const;

  int num_qubits_;
  std::vector<Amplitude> amps_;
};

// Applies `op` (or its inverse) to a raw amplitude buffer of length 2^m
// without validation or normalization requirements.
void apply_unchecked(std::span<Amplitude> amps, const GateOp& op);
void apply_inverse_unchecked(std::span<Amplitude> amps, const GateOp& op);

StateVector new_zero_state(int num_qubits);
StateVector apply_gate(StateVector state, const GateOp& op);

// <Z_q>, in [-1, 1].
double expectation_z(const StateVector& state, int qubit);

// P(|1>_q) = (1 - <Z_q>) / 2 for every qubit q.
std::vector<double> qubit_probabilities(const StateVector& state);

// 2x2 unitary of a single-qubit kind, or the target-block of a controlled
// kind (X for CNOT, Z for CZ, RZ for CRZ).
void gate_matrix(GateKind kind, double angle, Amplitude (&u)[2][2]);

}  // namespace qcse::qsim
