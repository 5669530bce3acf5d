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

#include "qcse/qsim.hpp"

#include <cmath>
#include <string>

#include "qcse/error.hpp"

namespace qcse::qsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Amplitude kI{0.0, 1.0};

void apply_single(std::span<Amplitude> amps, int target,
                  const Amplitude (&u)[2][2]) {
  const std::size_t stride = std::size_t{1} << target;
  const std::size_t n = amps.size();
  for (std::size_t block = 0; block < n; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      const Amplitude a0 = amps[i];
      const Amplitude a1 = amps[i + stride];
      amps[i] = u[0][0] * a0 + u[0][1] * a1;
      amps[i + stride] = u[1][0] * a0 + u[1][1] * a1;
    }
  }
}

void apply_controlled(std::span<Amplitude> amps, int control, int target,
                      const Amplitude (&u)[2][2]) {
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t n = amps.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cbit) == 0 || (i & tbit) != 0) continue;
    const Amplitude a0 = amps[i];
    const Amplitude a1 = amps[i | tbit];
    amps[i] = u[0][0] * a0 + u[0][1] * a1;
    amps[i | tbit] = u[1][0] * a0 + u[1][1] * a1;
  }
}

}  // namespace

void apply_unchecked(std::span<Amplitude> amps, const GateOp& op) {
  Amplitude u[2][2];
  gate_matrix(op.kind, op.angle, u);
  if (is_two_qubit(op.kind)) {
    apply_controlled(amps, op.control, op.target, u);
  } else {
    apply_single(amps, op.target, u);
  }
}

// Every kind is either self-inverse or a rotation undone by negating it.
void apply_inverse_unchecked(std::span<Amplitude> amps, const GateOp& op) {
  GateOp inv = op;
  if (is_parameterized(op.kind)) inv.angle = -op.angle;
  apply_unchecked(amps, inv);
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CRZ: return "CRZ";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::CZ ||
         kind == GateKind::CRZ;
}

bool is_parameterized(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RZ ||
         kind == GateKind::CRZ;
}

void gate_matrix(GateKind kind, double angle, Amplitude (&u)[2][2]) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (kind) {
    case GateKind::H:
      u[0][0] = kInvSqrt2; u[0][1] = kInvSqrt2;
      u[1][0] = kInvSqrt2; u[1][1] = -kInvSqrt2;
      return;
    case GateKind::X:
    case GateKind::CNOT:
      u[0][0] = 0.0; u[0][1] = 1.0;
      u[1][0] = 1.0; u[1][1] = 0.0;
      return;
    case GateKind::Y:
      u[0][0] = 0.0; u[0][1] = -kI;
      u[1][0] = kI;  u[1][1] = 0.0;
      return;
    case GateKind::Z:
    case GateKind::CZ:
      u[0][0] = 1.0; u[0][1] = 0.0;
      u[1][0] = 0.0; u[1][1] = -1.0;
      return;
    case GateKind::RX:
      u[0][0] = c;       u[0][1] = -kI * s;
      u[1][0] = -kI * s; u[1][1] = c;
      return;
    case GateKind::RZ:
    case GateKind::CRZ:
      u[0][0] = Amplitude(c, -s); u[0][1] = 0.0;
      u[1][0] = 0.0;              u[1][1] = Amplitude(c, s);
      return;
  }
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::kConfiguration,
                "qubit count " + std::to_string(num_qubits) +
                    " outside supported range [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{});
  amps_[0] = 1.0;
}

void StateVector::validate(const GateOp& op) const {
  auto in_range = [this](int q) { return q >= 0 && q < num_qubits_; };
  if (!in_range(op.target)) {
    throw Error(ErrorCode::kIndex, "target qubit " +
                                       std::to_string(op.target) +
                                       " out of range");
  }
  if (is_two_qubit(op.kind)) {
    if (!in_range(op.control)) {
      throw Error(ErrorCode::kIndex, "control qubit " +
                                         std::to_string(op.control) +
                                         " out of range");
    }
    if (op.control == op.target) {
      throw Error(ErrorCode::kIndex, "control and target coincide");
    }
  }
}

void StateVector::apply(const GateOp& op) {
  validate(op);
  apply_unchecked(amps_, op);
}

void StateVector::apply(std::span<const GateOp> ops) {
  for (const auto& op : ops) apply(op);
}

void StateVector::apply_inverse(const GateOp& op) {
  validate(op);
  apply_inverse_unchecked(amps_, op);
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

StateVector new_zero_state(int num_qubits) { return StateVector(num_qubits); }

StateVector apply_gate(StateVector state, const GateOp& op) {
  state.apply(op);
  return state;
}

double expectation_z(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw Error(ErrorCode::kIndex,
                "qubit " + std::to_string(qubit) + " out of range");
  }
  const std::size_t bit = std::size_t{1} << qubit;
  const auto amps = state.amplitudes();
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    total += (i & bit) ? -p : p;
  }
  return total;
}

std::vector<double> qubit_probabilities(const StateVector& state) {
  const int m = state.num_qubits();
  const auto amps = state.amplitudes();
  std::vector<double> z(m, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    for (int q = 0; q < m; ++q) z[q] += ((i >> q) & 1u) ? -p : p;
  }
  std::vector<double> probs(m);
  for (int q = 0; q < m; ++q) probs[q] = (1.0 - z[q]) / 2.0;
  return probs;
}

}  // namespace qcse::qsim
