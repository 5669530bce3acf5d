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

// Context matrices and vectors built from a window of vocabulary indices,
// and their reshaping into per-layer rotation-angle schedules.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcse::context {

enum class Method {
  kExpDecaySinusoidal,
  kIndexDiagonal,
  kPositionalPhaseShift,
  kHashModulation,
  kAngularShiftVector,
};

inline constexpr Method kAllMethods[] = {
    Method::kExpDecaySinusoidal, Method::kIndexDiagonal,
    Method::kPositionalPhaseShift, Method::kHashModulation,
    Method::kAngularShiftVector};

// Stable identifiers used in configs and CSV headers:
// exp-decay-sin, index-diagonal, phase-shift, hash, angular-vector.
std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

struct Hyperparams {
  double alpha = 0.5;
  double omega = 1.0;
  double delta = 1.0;
  std::int64_t prime = 31;
  std::int64_t hash_space = 65536;

  // Throws kConfiguration when a field is out of its domain.
  void validate() const;
};

bool is_prime(std::int64_t value);

struct Window {
  std::vector<int> indices;
  int vocab_size = 0;

  // Throws kInvalidContext for an empty window, a non-positive vocabulary
  // size, or an index outside [0, vocab_size).
  void validate() const;
  double angle(std::size_t position) const;
};

// Row-major n x n matrix.
struct Matrix {
  std::size_t n = 0;
  std::vector<double> entries;

  double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

Matrix exp_decay_sinusoidal(const Window& w, const Hyperparams& h);
Matrix index_diagonal(const Window& w, const Hyperparams& h);
Matrix positional_phase_shift(const Window& w, const Hyperparams& h);
Matrix hash_modulation(const Window& w, const Hyperparams& h);
std::vector<double> angular_shift_vector(const Window& w, const Hyperparams& h);

// h_i = (idx_i * p) mod N.
std::int64_t hash_index(int index, const Hyperparams& h);

// Flat row-major values of whichever representation `method` produces.
std::vector<double> encode(Method method, const Window& w,
                           const Hyperparams& h);

// L layers of 2m angles. For qubit q in layer l, entry 2q drives RX and
// entry 2q+1 drives RZ.
class Schedule {
 public:
  Schedule(int num_qubits, std::vector<double> flat_padded);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t num_layers() const noexcept {
    return values_.size() / (2 * static_cast<std::size_t>(num_qubits_));
  }
  std::span<const double> layer(std::size_t l) const;
  double rx_angle(std::size_t l, int q) const { return layer(l)[2 * q]; }
  double rz_angle(std::size_t l, int q) const { return layer(l)[2 * q + 1]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  int num_qubits_;
  std::vector<double> values_;
};

// Cuts `values` into chunks of 2m and zero-pads the last chunk.
// Throws kInvalidContext on empty input and kConfiguration when m < 2.
Schedule reshape_to_schedule(std::span<const double> values, int num_qubits);

}  // namespace qcse::context
