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

#include "qcse/context.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcse/error.hpp"

namespace qcse::context {

namespace {

using std::numbers::pi;

double decay(const Hyperparams& h, std::size_t i, std::size_t j) {
  const double dist = i > j ? static_cast<double>(i - j)
                            : static_cast<double>(j - i);
  return std::exp(-h.alpha * dist);
}

template <typename Entry>
Matrix build(const Window& w, const Hyperparams& h, Entry entry) {
  w.validate();
  h.validate();
  Matrix c;
  c.n = w.indices.size();
  c.entries.resize(c.n * c.n);
  for (std::size_t i = 0; i < c.n; ++i) {
    for (std::size_t j = 0; j < c.n; ++j) {
      c.entries[i * c.n + j] = entry(i, j);
    }
  }
  return c;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kExpDecaySinusoidal: return "exp-decay-sin";
    case Method::kIndexDiagonal: return "index-diagonal";
    case Method::kPositionalPhaseShift: return "phase-shift";
    case Method::kHashModulation: return "hash";
    case Method::kAngularShiftVector: return "angular-vector";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

void Hyperparams::validate() const {
  if (!(alpha > 0.0) || !(omega > 0.0) || !(delta > 0.0)) {
    throw Error(ErrorCode::kConfiguration,
                "alpha, omega and delta must be strictly positive");
  }
  if (!is_prime(prime)) {
    throw Error(ErrorCode::kConfiguration,
                "hash multiplier " + std::to_string(prime) + " is not prime");
  }
  if (hash_space < 2) {
    throw Error(ErrorCode::kConfiguration, "hash space must be at least 2");
  }
}

void Window::validate() const {
  if (indices.empty()) {
    throw Error(ErrorCode::kInvalidContext, "context window is empty");
  }
  if (vocab_size <= 0) {
    throw Error(ErrorCode::kInvalidContext, "vocabulary size must be positive");
  }
  for (int idx : indices) {
    if (idx < 0 || idx >= vocab_size) {
      throw Error(ErrorCode::kInvalidContext,
                  "context index " + std::to_string(idx) +
                      " outside vocabulary of size " +
                      std::to_string(vocab_size));
    }
  }
}

double Window::angle(std::size_t position) const {
  return static_cast<double>(indices[position]) * 2.0 * pi /
         static_cast<double>(vocab_size);
}

Matrix exp_decay_sinusoidal(const Window& w, const Hyperparams& h) {
  return build(w, h, [&](std::size_t i, std::size_t j) {
    const double ti = w.angle(i);
    return decay(h, i, j) * std::sin(h.omega * ti) *
               std::cos(h.omega * w.angle(j)) +
           ti;
  });
}

Matrix index_diagonal(const Window& w, const Hyperparams& h) {
  return build(w, h, [&](std::size_t i, std::size_t j) {
    if (i == j) return std::log(1.0 + static_cast<double>(w.indices[i]));
    const double ti = w.angle(i);
    return decay(h, i, j) * std::sin(h.omega * ti) + ti;
  });
}

Matrix positional_phase_shift(const Window& w, const Hyperparams& h) {
  return build(w, h, [&](std::size_t i, std::size_t j) {
    const double ti = w.angle(i);
    return decay(h, i, j) *
               std::sin(h.omega * static_cast<double>(i) + h.delta * ti) +
           ti;
  });
}

std::int64_t hash_index(int index, const Hyperparams& h) {
  return (static_cast<std::int64_t>(index) * h.prime) % h.hash_space;
}

// The integer hash is used directly as a phase in radians.
Matrix hash_modulation(const Window& w, const Hyperparams& h) {
  return build(w, h, [&](std::size_t i, std::size_t j) {
    const double hi = static_cast<double>(hash_index(w.indices[i], h));
    return decay(h, i, j) * std::sin(h.omega * static_cast<double>(i) + hi) +
           w.angle(i);
  });
}

std::vector<double> angular_shift_vector(const Window& w,
                                         const Hyperparams& h) {
  w.validate();
  h.validate();
  std::vector<double> v(w.indices.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = h.omega * w.angle(i);
  return v;
}

std::vector<double> encode(Method method, const Window& w,
                           const Hyperparams& h) {
  switch (method) {
    case Method::kExpDecaySinusoidal:
      return exp_decay_sinusoidal(w, h).entries;
    case Method::kIndexDiagonal:
      return index_diagonal(w, h).entries;
    case Method::kPositionalPhaseShift:
      return positional_phase_shift(w, h).entries;
    case Method::kHashModulation:
      return hash_modulation(w, h).entries;
    case Method::kAngularShiftVector:
      return angular_shift_vector(w, h);
  }
  throw Error(ErrorCode::kConfiguration, "unknown context method");
}

Schedule::Schedule(int num_qubits, std::vector<double> flat_padded)
    : num_qubits_(num_qubits), values_(std::move(flat_padded)) {
  const std::size_t width = 2 * static_cast<std::size_t>(num_qubits_);
  if (num_qubits_ < 1 || values_.size() % width != 0) {
    throw Error(ErrorCode::kShape, "schedule size " +
                                       std::to_string(values_.size()) +
                                       " is not a multiple of 2m");
  }
}

std::span<const double> Schedule::layer(std::size_t l) const {
  const std::size_t width = 2 * static_cast<std::size_t>(num_qubits_);
  return std::span<const double>(values_).subspan(l * width, width);
}

Schedule reshape_to_schedule(std::span<const double> values, int num_qubits) {
  if (num_qubits < 2) {
    throw Error(ErrorCode::kConfiguration,
                "schedule needs at least 2 qubits, got " +
                    std::to_string(num_qubits));
  }
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidContext, "cannot reshape empty context");
  }
  const std::size_t width = 2 * static_cast<std::size_t>(num_qubits);
  const std::size_t layers = (values.size() + width - 1) / width;
  std::vector<double> flat(layers * width, 0.0);
  std::copy(values.begin(), values.end(), flat.begin());
  return Schedule(num_qubits, std::move(flat));
}

}  // namespace qcse::context
