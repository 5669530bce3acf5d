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

// Test-only reference simulator: every gate is expanded to its full
// 2^m x 2^m matrix with explicit Kronecker products and applied by dense
// matrix-vector multiplication. Shares no code with the strided kernels.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "qcse/qsim.hpp"
#include "qcse/random.hpp"

namespace qcse::testing {

using Complex = std::complex<double>;

struct Dense {
  std::size_t dim = 0;
  std::vector<Complex> a;  // row-major

  Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  Complex at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Dense identity(std::size_t dim) {
  Dense d{dim, std::vector<Complex>(dim * dim)};
  for (std::size_t i = 0; i < dim; ++i) d.at(i, i) = 1.0;
  return d;
}

inline Dense kron(const Dense& x, const Dense& y) {
  Dense out{x.dim * y.dim, std::vector<Complex>(x.dim * y.dim * x.dim * y.dim)};
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < y.dim; ++k)
        for (std::size_t l = 0; l < y.dim; ++l)
          out.at(i * y.dim + k, j * y.dim + l) = x.at(i, j) * y.at(k, l);
  return out;
}

inline Dense add(const Dense& x, const Dense& y) {
  Dense out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

inline Dense matmul(const Dense& x, const Dense& y) {
  Dense out{x.dim, std::vector<Complex>(x.dim * x.dim)};
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k)
      for (std::size_t j = 0; j < x.dim; ++j)
        out.at(i, j) += x.at(i, k) * y.at(k, j);
  return out;
}

inline Dense adjoint(const Dense& x) {
  Dense out{x.dim, std::vector<Complex>(x.a.size())};
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j) out.at(i, j) = std::conj(x.at(j, i));
  return out;
}

// Textbook 2x2 matrices, written out independently of qsim::gate_matrix.
inline Dense single_qubit_matrix(qsim::GateKind kind, double angle) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const double r = 1.0 / std::sqrt(2.0);
  using K = qsim::GateKind;
  switch (kind) {
    case K::H: return Dense{2, {r, r, r, -r}};
    case K::X: case K::CNOT: return Dense{2, {0.0, 1.0, 1.0, 0.0}};
    case K::Y: return Dense{2, {0.0, -i, i, 0.0}};
    case K::Z: case K::CZ: return Dense{2, {1.0, 0.0, 0.0, -1.0}};
    case K::RX: return Dense{2, {c, -i * s, -i * s, c}};
    case K::RZ: case K::CRZ:
      return Dense{2, {std::exp(-i * angle / 2.0), 0.0, 0.0, std::exp(i * angle / 2.0)}};
  }
  return identity(2);
}

// Little-endian: qubit 0 is the rightmost Kronecker factor.
inline Dense embed(const qsim::GateOp& op, int m) {
  const Dense u = single_qubit_matrix(op.kind, op.angle);
  if (!qsim::is_two_qubit(op.kind)) {
    Dense full{1, {1.0}};
    for (int q = m - 1; q >= 0; --q) full = kron(full, q == op.target ? u : identity(2));
    return full;
  }
  const Dense p0{2, {1.0, 0.0, 0.0, 0.0}};
  const Dense p1{2, {0.0, 0.0, 0.0, 1.0}};
  Dense off{1, {1.0}}, on{1, {1.0}};
  for (int q = m - 1; q >= 0; --q) {
    if (q == op.control) {
      off = kron(off, p0);
      on = kron(on, p1);
    } else if (q == op.target) {
      off = kron(off, identity(2));
      on = kron(on, u);
    } else {
      off = kron(off, identity(2));
      on = kron(on, identity(2));
    }
  }
  return add(off, on);
}

inline std::vector<Complex> apply_dense(const Dense& u, const std::vector<Complex>& v) {
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < u.dim; ++i)
    for (std::size_t j = 0; j < u.dim; ++j) out[i] += u.at(i, j) * v[j];
  return out;
}

inline double brute_expectation_z(const std::vector<Complex>& v, int q) {
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int bit = static_cast<int>((i >> q) & 1u);
    total += (bit ? -1.0 : 1.0) * std::norm(v[i]);
  }
  return total;
}

inline constexpr qsim::GateKind kAllKinds[] = {
    qsim::GateKind::H,  qsim::GateKind::X,    qsim::GateKind::Y,
    qsim::GateKind::Z,  qsim::GateKind::RX,   qsim::GateKind::RZ,
    qsim::GateKind::CNOT, qsim::GateKind::CZ, qsim::GateKind::CRZ};

inline qsim::GateOp random_gate(Rng& rng, int m) {
  const int choices = m >= 2 ? 9 : 6;
  const auto kind = kAllKinds[rng.below(choices)];
  const double angle = rng.uniform(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  const int target = static_cast<int>(rng.below(m));
  if (!qsim::is_two_qubit(kind)) return qsim::GateOp::single(kind, target, angle);
  int control = static_cast<int>(rng.below(m - 1));
  if (control >= target) ++control;
  return qsim::GateOp::controlled(kind, control, target, angle);
}

inline std::vector<qsim::GateOp> random_circuit(Rng& rng, int m, int length) {
  std::vector<qsim::GateOp> ops;
  for (int g = 0; g < length; ++g) ops.push_back(random_gate(rng, m));
  return ops;
}

}  // namespace qcse::testing
