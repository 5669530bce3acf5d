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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace qcse {

class Adam {
 public:
  struct Options {
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
  };

  Adam(std::size_t size, Options options)
      : options_(options), m_(size, 0.0), v_(size, 0.0) {}

  void step(std::span<double> params, std::span<const double> grad) {
    ++t_;
    const double bc1 = 1.0 - std::pow(options_.beta1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(options_.beta2, static_cast<double>(t_));
    for (std::size_t k = 0; k < params.size(); ++k) {
      m_[k] = options_.beta1 * m_[k] + (1.0 - options_.beta1) * grad[k];
      v_[k] = options_.beta2 * v_[k] + (1.0 - options_.beta2) * grad[k] * grad[k];
      const double m_hat = m_[k] / bc1;
      const double v_hat = v_[k] / bc2;
      params[k] -= options_.learning_rate * m_hat /
                   (std::sqrt(v_hat) + options_.epsilon);
    }
  }

  long steps() const noexcept { return t_; }

 private:
  Options options_;
  std::vector<double> m_;
  std::vector<double> v_;
  long t_ = 0;
};

}  // namespace qcse
