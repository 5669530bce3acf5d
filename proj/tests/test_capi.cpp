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

#include "qcse/qcse.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <unistd.h>
#include <vector>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(qcse_version(), "1.0.0");
  EXPECT_STREQ(qcse_status_name(QCSE_OK), "ok");
  EXPECT_STRNE(qcse_status_name(QCSE_ERR_CAPACITY), qcse_status_name(QCSE_ERR_SHAPE));
}

TEST(CApi, StateLifecycle) {
  qcse_state* s = nullptr;
  ASSERT_EQ(qcse_state_create(2, &s), QCSE_OK);
  EXPECT_EQ(qcse_state_num_qubits(s), 2);
  EXPECT_EQ(qcse_state_apply(s, QCSE_GATE_H, -1, 0, 0.0), QCSE_OK);
  EXPECT_EQ(qcse_state_apply(s, QCSE_GATE_CNOT, 0, 1, 0.0), QCSE_OK);
  double amps[8];
  ASSERT_EQ(qcse_state_amplitudes(s, amps, 8), QCSE_OK);
  EXPECT_NEAR(amps[0], 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(amps[6], 1 / std::sqrt(2.0), 1e-15);
  double z = 0.0;
  ASSERT_EQ(qcse_state_expectation_z(s, 1, &z), QCSE_OK);
  EXPECT_NEAR(z, 0.0, 1e-15);
  double probs[2];
  ASSERT_EQ(qcse_state_probabilities(s, probs, 2), QCSE_OK);
  EXPECT_NEAR(probs[0], 0.5, 1e-15);

  EXPECT_EQ(qcse_state_apply(s, QCSE_GATE_X, -1, 7, 0.0), QCSE_ERR_INDEX);
  EXPECT_NE(std::strlen(qcse_last_error()), 0u);
  EXPECT_EQ(qcse_state_amplitudes(s, amps, 7), QCSE_ERR_SHAPE);
  EXPECT_EQ(qcse_state_expectation_z(s, 0, nullptr), QCSE_ERR_NULL_ARGUMENT);
  qcse_state_destroy(s);
  qcse_state_destroy(nullptr);

  EXPECT_EQ(qcse_state_create(0, &s), QCSE_ERR_CONFIG);
  EXPECT_EQ(qcse_state_create(2, nullptr), QCSE_ERR_NULL_ARGUMENT);
}

TEST(CApi, ContextAndStructure) {
  qcse_hyperparams hp;
  qcse_default_hyperparams(&hp);
  EXPECT_EQ(hp.prime, 31);
  EXPECT_EQ(hp.hash_space, 65536);
  const int idx[] = {1, 2};
  double out[4];
  size_t written = 0;
  ASSERT_EQ(qcse_context_encode(QCSE_METHOD_EXP_DECAY_SIN, idx, 2, 8, &hp, out, 4, &written),
            QCSE_OK);
  EXPECT_EQ(written, 4u);
  EXPECT_NEAR(out[1], std::atan(1.0), 1e-12);
  EXPECT_EQ(qcse_context_encode(QCSE_METHOD_EXP_DECAY_SIN, idx, 2, 8, &hp, out, 3, &written),
            QCSE_ERR_SHAPE);
  EXPECT_EQ(qcse_context_encode(QCSE_METHOD_HASH, idx, 0, 8, &hp, out, 4, &written),
            QCSE_ERR_INVALID_CONTEXT);
  EXPECT_EQ(qcse_context_encode(QCSE_METHOD_HASH, idx, 2, 8, nullptr, out, 4, &written),
            QCSE_OK);

  size_t layers = 0;
  ASSERT_EQ(qcse_encoding_layers(QCSE_METHOD_INDEX_DIAGONAL, 4, 5, &layers), QCSE_OK);
  EXPECT_EQ(layers, 2u);
  ASSERT_EQ(qcse_encoding_layers(QCSE_METHOD_ANGULAR_VECTOR, 4, 5, &layers), QCSE_OK);
  EXPECT_EQ(layers, 1u);

  EXPECT_EQ(qcse_qubits_for_vocab(34), 6);
  EXPECT_EQ(qcse_trainable_params(5, 3), 42);
  qcse_gate_counts g;
  ASSERT_EQ(qcse_count_gates(6, 6, 2, &g), QCSE_OK);
  EXPECT_EQ(g.total, 142);

  unsigned char bits[5];
  ASSERT_EQ(qcse_target_bits(6, 5, bits, 5), QCSE_OK);
  EXPECT_EQ(bits[2], 1);
  EXPECT_EQ(bits[4], 0);
  EXPECT_EQ(qcse_target_bits(32, 5, bits, 5), QCSE_ERR_CAPACITY);
}

TEST(CApi, ModelRoundTripAndGradients) {
  qcse_model* model = nullptr;
  ASSERT_EQ(qcse_model_create(3, 2, QCSE_METHOD_PHASE_SHIFT, nullptr, 42, &model), QCSE_OK);
  EXPECT_EQ(qcse_model_num_params(model), 16u);
  EXPECT_EQ(qcse_model_num_qubits(model), 3);

  const int ctx[] = {1, 4, 6, 2};
  double probs[3];
  ASSERT_EQ(qcse_model_forward(model, ctx, 4, 8, probs, 3), QCSE_OK);
  for (double p : probs) EXPECT_TRUE(p >= 0.0 && p <= 1.0);

  double loss_ps = 0.0, loss_fd = 0.0;
  std::vector<double> g_ps(16), g_fd(16);
  ASSERT_EQ(qcse_model_loss_gradient(model, ctx, 4, 8, 5, "parameter-shift", 1e-4, &loss_ps,
                                     g_ps.data(), 16),
            QCSE_OK);
  ASSERT_EQ(qcse_model_loss_gradient(model, ctx, 4, 8, 5, "finite-difference", 1e-4, &loss_fd,
                                     g_fd.data(), 16),
            QCSE_OK);
  EXPECT_NEAR(loss_ps, loss_fd, 1e-12);
  for (int k = 0; k < 16; ++k) EXPECT_NEAR(g_ps[k], g_fd[k], 1e-4);
  EXPECT_EQ(qcse_model_loss_gradient(model, ctx, 4, 8, 5, "guess", 1e-4, &loss_ps, nullptr, 0),
            QCSE_ERR_CONFIG);
  EXPECT_EQ(qcse_model_loss_gradient(model, ctx, 4, 8, 9, "adjoint", 1e-4, &loss_ps, nullptr, 0),
            QCSE_ERR_CAPACITY);

  char* json = nullptr;
  ASSERT_EQ(qcse_model_to_json(model, &json), QCSE_OK);
  qcse_model* copy = nullptr;
  ASSERT_EQ(qcse_model_load(json, &copy), QCSE_OK);
  qcse_string_free(json);
  double probs2[3];
  ASSERT_EQ(qcse_model_forward(copy, ctx, 4, 8, probs2, 3), QCSE_OK);
  for (int q = 0; q < 3; ++q) EXPECT_EQ(probs[q], probs2[q]);

  std::vector<double> zeros(16, 0.0);
  ASSERT_EQ(qcse_model_set_params(copy, zeros.data(), 16), QCSE_OK);
  EXPECT_EQ(qcse_model_set_params(copy, zeros.data(), 15), QCSE_ERR_SHAPE);
  std::vector<double> got(16, 1.0);
  ASSERT_EQ(qcse_model_get_params(copy, got.data(), 16), QCSE_OK);
  EXPECT_EQ(got, zeros);

  EXPECT_EQ(qcse_model_load("{", &copy), QCSE_ERR_CONFIG);
  qcse_model_destroy(copy);
  qcse_model_destroy(model);
}

TEST(CApi, Runners) {
  const fs::path dir =
      fs::temp_directory_path() / ("qcse_capi_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const char* cfg =
      R"({"corpus":{"synthetic":{"sentences":10,"vocab":9,"length":4}},"train":{"epochs":2}})";
  ASSERT_EQ(qcse_run_train(cfg, (dir / "t").c_str()), QCSE_OK) << qcse_last_error();
  EXPECT_TRUE(fs::exists(dir / "t" / "manifest.json"));

  char* table = nullptr;
  ASSERT_EQ(qcse_run_depth_sweep(cfg, 1, 2, (dir / "d").c_str(), &table), QCSE_OK);
  ASSERT_NE(table, nullptr);
  EXPECT_NE(std::string(table).find("QCSE"), std::string::npos);
  qcse_string_free(table);

  char* normalized = nullptr;
  ASSERT_EQ(qcse_config_normalize(nullptr, &normalized), QCSE_OK);
  EXPECT_NE(std::string(normalized).find("\"epochs\""), std::string::npos);
  qcse_string_free(normalized);

  EXPECT_EQ(qcse_run_train(R"({"model":{"qubits":2}})", (dir / "x").c_str()),
            QCSE_ERR_CAPACITY);
  EXPECT_EQ(qcse_run_train(cfg, nullptr), QCSE_ERR_NULL_ARGUMENT);
  fs::remove_all(dir);
}

}  // namespace
