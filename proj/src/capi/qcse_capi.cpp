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

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "qcse/context.hpp"
#include "qcse/corpus.hpp"
#include "qcse/error.hpp"
#include "qcse/experiment.hpp"
#include "qcse/model.hpp"
#include "qcse/qsim.hpp"
#include "qcse/train.hpp"

struct qcse_state {
  qcse::qsim::StateVector state;
};

struct qcse_model {
  qcse::model::ModelConfig config;
  qcse::model::AnsatzParams params;
};

namespace {

thread_local std::string g_last_error;

qcse_status to_status(qcse::ErrorCode code) {
  using qcse::ErrorCode;
  switch (code) {
    case ErrorCode::kConfiguration: return QCSE_ERR_CONFIG;
    case ErrorCode::kIndex: return QCSE_ERR_INDEX;
    case ErrorCode::kShape: return QCSE_ERR_SHAPE;
    case ErrorCode::kCapacity: return QCSE_ERR_CAPACITY;
    case ErrorCode::kInvalidInput: return QCSE_ERR_INVALID_INPUT;
    case ErrorCode::kInvalidContext: return QCSE_ERR_INVALID_CONTEXT;
    case ErrorCode::kIo: return QCSE_ERR_IO;
  }
  return QCSE_ERR_INTERNAL;
}

qcse_status fail(qcse_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
qcse_status guarded(Fn&& fn) {
  try {
    fn();
    return QCSE_OK;
  } catch (const qcse::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QCSE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QCSE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QCSE_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qcse::context::Hyperparams to_hp(const qcse_hyperparams* hp) {
  qcse::context::Hyperparams h;
  if (hp) {
    h.alpha = hp->alpha;
    h.omega = hp->omega;
    h.delta = hp->delta;
    h.prime = hp->prime;
    h.hash_space = hp->hash_space;
  }
  return h;
}

qcse::context::Method to_method(qcse_method method) {
  if (method < QCSE_METHOD_EXP_DECAY_SIN || method > QCSE_METHOD_ANGULAR_VECTOR) {
    throw qcse::Error(qcse::ErrorCode::kConfiguration, "unknown method");
  }
  return qcse::context::kAllMethods[method];
}

qcse::qsim::GateKind to_gate(qcse_gate gate) {
  if (gate < QCSE_GATE_H || gate > QCSE_GATE_CRZ) {
    throw qcse::Error(qcse::ErrorCode::kConfiguration, "unknown gate");
  }
  return static_cast<qcse::qsim::GateKind>(gate);
}

void require(bool ok, const char* what) {
  if (!ok) throw qcse::Error(qcse::ErrorCode::kInvalidInput, what);
}

void require_len(size_t len, size_t needed) {
  if (len < needed) {
    throw qcse::Error(qcse::ErrorCode::kShape,
                      "output buffer holds " + std::to_string(len) +
                          " values, need " + std::to_string(needed));
  }
}

qcse::context::Window make_window(const int* context, size_t n,
                                  int vocab_size) {
  require(context != nullptr || n == 0, "context pointer is null");
  return qcse::context::Window{std::vector<int>(context, context + n),
                               vocab_size};
}

qcse::experiment::RunConfig parse_config(const char* config_json) {
  return qcse::experiment::RunConfig::from_json(config_json ? config_json : "");
}

}  // namespace

#define QCSE_REQUIRE_NONNULL(ptr)                                     \
  do {                                                                \
    if ((ptr) == nullptr) {                                           \
      return fail(QCSE_ERR_NULL_ARGUMENT, #ptr " must not be null");  \
    }                                                                 \
  } while (0)

extern "C" {

const char* qcse_version(void) { return qcse::experiment::kVersion; }

const char* qcse_last_error(void) { return g_last_error.c_str(); }

const char* qcse_status_name(qcse_status status) {
  switch (status) {
    case QCSE_OK: return "ok";
    case QCSE_ERR_CONFIG: return "configuration error";
    case QCSE_ERR_INDEX: return "index error";
    case QCSE_ERR_SHAPE: return "shape error";
    case QCSE_ERR_CAPACITY: return "capacity error";
    case QCSE_ERR_INVALID_INPUT: return "invalid input";
    case QCSE_ERR_INVALID_CONTEXT: return "invalid context";
    case QCSE_ERR_IO: return "i/o error";
    case QCSE_ERR_NULL_ARGUMENT: return "null argument";
    case QCSE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void qcse_string_free(char* str) { delete[] str; }

qcse_status qcse_state_create(int num_qubits, qcse_state** out) {
  QCSE_REQUIRE_NONNULL(out);
  *out = nullptr;
  return guarded([&] {
    *out = new qcse_state{qcse::qsim::StateVector(num_qubits)};
  });
}

void qcse_state_destroy(qcse_state* state) { delete state; }

int qcse_state_num_qubits(const qcse_state* state) {
  return state ? state->state.num_qubits() : 0;
}

qcse_status qcse_state_apply(qcse_state* state, qcse_gate gate, int control,
                             int target, double angle) {
  QCSE_REQUIRE_NONNULL(state);
  return guarded([&] {
    const auto kind = to_gate(gate);
    state->state.apply(qcse::qsim::is_two_qubit(kind)
                           ? qcse::qsim::GateOp::controlled(kind, control,
                                                            target, angle)
                           : qcse::qsim::GateOp::single(kind, target, angle));
  });
}

qcse_status qcse_state_expectation_z(const qcse_state* state, int qubit,
                                     double* out) {
  QCSE_REQUIRE_NONNULL(state);
  QCSE_REQUIRE_NONNULL(out);
  return guarded([&] { *out = qcse::qsim::expectation_z(state->state, qubit); });
}

qcse_status qcse_state_probabilities(const qcse_state* state, double* out,
                                     size_t len) {
  QCSE_REQUIRE_NONNULL(state);
  QCSE_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto probs = qcse::qsim::qubit_probabilities(state->state);
    require_len(len, probs.size());
    std::copy(probs.begin(), probs.end(), out);
  });
}

qcse_status qcse_state_amplitudes(const qcse_state* state, double* out,
                                  size_t len) {
  QCSE_REQUIRE_NONNULL(state);
  QCSE_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto amps = state->state.amplitudes();
    require_len(len, 2 * amps.size());
    for (size_t i = 0; i < amps.size(); ++i) {
      out[2 * i] = amps[i].real();
      out[2 * i + 1] = amps[i].imag();
    }
  });
}

void qcse_default_hyperparams(qcse_hyperparams* out) {
  if (!out) return;
  const qcse::context::Hyperparams h;
  *out = qcse_hyperparams{h.alpha, h.omega, h.delta, h.prime, h.hash_space};
}

qcse_status qcse_context_encode(qcse_method method, const int* indices,
                                size_t n, int vocab_size,
                                const qcse_hyperparams* hp, double* out,
                                size_t len, size_t* written) {
  QCSE_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto values = qcse::context::encode(
        to_method(method), make_window(indices, n, vocab_size), to_hp(hp));
    require_len(len, values.size());
    std::copy(values.begin(), values.end(), out);
    if (written) *written = values.size();
  });
}

qcse_status qcse_encoding_layers(qcse_method method, size_t n, int num_qubits,
                                 size_t* layers) {
  QCSE_REQUIRE_NONNULL(layers);
  return guarded([&] {
    const auto m = to_method(method);
    if (num_qubits < 2) {
      throw qcse::Error(qcse::ErrorCode::kConfiguration, "need >= 2 qubits");
    }
    const size_t values =
        m == qcse::context::Method::kAngularShiftVector ? n : n * n;
    const size_t width = 2 * static_cast<size_t>(num_qubits);
    *layers = (values + width - 1) / width;
  });
}

int qcse_qubits_for_vocab(int vocab_size) {
  return qcse::corpus::qubits_for_vocab(vocab_size);
}

long qcse_trainable_params(int num_qubits, int layers) {
  if (num_qubits < 1 || layers < 0) return -1;
  return static_cast<long>(
      qcse::model::trainable_parameter_count(num_qubits, layers));
}

qcse_status qcse_count_gates(int num_qubits, int ansatz_layers,
                             int encoding_layers, qcse_gate_counts* out) {
  QCSE_REQUIRE_NONNULL(out);
  if (num_qubits < 1 || ansatz_layers < 0 || encoding_layers < 0) {
    return fail(QCSE_ERR_CONFIG, "counts must be non-negative, m >= 1");
  }
  const auto g =
      qcse::model::count_gates(num_qubits, ansatz_layers, encoding_layers);
  *out = qcse_gate_counts{g.context, g.ansatz, g.total};
  return QCSE_OK;
}

qcse_status qcse_target_bits(int center, int num_qubits, unsigned char* out,
                             size_t len) {
  QCSE_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto bits = qcse::corpus::target_bits(center, num_qubits);
    require_len(len, bits.size());
    std::copy(bits.begin(), bits.end(), out);
  });
}

qcse_status qcse_model_create(int num_qubits, int layers, qcse_method method,
                              const qcse_hyperparams* hp,
                              unsigned long long seed, qcse_model** out) {
  QCSE_REQUIRE_NONNULL(out);
  *out = nullptr;
  return guarded([&] {
    qcse::model::ModelConfig cfg;
    cfg.num_qubits = num_qubits;
    cfg.layers = layers;
    cfg.method = to_method(method);
    cfg.hyperparams = to_hp(hp);
    cfg.validate();
    qcse::Rng rng(seed);
    *out = new qcse_model{
        cfg, qcse::model::AnsatzParams::random(num_qubits, layers, rng)};
  });
}

qcse_status qcse_model_load(const char* params_json, qcse_model** out) {
  QCSE_REQUIRE_NONNULL(params_json);
  QCSE_REQUIRE_NONNULL(out);
  *out = nullptr;
  return guarded([&] {
    auto [cfg, params] = qcse::model::params_from_json(params_json);
    *out = new qcse_model{cfg, std::move(params)};
  });
}

void qcse_model_destroy(qcse_model* model) { delete model; }

size_t qcse_model_num_params(const qcse_model* model) {
  return model ? model->params.size() : 0;
}

int qcse_model_num_qubits(const qcse_model* model) {
  return model ? model->config.num_qubits : 0;
}

qcse_status qcse_model_get_params(const qcse_model* model, double* out,
                                  size_t len) {
  QCSE_REQUIRE_NONNULL(model);
  QCSE_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto v = model->params.values();
    require_len(len, v.size());
    std::copy(v.begin(), v.end(), out);
  });
}

qcse_status qcse_model_set_params(qcse_model* model, const double* values,
                                  size_t len) {
  QCSE_REQUIRE_NONNULL(model);
  QCSE_REQUIRE_NONNULL(values);
  return guarded([&] {
    if (len != model->params.size()) {
      throw qcse::Error(qcse::ErrorCode::kShape,
                        "expected " + std::to_string(model->params.size()) +
                            " angles");
    }
    std::copy(values, values + len, model->params.values().begin());
  });
}

qcse_status qcse_model_to_json(const qcse_model* model, char** out) {
  QCSE_REQUIRE_NONNULL(model);
  QCSE_REQUIRE_NONNULL(out);
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(qcse::model::params_to_json(model->config, model->params));
  });
}

qcse_status qcse_model_forward(const qcse_model* model, const int* context,
                               size_t n, int vocab_size, double* out,
                               size_t len) {
  QCSE_REQUIRE_NONNULL(model);
  QCSE_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto pred = qcse::model::forward(make_window(context, n, vocab_size),
                                           model->params, model->config);
    require_len(len, pred.probs_one.size());
    std::copy(pred.probs_one.begin(), pred.probs_one.end(), out);
  });
}

qcse_status qcse_model_loss_gradient(const qcse_model* model,
                                     const int* context, size_t n,
                                     int vocab_size, int center,
                                     const char* mode, double fd_epsilon,
                                     double* loss, double* grad, size_t len) {
  QCSE_REQUIRE_NONNULL(model);
  QCSE_REQUIRE_NONNULL(mode);
  QCSE_REQUIRE_NONNULL(loss);
  return guarded([&] {
    const auto parsed = qcse::train::parse_grad_mode(mode);
    if (!parsed) {
      throw qcse::Error(qcse::ErrorCode::kConfiguration,
                        std::string("unknown gradient mode '") + mode + "'");
    }
    qcse::corpus::TrainPair pair{center,
                                 make_window(context, n, vocab_size).indices};
    qcse::train::TrainSettings settings;
    settings.grad_mode = *parsed;
    settings.fd_epsilon = fd_epsilon;
    settings.validate();
    const auto r = qcse::train::gradient(pair, vocab_size, model->params,
                                         model->config, settings);
    *loss = r.loss;
    if (grad) {
      require_len(len, r.grad.size());
      std::copy(r.grad.begin(), r.grad.end(), grad);
    }
  });
}

qcse_status qcse_run_train(const char* config_json, const char* out_dir) {
  QCSE_REQUIRE_NONNULL(out_dir);
  return guarded(
      [&] { qcse::experiment::run_train(parse_config(config_json), out_dir); });
}

qcse_status qcse_run_method_sweep(const char* config_json,
                                  const char* out_dir) {
  QCSE_REQUIRE_NONNULL(out_dir);
  return guarded([&] {
    qcse::experiment::run_method_sweep(parse_config(config_json), out_dir);
  });
}

qcse_status qcse_run_depth_sweep(const char* config_json, int first_layer,
                                 int last_layer, const char* out_dir,
                                 char** table_out) {
  QCSE_REQUIRE_NONNULL(out_dir);
  if (table_out) *table_out = nullptr;
  return guarded([&] {
    const auto text = qcse::experiment::run_depth_sweep(
        parse_config(config_json), first_layer, last_layer, out_dir);
    if (table_out) *table_out = dup_string(text);
  });
}

qcse_status qcse_run_compare_baseline(const char* config_json,
                                      const char* out_dir, char** table_out) {
  QCSE_REQUIRE_NONNULL(out_dir);
  if (table_out) *table_out = nullptr;
  return guarded([&] {
    const auto rows = qcse::experiment::run_compare_baseline(
        parse_config(config_json), out_dir);
    if (table_out) *table_out = dup_string(qcse::experiment::format_table(rows));
  });
}

qcse_status qcse_generate_corpus(const char* config_json, const char* out_dir) {
  QCSE_REQUIRE_NONNULL(out_dir);
  return guarded([&] {
    qcse::experiment::generate_corpus(parse_config(config_json), out_dir);
  });
}

qcse_status qcse_config_normalize(const char* config_json, char** out) {
  QCSE_REQUIRE_NONNULL(out);
  *out = nullptr;
  return guarded([&] { *out = dup_string(parse_config(config_json).to_json()); });
}

}  // extern "C"
