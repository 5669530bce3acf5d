/* Copyright 2026 The QCSE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the quantum context-sensitive word-embedding library.
 *
 * Every fallible call returns a qcse_status. On failure a description is
 * available from qcse_last_error() on the calling thread until the next
 * failing call on that thread. Handles are opaque and owned by the caller;
 * release them with the matching *_destroy function. Strings returned
 * through char** out-parameters must be released with qcse_string_free().
 *
 * Qubit q is bit q of a basis-state index (qubit 0 is least significant).
 */

#ifndef QCSE_QCSE_H_
#define QCSE_QCSE_H_

#include <stddef.h>

#if defined(_WIN32)
#define QCSE_API __declspec(dllexport)
#else
#define QCSE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcse_status {
  QCSE_OK = 0,
  QCSE_ERR_CONFIG = 1,
  QCSE_ERR_INDEX = 2,
  QCSE_ERR_SHAPE = 3,
  QCSE_ERR_CAPACITY = 4,
  QCSE_ERR_INVALID_INPUT = 5,
  QCSE_ERR_INVALID_CONTEXT = 6,
  QCSE_ERR_IO = 7,
  QCSE_ERR_NULL_ARGUMENT = 8,
  QCSE_ERR_INTERNAL = 9
} qcse_status;

typedef enum qcse_gate {
  QCSE_GATE_H = 0,
  QCSE_GATE_X,
  QCSE_GATE_Y,
  QCSE_GATE_Z,
  QCSE_GATE_RX,
  QCSE_GATE_RZ,
  QCSE_GATE_CNOT,
  QCSE_GATE_CZ,
  QCSE_GATE_CRZ
} qcse_gate;

typedef enum qcse_method {
  QCSE_METHOD_EXP_DECAY_SIN = 0,
  QCSE_METHOD_INDEX_DIAGONAL,
  QCSE_METHOD_PHASE_SHIFT,
  QCSE_METHOD_HASH,
  QCSE_METHOD_ANGULAR_VECTOR
} qcse_method;

typedef struct qcse_hyperparams {
  double alpha;
  double omega;
  double delta;
  long long prime;
  long long hash_space;
} qcse_hyperparams;

typedef struct qcse_gate_counts {
  long context;
  long ansatz;
  long total;
} qcse_gate_counts;

typedef struct qcse_state qcse_state;
typedef struct qcse_model qcse_model;

QCSE_API const char* qcse_version(void);
QCSE_API const char* qcse_last_error(void);
QCSE_API const char* qcse_status_name(qcse_status status);
QCSE_API void qcse_string_free(char* str);

/* Statevector simulator. */
QCSE_API qcse_status qcse_state_create(int num_qubits, qcse_state** out);
QCSE_API void qcse_state_destroy(qcse_state* state);
QCSE_API int qcse_state_num_qubits(const qcse_state* state);
/* `control` is ignored for single-qubit gates; `angle` for fixed gates. */
QCSE_API qcse_status qcse_state_apply(qcse_state* state, qcse_gate gate,
                                      int control, int target, double angle);
QCSE_API qcse_status qcse_state_expectation_z(const qcse_state* state,
                                              int qubit, double* out);
/* Writes P(|1>_q) for every qubit; `len` must be at least num_qubits. */
QCSE_API qcse_status qcse_state_probabilities(const qcse_state* state,
                                              double* out, size_t len);
/* Interleaved (re, im) pairs; `len` must be at least 2 * 2^num_qubits. */
QCSE_API qcse_status qcse_state_amplitudes(const qcse_state* state,
                                           double* out, size_t len);

/* Context encodings. */
QCSE_API void qcse_default_hyperparams(qcse_hyperparams* out);
/* Writes the row-major n x n matrix (n for the angular vector) into `out`
 * and its element count into `written`. */
QCSE_API qcse_status qcse_context_encode(qcse_method method,
                                         const int* indices, size_t n,
                                         int vocab_size,
                                         const qcse_hyperparams* hp,
                                         double* out, size_t len,
                                         size_t* written);
QCSE_API qcse_status qcse_encoding_layers(qcse_method method, size_t n,
                                          int num_qubits, size_t* layers);

/* Structural helpers. */
QCSE_API int qcse_qubits_for_vocab(int vocab_size);
QCSE_API long qcse_trainable_params(int num_qubits, int layers);
QCSE_API qcse_status qcse_count_gates(int num_qubits, int ansatz_layers,
                                      int encoding_layers,
                                      qcse_gate_counts* out);
/* Big-endian m-bit expansion of `center` as 0/1 bytes. */
QCSE_API qcse_status qcse_target_bits(int center, int num_qubits,
                                      unsigned char* out, size_t len);

/* Model: config plus ansatz angles. */
QCSE_API qcse_status qcse_model_create(int num_qubits, int layers,
                                       qcse_method method,
                                       const qcse_hyperparams* hp,
                                       unsigned long long seed,
                                       qcse_model** out);
QCSE_API qcse_status qcse_model_load(const char* params_json,
                                     qcse_model** out);
QCSE_API void qcse_model_destroy(qcse_model* model);
QCSE_API size_t qcse_model_num_params(const qcse_model* model);
QCSE_API int qcse_model_num_qubits(const qcse_model* model);
QCSE_API qcse_status qcse_model_get_params(const qcse_model* model,
                                           double* out, size_t len);
QCSE_API qcse_status qcse_model_set_params(qcse_model* model,
                                           const double* values, size_t len);
QCSE_API qcse_status qcse_model_to_json(const qcse_model* model, char** out);
/* P(|1>_q) for the given context window; `len` >= num_qubits. */
QCSE_API qcse_status qcse_model_forward(const qcse_model* model,
                                        const int* context, size_t n,
                                        int vocab_size, double* out,
                                        size_t len);
/* Per-qubit cross-entropy against the target of `center`, and its gradient
 * with respect to every angle. `mode` is "finite-difference",
 * "parameter-shift" or "adjoint". `grad` may be NULL. */
QCSE_API qcse_status qcse_model_loss_gradient(const qcse_model* model,
                                              const int* context, size_t n,
                                              int vocab_size, int center,
                                              const char* mode,
                                              double fd_epsilon, double* loss,
                                              double* grad, size_t len);

/* Experiment runners. `config_json` is a run-config document (NULL or ""
 * for defaults); outputs go under `out_dir`. */
QCSE_API qcse_status qcse_run_train(const char* config_json,
                                    const char* out_dir);
QCSE_API qcse_status qcse_run_method_sweep(const char* config_json,
                                           const char* out_dir);
/* `table_out` (optional) receives the aligned text table. */
QCSE_API qcse_status qcse_run_depth_sweep(const char* config_json,
                                          int first_layer, int last_layer,
                                          const char* out_dir,
                                          char** table_out);
QCSE_API qcse_status qcse_run_compare_baseline(const char* config_json,
                                               const char* out_dir,
                                               char** table_out);
QCSE_API qcse_status qcse_generate_corpus(const char* config_json,
                                          const char* out_dir);
/* Fully resolved config with defaults filled in. */
QCSE_API qcse_status qcse_config_normalize(const char* config_json,
                                           char** out);

#ifdef __cplusplus
}
#endif

#endif /* QCSE_QCSE_H_ */
