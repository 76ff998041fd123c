// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace photrans {

// Dense row-major matrix, just big enough for kernel verification.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0.0) {}
  double& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  double at(int r, int c) const { return data[std::size_t(r) * cols + c]; }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Straightforward scaled dot-product attention with row-wise softmax;
// Q = X Wq, K = X Wk, V = X Wv.
Matrix attention_reference(const Matrix& x, const Matrix& wq, const Matrix& wk, const Matrix& wv,
                           int d_k);

// Same result computed through the reassociated score chain
// (X Wq)(Wk^T / sqrt(d_k)) X^T, matching the buffering-free dataflow.
Matrix attention_reassociated(const Matrix& x, const Matrix& wq, const Matrix& wk,
                              const Matrix& wv, int d_k);

// Divide by sqrt(d_k) through shift semantics; exact for power-of-4 d_k.
double shift_scale(double value, int d_k);

// Numerically safe softmax: max, subtract, log-sum-exp, final exp. No
// intermediate exponential argument exceeds zero.
std::vector<double> softmax_lse(const std::vector<double>& chi);
std::vector<double> softmax_naive(const std::vector<double>& chi);

double gelu_sigmoid(double x);  // x * sigma(1.702 x)
double gelu_tanh(double x);     // 0.5 x (1 + tanh(sqrt(2/pi)(x + 0.044715 x^3)))

// Signed-split uniform quantization.
struct QuantConfig {
  int bits = 8;
  bool signed_split = true;

  int n_levels() const { return 1 << (signed_split ? bits - 1 : bits); }
};

struct QuantResult {
  int level = 0;        // 0 .. n_levels-1
  int arm = +1;         // +1 positive arm, -1 negative arm
  bool saturated = false;
};

QuantResult quantize_split(double v, const QuantConfig& cfg, double v_max);
double dequantize_split(const QuantResult& q, const QuantConfig& cfg, double v_max);

// Balanced-photodetector accumulation: sum(pos) - sum(neg).
double bpd_accumulate(const std::vector<double>& pos, const std::vector<double>& neg);

// Dot product under multiplicative amplitude noise calibrated to the given
// SNR, accumulated through the signed-split arms. Deterministic per seed.
double noisy_dot(const std::vector<double>& a, const std::vector<double>& w, double snr_db,
                 std::uint64_t seed);

}  // namespace photrans
