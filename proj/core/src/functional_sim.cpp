// SPDX-License-Identifier: Apache-2.0
#include "photrans/functional_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace photrans {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double mx = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    mx = std::max(mx, std::abs(a.data[i] - b.data[i]));
  return mx;
}

namespace {
void softmax_rows_inplace(Matrix& m) {
  for (int i = 0; i < m.rows; ++i) {
    std::vector<double> row(m.cols);
    for (int j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
    row = softmax_lse(row);
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = row[j];
  }
}
}  // namespace

Matrix attention_reference(const Matrix& x, const Matrix& wq, const Matrix& wk, const Matrix& wv,
                           int d_k) {
  if (d_k < 1) throw std::invalid_argument("attention: d_k must be >= 1");
  const Matrix q = matmul(x, wq);
  const Matrix k = matmul(x, wk);
  const Matrix v = matmul(x, wv);
  Matrix scores = matmul(q, transpose(k));
  const double inv = 1.0 / std::sqrt(double(d_k));
  for (double& s : scores.data) s *= inv;
  softmax_rows_inplace(scores);
  return matmul(scores, v);
}

Matrix attention_reassociated(const Matrix& x, const Matrix& wq, const Matrix& wk,
                              const Matrix& wv, int d_k) {
  if (d_k < 1) throw std::invalid_argument("attention: d_k must be >= 1");
  const Matrix q = matmul(x, wq);
  Matrix wk_t_scaled = transpose(wk);
  const double inv = 1.0 / std::sqrt(double(d_k));
  for (double& s : wk_t_scaled.data) s *= inv;  // scaling folded into the stored keys
  Matrix scores = matmul(matmul(q, wk_t_scaled), transpose(x));
  softmax_rows_inplace(scores);
  return matmul(scores, matmul(x, wv));
}

double shift_scale(double value, int d_k) {
  if (d_k < 1) throw std::invalid_argument("shift_scale: d_k must be >= 1");
  const double root = std::sqrt(double(d_k));
  if (root == std::floor(root) && (std::int64_t(root) & (std::int64_t(root) - 1)) == 0)
    return value / std::int64_t(root);  // exact binary shift
  return value / root;
}

std::vector<double> softmax_lse(const std::vector<double>& chi) {
  if (chi.empty()) throw std::invalid_argument("softmax: empty input");
  const double mx = *std::max_element(chi.begin(), chi.end());
  double sum = 0.0;
  for (double c : chi) sum += std::exp(c - mx);
  const double lse = std::log(sum);
  std::vector<double> out(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) out[i] = std::exp(chi[i] - mx - lse);
  return out;
}

std::vector<double> softmax_naive(const std::vector<double>& chi) {
  if (chi.empty()) throw std::invalid_argument("softmax: empty input");
  double sum = 0.0;
  std::vector<double> out(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    out[i] = std::exp(chi[i]);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

double gelu_sigmoid(double x) { return x / (1.0 + std::exp(-1.702 * x)); }

double gelu_tanh(double x) {
  const double c = std::sqrt(2.0 / std::numbers::pi);
  return 0.5 * x * (1.0 + std::tanh(c * (x + 0.044715 * x * x * x)));
}

QuantResult quantize_split(double v, const QuantConfig& cfg, double v_max) {
  if (!(v_max > 0.0)) throw std::invalid_argument("quantize_split: v_max must be > 0");
  QuantResult q;
  q.arm = v < 0.0 ? -1 : +1;
  double mag = std::abs(v);
  if (mag > v_max) {
    mag = v_max;
    q.saturated = true;
  }
  q.level = int(std::lround(mag / v_max * (cfg.n_levels() - 1)));
  return q;
}

double dequantize_split(const QuantResult& q, const QuantConfig& cfg, double v_max) {
  return q.arm * (double(q.level) / (cfg.n_levels() - 1)) * v_max;
}

double bpd_accumulate(const std::vector<double>& pos, const std::vector<double>& neg) {
  if (pos.size() != neg.size()) throw std::invalid_argument("bpd_accumulate: length mismatch");
  double p = 0.0, n = 0.0;
  for (double v : pos) p += v;
  for (double v : neg) n += v;
  return p - n;
}

double noisy_dot(const std::vector<double>& a, const std::vector<double>& w, double snr_db,
                 std::uint64_t seed) {
  if (a.size() != w.size()) throw std::invalid_argument("noisy_dot: length mismatch");
  // Box-Muller over the standard engine keeps the stream identical across
  // library implementations.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] {
    return (double(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);  // (0,1)
  };
  auto gauss = [&] {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  const double sigma = std::pow(10.0, -snr_db / 20.0);
  std::vector<double> pos(a.size(), 0.0), neg(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double product = a[i] * w[i] * (1.0 + sigma * gauss());
    if (product >= 0.0)
      pos[i] = product;
    else
      neg[i] = -product;
  }
  return bpd_accumulate(pos, neg);
}

}  // namespace photrans
