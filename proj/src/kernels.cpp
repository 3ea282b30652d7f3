// SPDX-License-Identifier: Apache-2.0
#include "asr/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace asr::kernels {

namespace {
int g_max_threads = 0;  // 0 = OpenMP default
std::int64_t g_threshold = 64 * 1024;

inline int threads_for(std::int64_t work) {
  if (work < g_threshold) return 1;
#ifdef _OPENMP
  int t = g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
  return std::max(1, t);
#else
  return 1;
#endif
}

inline double unary_eval(Unary f, double v) {
  switch (f) {
    case Unary::Tanh: return std::tanh(v);
    case Unary::Sigmoid: return 1.0 / (1.0 + std::exp(-v));
    case Unary::Exp: return std::exp(v);
    case Unary::Log: return std::log(v);
    case Unary::Sqrt: return std::sqrt(v);
  }
  return v;
}

inline void softmax_row(double* row, std::int64_t n, bool log_mode) {
  double mx = row[0];
  for (std::int64_t j = 1; j < n; ++j) mx = std::max(mx, row[j]);
  double sum = 0.0;
  for (std::int64_t j = 0; j < n; ++j) sum += std::exp(row[j] - mx);
  if (log_mode) {
    double lse = mx + std::log(sum);
    for (std::int64_t j = 0; j < n; ++j) row[j] -= lse;
  } else {
    double inv = 1.0 / sum;
    for (std::int64_t j = 0; j < n; ++j) row[j] = std::exp(row[j] - mx) * inv;
  }
}

}  // namespace

void set_max_threads(int n) {
  g_max_threads = n;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() {
#ifdef _OPENMP
  return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

void set_parallel_threshold(std::int64_t work) { g_threshold = work; }
std::int64_t parallel_threshold() { return g_threshold; }

// ---------------------------------------------------------------------------
// Serial reference implementations.
// ---------------------------------------------------------------------------

namespace serial {

void matmul_nn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta) {
  for (std::int64_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    if (beta == 0.0) std::fill(crow, crow + n, 0.0);
    for (std::int64_t l = 0; l < k; ++l) {
      double av = a[i * k + l];
      const double* brow = b + l * n;
      for (std::int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta) {
  for (std::int64_t i = 0; i < m; ++i) {
    const double* arow = a + i * k;
    for (std::int64_t j = 0; j < n; ++j) {
      const double* brow = b + j * k;
      double s = 0.0;
      for (std::int64_t l = 0; l < k; ++l) s += arow[l] * brow[l];
      c[i * n + j] = s + (beta == 0.0 ? 0.0 : beta * c[i * n + j]);
    }
  }
}

void matmul_tn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta) {
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::int64_t l = 0; l < k; ++l) s += a[l * m + i] * b[l * n + j];
      c[i * n + j] = s + (beta == 0.0 ? 0.0 : beta * c[i * n + j]);
    }
  }
}

void apply_unary(Unary f, const double* x, double* y, std::int64_t n) {
  for (std::int64_t i = 0; i < n; ++i) y[i] = unary_eval(f, x[i]);
}

void softmax_rows(double* x, std::int64_t m, std::int64_t n) {
  for (std::int64_t i = 0; i < m; ++i) softmax_row(x + i * n, n, false);
}

void log_softmax_rows(double* x, std::int64_t m, std::int64_t n) {
  for (std::int64_t i = 0; i < m; ++i) softmax_row(x + i * n, n, true);
}

void col_sums(const double* x, double* out, std::int64_t m, std::int64_t n) {
  for (std::int64_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::int64_t r = 0; r < m; ++r) s += x[r * n + c];
    out[c] = s;
  }
}

void col_means(const double* x, double* out, std::int64_t m, std::int64_t n) {
  col_sums(x, out, m, n);
  for (std::int64_t c = 0; c < n; ++c) out[c] /= static_cast<double>(m);
}

void conv1d_same(const double* sig, std::int64_t t_len, const double* ker,
                 std::int64_t n_ker, std::int64_t width, double* out) {
  std::int64_t halo = width / 2;
  for (std::int64_t t = 0; t < t_len; ++t) {
    for (std::int64_t f = 0; f < n_ker; ++f) {
      double s = 0.0;
      for (std::int64_t w = 0; w < width; ++w) {
        std::int64_t src = t + w - halo;
        if (src >= 0 && src < t_len) s += ker[f * width + w] * sig[src];
      }
      out[t * n_ker + f] = s;
    }
  }
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP entry points. Each output row is produced by exactly one thread with
// the same inner-loop order as the serial reference.
// ---------------------------------------------------------------------------

void matmul_nn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta) {
  int nt = threads_for(m * n * k);
  if (nt == 1) {
    serial::matmul_nn(a, b, c, m, k, n, beta);
    return;
  }
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < m; ++i)
    serial::matmul_nn(a + i * k, b, c + i * n, 1, k, n, beta);
}

void matmul_nt(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta) {
  int nt = threads_for(m * n * k);
  if (nt == 1) {
    serial::matmul_nt(a, b, c, m, k, n, beta);
    return;
  }
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < m; ++i)
    serial::matmul_nt(a + i * k, b, c + i * n, 1, k, n, beta);
}

void matmul_tn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta) {
  int nt = threads_for(m * n * k);
  if (nt == 1) {
    serial::matmul_tn(a, b, c, m, k, n, beta);
    return;
  }
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::int64_t l = 0; l < k; ++l) s += a[l * m + i] * b[l * n + j];
      c[i * n + j] = s + (beta == 0.0 ? 0.0 : beta * c[i * n + j]);
    }
  }
}

void apply_unary(Unary f, const double* x, double* y, std::int64_t n) {
  int nt = threads_for(n * 8);
  if (nt == 1) {
    serial::apply_unary(f, x, y, n);
    return;
  }
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[i] = unary_eval(f, x[i]);
}

void softmax_rows(double* x, std::int64_t m, std::int64_t n) {
  int nt = threads_for(m * n * 4);
  if (nt == 1) {
    serial::softmax_rows(x, m, n);
    return;
  }
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < m; ++i) softmax_row(x + i * n, n, false);
}

void log_softmax_rows(double* x, std::int64_t m, std::int64_t n) {
  int nt = threads_for(m * n * 4);
  if (nt == 1) {
    serial::log_softmax_rows(x, m, n);
    return;
  }
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < m; ++i) softmax_row(x + i * n, n, true);
}

void col_sums(const double* x, double* out, std::int64_t m, std::int64_t n) {
  int nt = threads_for(m * n);
  if (nt == 1) {
    serial::col_sums(x, out, m, n);
    return;
  }
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::int64_t r = 0; r < m; ++r) s += x[r * n + c];
    out[c] = s;
  }
}

void col_means(const double* x, double* out, std::int64_t m, std::int64_t n) {
  col_sums(x, out, m, n);
  for (std::int64_t c = 0; c < n; ++c) out[c] /= static_cast<double>(m);
}

void conv1d_same(const double* sig, std::int64_t t_len, const double* ker,
                 std::int64_t n_ker, std::int64_t width, double* out) {
  int nt = threads_for(t_len * n_ker * width);
  if (nt == 1) {
    serial::conv1d_same(sig, t_len, ker, n_ker, width, out);
    return;
  }
  std::int64_t halo = width / 2;
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t t = 0; t < t_len; ++t) {
    for (std::int64_t f = 0; f < n_ker; ++f) {
      double s = 0.0;
      for (std::int64_t w = 0; w < width; ++w) {
        std::int64_t src = t + w - halo;
        if (src >= 0 && src < t_len) s += ker[f * width + w] * sig[src];
      }
      out[t * n_ker + f] = s;
    }
  }
}

}  // namespace asr::kernels
