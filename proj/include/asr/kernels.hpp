// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace asr::kernels {

// Dense row-major kernels behind the autodiff tape. The exported functions
// parallelize with OpenMP over independent output rows/elements; each output
// value is accumulated by exactly one thread in a fixed order, so results are
// bit-identical to the serial reference for any thread count.
//
// kernels::serial holds the plain reference implementations used by the
// equivalence tests and the bench_kernels comparison target.

void set_max_threads(int n);  // <= 0 restores the OpenMP default
int max_threads();

// Work-size threshold (output elements * inner dim) below which the parallel
// entry points run serially. Keeps tiny toy-model matrices off the OpenMP
// fork path.
void set_parallel_threshold(std::int64_t work);
std::int64_t parallel_threshold();

// c[m x n] = a[m x k] * b[k x n] + beta * c
void matmul_nn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta = 0.0);
// c[m x n] = a[m x k] * b[n x k]^T + beta * c
void matmul_nt(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta = 0.0);
// c[m x n] = a[k x m]^T * b[k x n] + beta * c
void matmul_tn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta = 0.0);

enum class Unary { Tanh, Sigmoid, Exp, Log, Sqrt };
void apply_unary(Unary f, const double* x, double* y, std::int64_t n);

// In-place row-wise softmax / log-softmax over an m x n matrix.
void softmax_rows(double* x, std::int64_t m, std::int64_t n);
void log_softmax_rows(double* x, std::int64_t m, std::int64_t n);

// out[c] = sum_r / mean_r of x[r*n + c]
void col_sums(const double* x, double* out, std::int64_t m, std::int64_t n);
void col_means(const double* x, double* out, std::int64_t m, std::int64_t n);

// Same-length 1-D convolution of a length-T signal with K width-W kernels,
// zero padded: out[t*K + f] = sum_w ker[f*W + w] * sig[t + w - W/2].
void conv1d_same(const double* sig, std::int64_t t_len, const double* ker,
                 std::int64_t n_ker, std::int64_t width, double* out);

namespace serial {
void matmul_nn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta = 0.0);
void matmul_nt(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta = 0.0);
void matmul_tn(const double* a, const double* b, double* c, std::int64_t m,
               std::int64_t k, std::int64_t n, double beta = 0.0);
void apply_unary(Unary f, const double* x, double* y, std::int64_t n);
void softmax_rows(double* x, std::int64_t m, std::int64_t n);
void log_softmax_rows(double* x, std::int64_t m, std::int64_t n);
void col_sums(const double* x, double* out, std::int64_t m, std::int64_t n);
void col_means(const double* x, double* out, std::int64_t m, std::int64_t n);
void conv1d_same(const double* sig, std::int64_t t_len, const double* ker,
                 std::int64_t n_ker, std::int64_t width, double* out);
}  // namespace serial

}  // namespace asr::kernels
