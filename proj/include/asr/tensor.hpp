// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asr {

// Dense row-major real tensor. Everything in this project is rank 1 or 2;
// the shape vector stays general for the checkpoint format.
struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::int64_t rows, std::int64_t cols);
  explicit Tensor(std::vector<std::int64_t> shp);

  static Tensor zeros(std::int64_t rows, std::int64_t cols);
  static Tensor full(std::int64_t rows, std::int64_t cols, double v);
  static Tensor row(std::vector<double> values);  // 1 x n

  std::int64_t numel() const;
  int rank() const { return static_cast<int>(shape.size()); }
  std::int64_t rows() const;
  std::int64_t cols() const;

  double& at(std::int64_t r, std::int64_t c);
  double at(std::int64_t r, std::int64_t c) const;

  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  bool all_finite() const;
  std::string shape_str() const;
};

struct NamedTensor {
  std::string name;
  Tensor value;
};

// Binary tensor checkpoint: magic, version, config text block, then named
// tensors (name, rank, dims, dtype, raw little-endian values). f64 payloads
// round-trip bit-exactly; f32 payloads are widened on load.
struct Checkpoint {
  std::string config_text;
  std::vector<NamedTensor> tensors;

  const Tensor* find(const std::string& name) const;
};

enum class Dtype : std::uint8_t { f64 = 0, f32 = 1 };

void save_checkpoint(const std::string& path, const Checkpoint& ckpt,
                     Dtype dtype = Dtype::f64);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace asr
