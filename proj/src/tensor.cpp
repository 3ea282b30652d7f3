// SPDX-License-Identifier: Apache-2.0
#include "asr/tensor.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "asr/errors.hpp"

namespace asr {

Tensor::Tensor(std::int64_t rows, std::int64_t cols)
    : shape{rows, cols}, data(static_cast<std::size_t>(rows * cols), 0.0) {}

Tensor::Tensor(std::vector<std::int64_t> shp) : shape(std::move(shp)) {
  std::int64_t n = 1;
  for (auto d : shape) n *= d;
  data.assign(static_cast<std::size_t>(n), 0.0);
}

Tensor Tensor::zeros(std::int64_t rows, std::int64_t cols) { return Tensor(rows, cols); }

Tensor Tensor::full(std::int64_t rows, std::int64_t cols, double v) {
  Tensor t(rows, cols);
  for (auto& x : t.data) x = v;
  return t;
}

Tensor Tensor::row(std::vector<double> values) {
  Tensor t;
  t.shape = {1, static_cast<std::int64_t>(values.size())};
  t.data = std::move(values);
  return t;
}

std::int64_t Tensor::numel() const { return static_cast<std::int64_t>(data.size()); }

std::int64_t Tensor::rows() const { return shape.empty() ? 1 : shape[0]; }

std::int64_t Tensor::cols() const {
  if (shape.size() >= 2) return shape[1];
  if (shape.size() == 1) return shape[0];
  return 1;
}

double& Tensor::at(std::int64_t r, std::int64_t c) {
  return data[static_cast<std::size_t>(r * cols() + c)];
}

double Tensor::at(std::int64_t r, std::int64_t c) const {
  return data[static_cast<std::size_t>(r * cols() + c)];
}

bool Tensor::all_finite() const {
  for (double v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
  os << "]";
  return os.str();
}

const Tensor* Checkpoint::find(const std::string& name) const {
  for (const auto& t : tensors)
    if (t.name == name) return &t.value;
  return nullptr;
}

namespace {

constexpr char kMagic[4] = {'A', 'T', 'C', 'K'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw DataError("checkpoint: truncated file");
  return v;
}

void write_string(std::ostream& os, const std::string& s) {
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& is) {
  auto n = read_pod<std::uint32_t>(is);
  std::string s(n, '\0');
  is.read(s.data(), n);
  if (!is) throw DataError("checkpoint: truncated string");
  return s;
}

}  // namespace

void save_checkpoint(const std::string& path, const Checkpoint& ckpt, Dtype dtype) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("checkpoint: cannot open for write: " + path);
  os.write(kMagic, 4);
  write_pod<std::uint32_t>(os, kVersion);
  write_string(os, ckpt.config_text);
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(ckpt.tensors.size()));
  for (const auto& nt : ckpt.tensors) {
    write_string(os, nt.name);
    write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(nt.value.shape.size()));
    for (auto d : nt.value.shape) write_pod<std::int64_t>(os, d);
    write_pod<std::uint8_t>(os, static_cast<std::uint8_t>(dtype));
    if (dtype == Dtype::f64) {
      os.write(reinterpret_cast<const char*>(nt.value.data.data()),
               static_cast<std::streamsize>(nt.value.data.size() * sizeof(double)));
    } else {
      for (double v : nt.value.data) {
        float f = static_cast<float>(v);
        write_pod<float>(os, f);
      }
    }
  }
  if (!os) throw DataError("checkpoint: write failed: " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("checkpoint: cannot open: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw DataError("checkpoint: bad magic in " + path);
  auto version = read_pod<std::uint32_t>(is);
  if (version != kVersion) throw DataError("checkpoint: unsupported version");
  Checkpoint ckpt;
  ckpt.config_text = read_string(is);
  auto count = read_pod<std::uint32_t>(is);
  ckpt.tensors.resize(count);
  for (auto& nt : ckpt.tensors) {
    nt.name = read_string(is);
    auto rank = read_pod<std::uint32_t>(is);
    nt.value.shape.resize(rank);
    std::int64_t n = 1;
    for (auto& d : nt.value.shape) {
      d = read_pod<std::int64_t>(is);
      n *= d;
    }
    auto dt = static_cast<Dtype>(read_pod<std::uint8_t>(is));
    nt.value.data.resize(static_cast<std::size_t>(n));
    if (dt == Dtype::f64) {
      is.read(reinterpret_cast<char*>(nt.value.data.data()),
              static_cast<std::streamsize>(n * static_cast<std::int64_t>(sizeof(double))));
      if (!is) throw DataError("checkpoint: truncated tensor " + nt.name);
    } else {
      for (auto& v : nt.value.data) v = static_cast<double>(read_pod<float>(is));
    }
  }
  return ckpt;
}

}  // namespace asr
