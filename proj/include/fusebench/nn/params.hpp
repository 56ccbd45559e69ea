#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fusebench::nn {

template <typename T>
struct Param {
  std::string name;
  std::vector<int> shape;
  std::vector<T> value;
  std::vector<T> grad;
  bool frozen = false;

  std::size_t size() const { return value.size(); }
};

template <typename T>
class ParameterSet {
 public:
  /// Appends a zero-filled parameter; returns its index.
  std::size_t add(std::string name, std::vector<int> shape);

  Param<T>& operator[](std::size_t i) { return params_[i]; }
  const Param<T>& operator[](std::size_t i) const { return params_[i]; }
  std::size_t size() const { return params_.size(); }
  auto begin() { return params_.begin(); }
  auto end() { return params_.end(); }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

  /// Index of the named parameter; throws std::out_of_range if absent.
  std::size_t index_of(const std::string& name) const;
  /// Total number of scalar parameters.
  std::size_t count() const;
  void zero_grad();
  /// FNV-1a over names, shapes and value bytes.
  std::uint64_t checksum() const;

  template <typename U>
  ParameterSet<U> cast() const {
    ParameterSet<U> out;
    for (const auto& p : params_) {
      const std::size_t i = out.add(p.name, p.shape);
      for (std::size_t k = 0; k < p.size(); ++k) out[i].value[k] = static_cast<U>(p.value[k]);
      out[i].frozen = p.frozen;
    }
    return out;
  }

 private:
  std::vector<Param<T>> params_;
};

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

template <typename T>
class Adam {
 public:
  explicit Adam(AdamConfig cfg = {}) : cfg_(cfg) {}
  /// One bias-corrected step on every non-frozen parameter.
  void step(ParameterSet<T>& params, double lr);
  long steps() const { return t_; }

 private:
  AdamConfig cfg_;
  long t_ = 0;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
};

using Metadata = std::map<std::string, std::string>;

// Checkpoint file: text header ("FUSEBENCH-CHECKPOINT <version>", key=value lines,
// "end_header"), then little-endian binary records:
//   u32 count; per tensor: u32 name_len, name bytes, u32 ndim, u32 dims[ndim], f32 values.
inline constexpr int kCheckpointVersion = 1;

struct Checkpoint {
  Metadata meta;
  ParameterSet<float> params;

  const std::string& get(const std::string& key) const;
  int get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace fusebench::nn
