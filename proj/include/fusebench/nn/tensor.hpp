#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusebench/image.hpp"

namespace fusebench::nn {

// Activation tensor stored channel-major across the batch: [channels][batch][height][width].
// A convolution output is then a single (out_channels x batch*H*W) GEMM result.
template <typename T>
struct Tensor {
  int channels = 0;
  int batch = 0;
  int height = 0;
  int width = 0;
  std::vector<T> data;

  Tensor() = default;
  Tensor(int c, int n, int h, int w, T fill = T(0))
      : channels(c), batch(n), height(h), width(w),
        data(static_cast<std::size_t>(c) * n * h * w, fill) {}

  std::size_t plane_size() const { return static_cast<std::size_t>(height) * width; }
  std::size_t size() const { return data.size(); }
  std::size_t offset(int c, int n) const {
    return (static_cast<std::size_t>(c) * batch + n) * plane_size();
  }
  T* plane(int c, int n) { return data.data() + offset(c, n); }
  const T* plane(int c, int n) const { return data.data() + offset(c, n); }
  T& at(int c, int n, int y, int x) { return data[offset(c, n) + static_cast<std::size_t>(y) * width + x]; }
  T at(int c, int n, int y, int x) const {
    return data[offset(c, n) + static_cast<std::size_t>(y) * width + x];
  }

  bool same_shape(const Tensor& o) const {
    return channels == o.channels && batch == o.batch && height == o.height && width == o.width;
  }
  void resize(int c, int n, int h, int w) {
    channels = c;
    batch = n;
    height = h;
    width = w;
    data.assign(static_cast<std::size_t>(c) * n * h * w, T(0));
  }
  std::string shape_string() const {
    return std::to_string(channels) + "x" + std::to_string(batch) + "x" + std::to_string(height) +
           "x" + std::to_string(width);
  }
};

/// Packs images (all the same shape) into a tensor; image i becomes batch item i.
template <typename T>
Tensor<T> from_images(const std::vector<const ImagePatch*>& images);

/// Stacks `a` and `b` channel-wise for each batch item: [a.channels + b.channels][n][h][w].
template <typename T>
Tensor<T> concat_channels(const Tensor<T>& a, const Tensor<T>& b);

/// Batch item `n` of a tensor as an image (channels become interleaved).
template <typename T>
ImagePatch to_image(const Tensor<T>& t, int n);

}  // namespace fusebench::nn
