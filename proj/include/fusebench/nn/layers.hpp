#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fusebench/nn/tensor.hpp"

namespace fusebench::nn {

// Square convolution, stride 1, zero padding k/2 ("same" output size).
// Weights are laid out [out][in][ky][kx], i.e. an (out x in*k*k) row-major matrix.
struct ConvShape {
  int in = 0;
  int out = 0;
  int kernel = 3;

  std::size_t weight_count() const { return static_cast<std::size_t>(out) * in * kernel * kernel; }
};

template <typename T>
void conv2d_forward(const ConvShape& shape, const Tensor<T>& x, const T* weight, const T* bias,
                    Tensor<T>& y);

/// Accumulates into dweight/dbias; writes dx when non-null.
template <typename T>
void conv2d_backward(const ConvShape& shape, const Tensor<T>& x, const T* weight,
                     const Tensor<T>& dy, T* dweight, T* dbias, Tensor<T>* dx);

template <typename T>
void relu_inplace(Tensor<T>& t);

/// dy *= (y > 0), where y is the ReLU output.
template <typename T>
void relu_backward_inplace(const Tensor<T>& y, Tensor<T>& dy);

/// Inverted dropout: fills `scale` with 0 or 1/(1-rate) and multiplies t by it.
template <typename T>
void dropout_inplace(Tensor<T>& t, double rate, std::mt19937_64& rng, std::vector<T>& scale);

template <typename T>
void maxpool2_forward(const Tensor<T>& x, Tensor<T>& y, std::vector<std::uint8_t>& argmax);

template <typename T>
void maxpool2_backward(const Tensor<T>& dy, const std::vector<std::uint8_t>& argmax, int in_h,
                       int in_w, Tensor<T>& dx);

template <typename T>
void upsample2_forward(const Tensor<T>& x, Tensor<T>& y);

template <typename T>
void upsample2_backward(const Tensor<T>& dy, Tensor<T>& dx);

/// Throws NumericalError naming `layer` if t holds NaN or Inf.
template <typename T>
void check_finite(const Tensor<T>& t, const std::string& layer);

}  // namespace fusebench::nn
