#pragma once

#include <cstdint>

#include "fusebench/image.hpp"
#include "fusebench/nn/layers.hpp"
#include "fusebench/nn/params.hpp"

namespace fusebench {

struct ResidualCnnConfig {
  int channels = 1;  // image channels
  int depth = 8;     // conv layers
  int width = 32;    // feature channels of hidden layers
};

/// Plain conv+ReLU stack that predicts the noise; the denoised image is
/// input minus prediction.
template <typename T>
class ResidualCnn {
 public:
  struct Cache {
    std::vector<nn::Tensor<T>> inputs;  // input of each conv
    std::vector<nn::Tensor<T>> acts;    // ReLU outputs of hidden convs
  };

  explicit ResidualCnn(ResidualCnnConfig cfg = {});

  const ResidualCnnConfig& config() const { return cfg_; }
  nn::ParameterSet<T>& params() { return params_; }
  const nn::ParameterSet<T>& params() const { return params_; }

  /// He-uniform hidden layers, 1/sqrt(fan_in) output layer, zero biases.
  void init(std::uint64_t seed);

  /// Predicted noise for a batch.
  nn::Tensor<T> predict_noise(const nn::Tensor<T>& x, Cache* cache = nullptr) const;
  /// Accumulates parameter gradients given dLoss/d(predicted noise).
  void backward(const Cache& cache, const nn::Tensor<T>& d_noise);

  ImagePatch denoise(const ImagePatch& noisy) const;

  nn::Checkpoint to_checkpoint(nn::Metadata meta) const;
  static ResidualCnn from_checkpoint(const nn::Checkpoint& ckpt);

 private:
  nn::ConvShape layer_shape(int i) const;

  ResidualCnnConfig cfg_;
  nn::ParameterSet<T> params_;
};

}  // namespace fusebench
