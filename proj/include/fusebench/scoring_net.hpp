#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusebench/image.hpp"
#include "fusebench/nn/layers.hpp"
#include "fusebench/nn/params.hpp"

namespace fusebench {

/// U-Net scorer layout. Encoder level l has two 3x3 convs with
/// base_channels * 2^l filters; levels are joined by 2x2 max-pooling.
/// Each decoder level upsamples (nearest), convolves, and adds the encoder
/// skip. Levels above 0 apply a second conv; level 0 ends in the two
/// single-channel heads. With 4 levels that is 8 + 6 = 14 conv layers along
/// the deepest path.
struct ScoringNetConfig {
  int levels = 4;
  int base_channels = 32;
  int kernel = 3;
  int image_channels = 1;
  double dropout_rate = 0.1;  // dropout after every ReLU
  bool mc_dropout_enabled = true;

  int input_channels() const { return 2 * image_channels; }
  int channels_at(int level) const { return base_channels << level; }
  /// Spatial sizes must be multiples of this; other sizes are reflect-padded.
  int size_multiple() const { return 1 << (levels - 1); }
  void validate() const;
};

/// Closed-form scalar parameter count.
std::size_t scoring_param_count(const ScoringNetConfig& cfg);

enum class Mode { train, eval };

struct ScoreBundle {
  ImagePatch score;         // single channel, unbounded logits
  ImagePatch log_variance;  // single channel, log sigma^2
  std::string denoiser_name;
};

template <typename T>
class ScoringNet {
 public:
  struct Block {
    nn::Tensor<T> input;
    nn::Tensor<T> act;     // ReLU output before dropout
    std::vector<T> drop;   // dropout scale, empty if no dropout
  };
  struct Cache {
    std::vector<Block> enc1;
    std::vector<Block> enc2;
    std::vector<std::vector<std::uint8_t>> pool_argmax;  // index l: pooling of enc level l
    std::vector<Block> dec_up;    // index l for l < levels-1
    std::vector<Block> dec_conv;  // index l for 1 <= l < levels-1
    nn::Tensor<T> head_input;
  };
  struct Output {
    nn::Tensor<T> score;
    nn::Tensor<T> log_variance;
  };

  explicit ScoringNet(ScoringNetConfig cfg = {});

  const ScoringNetConfig& config() const { return cfg_; }
  nn::ParameterSet<T>& params() { return params_; }
  const nn::ParameterSet<T>& params() const { return params_; }

  /// Fan-in-scaled uniform weights, zero biases. `zero_heads` zeroes the
  /// head weights too, so both output maps start at exactly 0.
  void init(std::uint64_t seed, bool zero_heads = false);

  /// Raw forward on a [2*image_channels][batch][H][W] tensor whose spatial
  /// size is a multiple of size_multiple(). Dropout is active only in train
  /// mode with mc_dropout_enabled; masks are drawn from dropout_seed.
  Output forward(const nn::Tensor<T>& input, Mode mode, std::uint64_t dropout_seed,
                 Cache* cache = nullptr) const;

  /// Accumulates parameter gradients.
  void backward(const Cache& cache, const nn::Tensor<T>& d_score, const nn::Tensor<T>& d_log_variance);

  std::size_t head_score_index() const { return head_score_; }
  std::size_t head_log_variance_index() const { return head_logvar_; }

  nn::Checkpoint to_checkpoint(nn::Metadata meta) const;
  static ScoringNet from_checkpoint(const nn::Checkpoint& ckpt);

 private:
  struct Conv {
    nn::ConvShape shape;
    std::size_t weight = 0;
    std::size_t bias = 0;
    std::string name;
  };

  Conv add_conv(const std::string& name, int in, int out);
  void run_block(const Conv& conv, nn::Tensor<T> input, bool train, std::mt19937_64& rng,
                 Block* cache, nn::Tensor<T>& out) const;
  nn::Tensor<T> back_block(const Conv& conv, const Block& blk, nn::Tensor<T> grad, bool need_dx);
  void conv_only(const Conv& conv, const nn::Tensor<T>& input, nn::Tensor<T>& out) const;

  ScoringNetConfig cfg_;
  nn::ParameterSet<T> params_;
  std::vector<Conv> enc1_;
  std::vector<Conv> enc2_;
  std::vector<Conv> dec_up_;
  std::vector<Conv> dec_conv_;
  Conv head_score_conv_;
  Conv head_logvar_conv_;
  std::size_t head_score_ = 0;
  std::size_t head_logvar_ = 0;
};

/// Scores one (noisy, denoised) pair. Inputs are reflect-padded to a valid
/// size and the maps cropped back.
template <typename T>
ScoreBundle score(const ScoringNet<T>& net, const ImagePatch& noisy, const ImagePatch& denoised,
                  Mode mode, std::uint64_t dropout_seed = 0);

/// Scores every pool result of one noisy image in a single batched pass.
template <typename T>
std::vector<ScoreBundle> score_all(const ScoringNet<T>& net, const ImagePatch& noisy,
                                   const std::vector<ImagePatch>& denoised, Mode mode,
                                   std::uint64_t dropout_seed = 0);

/// Replaces each map by its mean over non-overlapping patch x patch tiles
/// (edge tiles may be partial).
ImagePatch tile_average(const ImagePatch& map, int patch);

/// Patch-level variant: pixel-wise maps averaged over tiles and broadcast.
template <typename T>
ScoreBundle score_patchwise(const ScoringNet<T>& net, const ImagePatch& noisy,
                            const ImagePatch& denoised, int patch, Mode mode = Mode::eval,
                            std::uint64_t dropout_seed = 0);

template <typename T>
ScoringNet<T> init_parameters(const ScoringNetConfig& cfg, std::uint64_t seed) {
  ScoringNet<T> net(cfg);
  net.init(seed);
  return net;
}

}  // namespace fusebench
