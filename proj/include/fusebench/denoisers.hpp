#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "fusebench/image.hpp"
#include "fusebench/noise.hpp"
#include "fusebench/pool_output.hpp"
#include "fusebench/residual_cnn.hpp"

namespace fusebench {

enum class DenoiserKind { classic, trained_cnn, external };
enum class ClassicFilter { identity, gaussian, median };

std::string to_string(DenoiserKind kind);
std::string to_string(ClassicFilter filter);

/// One pool member. Handles are immutable once built; trained models are
/// shared between copies.
struct DenoiserHandle {
  std::string name;
  DenoiserKind kind = DenoiserKind::classic;

  // classic
  ClassicFilter filter = ClassicFilter::identity;
  double radius = 0.0;  // gaussian: sigma in pixels; median: window half-size

  // trained_cnn
  std::filesystem::path checkpoint;
  double noise_level = 0.0;  // training sigma on the 0-255 scale
  std::shared_ptr<const ResidualCnn<float>> model;

  // external: <result_dir>/<method>/<image_stem>.<ext>
  std::filesystem::path result_dir;
  std::string method;

  bool trainable() const { return kind == DenoiserKind::trained_cnn; }
  bool loaded() const { return kind != DenoiserKind::trained_cnn || model != nullptr; }

  /// `image_id` is only consulted by external handles.
  ImagePatch apply(const ImagePatch& noisy, const std::string& image_id = {}) const;

  static DenoiserHandle classic(std::string name, ClassicFilter filter, double radius = 0.0);
  /// Loads the checkpoint eagerly; throws MissingArtifactError if absent.
  static DenoiserHandle trained(std::string name, const std::filesystem::path& checkpoint);
  static DenoiserHandle trained(std::string name, std::shared_ptr<const ResidualCnn<float>> model,
                                double noise_level = 0.0);
  static DenoiserHandle external(std::string name, std::filesystem::path result_dir,
                                 std::string method);
};

/// identity, gaussian sigma 1 and 2, median radius 1 and 2.
std::vector<DenoiserHandle> classic_denoisers();

/// Throws std::invalid_argument on an empty pool or duplicate names.
void validate_pool(const std::vector<DenoiserHandle>& pool);
std::vector<std::string> pool_names(const std::vector<DenoiserHandle>& pool);

/// Applies every member in pool order.
PoolOutput run_pool(const std::vector<DenoiserHandle>& pool, const ImagePatch& noisy,
                    const std::string& image_id = {});

/// Separable Gaussian (radius ceil(3 sigma)) with symmetric padding that
/// repeats the edge sample, which keeps the image mean unchanged.
ImagePatch gaussian_blur(const ImagePatch& img, double sigma);
/// Per-channel median over a (2r+1)^2 window, same padding as gaussian_blur.
ImagePatch median_filter(const ImagePatch& img, int radius);

/// Finds `<dir>/<method>/<stem>.*` among loadable raster extensions.
std::filesystem::path resolve_external(const std::filesystem::path& dir, const std::string& method,
                                       const std::string& stem);

struct CnnTrainConfig {
  ResidualCnnConfig arch;
  int epochs = 10;
  int iters_per_epoch = 100;
  int batch = 16;
  int patch = 40;
  double lr_init = 1e-3;
  double lr_floor = 1e-6;
  int decay_every = 200;  // epochs per halving
  std::uint64_t seed = 0;
};

struct CnnTrainResult {
  nn::Checkpoint checkpoint;
  std::vector<double> epoch_loss;  // mean residual MSE per epoch
  std::vector<double> iter_loss;
};

/// Trains a residual CNN on clean patches of `dataset` with fresh AWGN of
/// `noise_level` (0-255 scale) drawn per batch. Writes the checkpoint and a
/// loss log next to it when `out` is non-empty. Throws NumericalError on a
/// non-finite loss.
CnnTrainResult train_cnn_denoiser(const CnnTrainConfig& cfg, const Manifest& dataset,
                                  double noise_level, const std::filesystem::path& out = {});

/// Continues training an existing model on explicit (input, target) pairs,
/// where the target is the desired denoised image. Used by distillation.
CnnTrainResult finetune_cnn(const ResidualCnn<float>& start, const CnnTrainConfig& cfg,
                            const std::vector<ImagePatch>& inputs,
                            const std::vector<ImagePatch>& targets);

}  // namespace fusebench
