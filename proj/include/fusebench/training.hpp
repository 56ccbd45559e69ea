#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "fusebench/denoisers.hpp"
#include "fusebench/fusion.hpp"
#include "fusebench/losses.hpp"
#include "fusebench/noise.hpp"
#include "fusebench/scoring_net.hpp"

namespace fusebench {

struct AugmentConfig {
  bool flip = true;
  bool rotate = true;  // multiples of 90 degrees
  bool crop = true;    // random window; otherwise the top-left window
  bool mixup = false;  // pairs within the batch, lambda ~ Beta(mixup_alpha, mixup_alpha)
  double mixup_alpha = 1.2;
};

struct TrainSchedule {
  int batch = 32;
  int patch = 128;
  double lr_init = 1e-4;
  int decay_every = 200;  // epochs per halving
  double lr_floor = 1e-6;
  int epochs = 2000;
  int iters_per_epoch = 100;
  AugmentConfig augment;
  std::uint64_t seed = 0;

  double lr_at(int epoch) const;
  void validate() const;
};

/// Scorer output handling shared by training and inference.
struct ScorerOptions {
  WeightMode weight_mode = WeightMode::softmax;
  int patch_average = 0;  // > 0: maps averaged over patch x patch tiles
  int mc_samples = 0;     // > 0: average weights over stochastic passes at inference
  std::uint64_t mc_seed = 0;
};

struct LossLogEntry {
  int epoch = 0;
  int iter = 0;
  double lr = 0.0;
  LossTerms terms;
};

/// One training example after the (frozen) pool has been run on it.
struct TrainingSample {
  std::string id;
  ImagePatch noisy;
  ImagePatch clean;
  std::vector<ImagePatch> results;
};

std::vector<TrainingSample> prepare_samples(const std::vector<DenoiserHandle>& pool, const Manifest& dataset);

struct ScorerTrainResult {
  nn::Checkpoint checkpoint;
  std::vector<LossLogEntry> log;
};

/// Trains the scorer with the pool frozen. When `out_dir` is set, writes
/// scorer.ckpt and loss.log (one line per iteration) there. A non-finite
/// loss writes the last good parameters to scorer.ckpt and rethrows
/// NumericalError.
ScorerTrainResult train_scorer(const std::vector<DenoiserHandle>& pool, const Manifest& dataset,
                               const ScoringNetConfig& net_cfg, const LossConfig& cfg, const TrainSchedule& sched,
                               const ScorerOptions& opts = {}, const std::filesystem::path& out_dir = {});
ScorerTrainResult train_scorer(const std::vector<std::string>& pool_names, const std::vector<TrainingSample>& data,
                               const ScoringNetConfig& net_cfg, const LossConfig& cfg, const TrainSchedule& sched,
                               const ScorerOptions& opts = {}, const std::filesystem::path& out_dir = {});

/// Reads the training options recorded in a scorer checkpoint.
ScorerOptions scorer_options_from(const nn::Checkpoint& ckpt);
std::vector<std::string> scorer_pool_from(const nn::Checkpoint& ckpt);

/// Weighting maps for one pool output (eval mode unless mc_samples > 0).
WeightStack predict_weights(const ScoringNet<float>& net, const PoolOutput& pool, const ScorerOptions& opts);
/// predict_weights followed by fuse.
ImagePatch bde_fuse(const ScoringNet<float>& net, const PoolOutput& pool, const ScorerOptions& opts);

struct DistillResult {
  std::string member;
  std::size_t index = 0;
  nn::Checkpoint checkpoint;
  double psnr_before = 0.0;  // mean validation PSNR of the chosen member
};

/// Fine-tunes the pool member with the best mean PSNR on `validation` on
/// (noisy, fused) pairs from `unlabeled`. Zero epochs return the member's
/// parameters and metadata unchanged.
DistillResult distill_best(const std::vector<DenoiserHandle>& pool, const ScoringNet<float>& scorer,
                           const ScorerOptions& opts, const Manifest& unlabeled, const Manifest& validation,
                           const CnnTrainConfig& cfg);

struct GradcheckOptions {
  int levels = 2;
  int base_channels = 4;
  int size = 8;
  int count = 2;    // pool members
  int samples = 2;  // batch items
  double dropout_rate = 0.1;
  double step = 1e-3;
  double tolerance = 1e-3;  // relative
  double floor = 1e-6;      // absolute differences below this always pass
  /// Scalars whose +-step moves change an activation pattern (ReLU mask,
  /// pooling argmax, clamp region or an L1 sign) and whose difference quotient
  /// then disagrees are skipped; more than this fraction fails the check.
  double max_skipped_fraction = 0.25;
  WeightMode weight_mode = WeightMode::softmax;
  int patch_average = 0;
  /// Applied to the analytic gradients before comparison (negative controls).
  std::function<void(nn::ParameterSet<double>&)> corrupt_gradient;
};

struct GradcheckReport {
  bool passed = false;
  std::size_t checked = 0;
  std::size_t kink_agreed = 0;  // crossed a kink but still within tolerance
  std::size_t skipped = 0;
  /// Over kink-free scalars only.
  double max_rel_error = 0.0;
  std::string worst_param;
  std::size_t worst_index = 0;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;

  std::string summary() const;
};

/// Central-difference check of d total_loss / d theta for every trainable
/// scalar of a tiny double-precision scorer on a random instance.
GradcheckReport gradcheck(const LossConfig& cfg, std::uint64_t seed, const GradcheckOptions& opts = {});

}  // namespace fusebench
