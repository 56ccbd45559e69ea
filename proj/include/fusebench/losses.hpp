#pragma once

#include <vector>

#include "fusebench/fusion.hpp"
#include "fusebench/image.hpp"
#include "fusebench/nn/tensor.hpp"

namespace fusebench {

struct LossConfig {
  double lambda_tv = 0.01;
  double lambda_0 = 1.0;
  bool use_nll = true;
  bool use_fuse = true;
  bool fix_sigma = false;  // log-variance treated as identically 0

  /// Throws ConfigError when both terms are disabled or a weight is negative.
  void validate() const;
};

/// How raw score maps become weights.
enum class WeightMode { softmax, direct };

struct LossTerms {
  double nll = 0.0;
  double fuse = 0.0;
  double total = 0.0;
};

/// Mean over pixels of |forward dx| + |forward dy|; the difference past the
/// last row/column is 0 (replicate boundary). Single-channel maps only.
double tv(const ImagePatch& map);

/// Mean absolute error between sum_c w_c z_c and gt over pixels and channels.
double loss_fuse(const WeightStack& weights, const std::vector<ImagePatch>& results, const ImagePatch& gt);
inline double loss_fuse(const WeightStack& weights, const PoolOutput& results, const ImagePatch& gt) {
  return loss_fuse(weights, results.images(), gt);
}

/// (1/C) sum_c [mean(exp(-v_c) (w_c - w_c^gt)^2) + mean(v_c / 2) + lambda_tv TV(w_c)].
double loss_nll(const WeightStack& weights, const std::vector<ImagePatch>& log_var,
                const OracleWeights& oracle, double lambda_tv);

/// L = L_nll + lambda_0 L_fuse with terms dropped per cfg; the oracle masks
/// are computed from `results` and `gt`. `log_var` is ignored with fix_sigma.
LossTerms total_loss(const LossConfig& cfg, const WeightStack& weights, const std::vector<ImagePatch>& log_var,
                     const std::vector<ImagePatch>& results, const ImagePatch& gt);

/// Batched loss on network outputs. Layout: sample b, pool member c lives at
/// batch index b*count + c of `score`, `log_var`, `results` and `oracle`;
/// `gt` has one batch item per sample. The loss is the mean of the
/// per-sample losses. Gradients are w.r.t. the raw score and log-variance maps.
template <typename T>
struct BatchLoss {
  LossTerms terms;
  nn::Tensor<T> d_score;
  nn::Tensor<T> d_log_var;
};

template <typename T>
BatchLoss<T> batch_loss(const LossConfig& cfg, WeightMode mode, int count, const nn::Tensor<T>& score,
                        const nn::Tensor<T>& log_var, const nn::Tensor<T>& results, const nn::Tensor<T>& gt,
                        const nn::Tensor<T>& oracle, bool want_grad);

/// Weights from raw maps laid out as in batch_loss (1 x B*count x H x W).
template <typename T>
nn::Tensor<T> weights_from_scores(WeightMode mode, int count, const nn::Tensor<T>& score);

}  // namespace fusebench
