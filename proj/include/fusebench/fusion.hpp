#pragma once

#include <filesystem>
#include <vector>

#include "fusebench/image.hpp"
#include "fusebench/pool_output.hpp"

namespace fusebench {

/// Per-pixel convex weights, one single-channel map per pool member.
struct WeightStack {
  std::vector<ImagePatch> weights;

  std::size_t size() const { return weights.size(); }
  /// Largest |sum_c w_c - 1| over pixels.
  double max_sum_error() const;
  bool in_unit_range() const;
};

/// One-hot argmin masks and the per-pixel squared errors they came from.
struct OracleWeights {
  std::vector<ImagePatch> masks;
  std::vector<ImagePatch> error_maps;

  /// Masks as a WeightStack (they are already normalized).
  WeightStack as_weights() const { return {masks}; }
};

/// Softmax across maps at each pixel, with per-pixel max subtraction.
WeightStack softmax_weights(const std::vector<ImagePatch>& scores);

/// Clamps each map to [0,1] and renormalizes per pixel; pixels whose clamped
/// sum is below 1e-8 get uniform weights.
WeightStack direct_weights(const std::vector<ImagePatch>& raw);

inline constexpr double kDirectWeightFloor = 1e-8;

/// sum_c w_c * z_c with single-channel weights broadcast over color channels.
ImagePatch fuse(const std::vector<ImagePatch>& results, const WeightStack& weights);
inline ImagePatch fuse(const PoolOutput& pool, const WeightStack& weights) {
  return fuse(pool.images(), weights);
}

/// e_c = squared error summed over channels; masks select the argmin with
/// ties going to the lowest pool index.
OracleWeights oracle_weights(const std::vector<ImagePatch>& results, const ImagePatch& ground_truth);
inline OracleWeights oracle_weights(const PoolOutput& pool, const ImagePatch& ground_truth) {
  return oracle_weights(pool.images(), ground_truth);
}

/// Equal weights 1/C everywhere.
WeightStack uniform_weights(std::size_t count, int height, int width);

/// Writes weight_<i>.fras per map plus an 8-bit heat map weight_<i>.png.
void export_weights(const WeightStack& weights, const std::vector<std::string>& names,
                    const std::filesystem::path& dir);

/// Blue-to-red heat map of a single-channel map with values in [0,1].
std::vector<std::uint8_t> heat_map_rgb(const ImagePatch& map);

}  // namespace fusebench
