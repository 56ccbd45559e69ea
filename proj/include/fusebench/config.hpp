#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusebench/denoisers.hpp"
#include "fusebench/losses.hpp"
#include "fusebench/noise.hpp"
#include "fusebench/scoring_net.hpp"
#include "fusebench/training.hpp"

namespace fusebench {

enum class VariantKind { full, minus_mc, minus_sigma, patchwise, direct_weight, minus_fuse, minus_nll, normal };

/// Scorer ablation. Names: full, minus_mc, minus_sigma, patchwise:<p>,
/// direct_weight, minus_fuse, minus_nll, normal.
struct Variant {
  VariantKind kind = VariantKind::full;
  int patch = 0;  // patchwise only

  std::string name() const;
  static Variant parse(const std::string& name);
  /// Adjusts the base settings for this variant.
  void apply(ScoringNetConfig& net, LossConfig& loss, ScorerOptions& opts) const;
};

struct CorpusConfig {
  std::filesystem::path dir;  // empty: <output_dir>/corpus
  bool generate = true;       // write the procedural texture set when the directory is empty
  int count = 20;
  int size = 128;
  int channels = 1;
  std::uint64_t seed = 2024;
};

struct SplitConfig {
  std::string name;
  std::vector<NoiseSpec> noise;
  int patch = 0;        // 0: whole images
  int count = 1;        // entries per noise spec
  int first_image = 0;  // slice of the sorted corpus used by this split
  int image_count = 0;  // 0: all remaining images
};

struct PoolMemberConfig {
  std::string name;
  DenoiserKind kind = DenoiserKind::classic;
  ClassicFilter filter = ClassicFilter::identity;
  double radius = 0.0;
  double noise_level = 0.0;
  std::filesystem::path checkpoint;  // empty: <output_dir>/pool/<name>.ckpt
  std::filesystem::path result_dir;
  std::string method;
};

struct EvalConfig {
  std::string split = "test";
  bool bde = true;
  bool uniform = true;
  bool oracle = true;
  int export_weights = 4;  // images whose weight maps cmd_fuse exports
};

struct AblateConfig {
  std::vector<Variant> variants;
  std::string split = "val";
};

struct SweepConfig {
  std::vector<std::string> order;  // empty: pool order
  std::vector<int> sizes;          // empty: every prefix
  std::string split = "test";
};

struct DistillSettings {
  CnnTrainConfig train;
  std::string unlabeled = "train";
  std::string select = "val";  // split used to pick the best member
  std::string split = "test";  // split the before/after PSNR is reported on
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
  CorpusConfig corpus;
  std::vector<SplitConfig> splits;
  std::vector<PoolMemberConfig> pool;
  CnnTrainConfig denoiser_training;
  ScoringNetConfig scorer;
  LossConfig loss;
  TrainSchedule schedule;
  Variant variant;
  EvalConfig eval;
  AblateConfig ablate;
  SweepConfig sweep;
  DistillSettings distill;

  /// Parses and validates; relative paths resolve against `base_dir`.
  /// Throws ConfigError naming the offending key path.
  static ExperimentConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
  static ExperimentConfig load(const std::filesystem::path& file);

  /// Canonical echo of every effective setting.
  nlohmann::ordered_json to_json() const;

  const SplitConfig& split(const std::string& name) const;
  std::filesystem::path corpus_dir() const;
  std::filesystem::path split_dir(const std::string& name) const;
  std::filesystem::path member_checkpoint(const PoolMemberConfig& m) const;
  std::filesystem::path scorer_dir(const std::string& tag) const;

  /// Seed actually used for a split's noise spec.
  std::uint64_t noise_seed(std::size_t split_index, std::size_t spec_index) const;
  std::uint64_t member_seed(std::size_t member_index) const;
  std::uint64_t scorer_seed() const;

  /// Overrides applied by the CLI (--seed, --out, --variant).
  void override_seed(std::uint64_t s) { seed = s; }
};

}  // namespace fusebench
