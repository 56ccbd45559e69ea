#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusebench/config.hpp"
#include "fusebench/denoisers.hpp"
#include "fusebench/noise.hpp"

namespace fusebench {

// Artifact layout under output_dir:
//   corpus/                     generated clean images (unless corpus.dir is set)
//   data/<split>/               manifest.json + noisy/clean rasters
//   pool/<member>.ckpt          trained CNN members
//   scorer/<variant>/           scorer.ckpt, loss.log, config.json
//   fused/<variant>/            <id>.fras, <id>.png, weights/<id>/weight_<member>.{fras,png}
//   eval/<variant>/             report.json, psnr.png
//   ablation/                   table.json, table.txt, ablation.png
//   sweep/                      series.json, sweep.png, scorers in sweep/scorer_k<k>/
//   distill/                    <member>.ckpt, report.json

struct CommandOptions {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  std::optional<std::string> variant;
  bool force = false;  // retrain models whose checkpoints are already current
};

ExperimentConfig load_experiment(const CommandOptions& opts);

/// Filesystem-safe variant name ("patchwise:8" -> "patchwise_8").
std::string variant_tag(const Variant& v);

/// Pool handles in config order; trained members load their checkpoints.
std::vector<DenoiserHandle> build_pool(const ExperimentConfig& cfg);

/// Manifest of a synthesized split; MissingArtifactError if absent.
Manifest load_split(const ExperimentConfig& cfg, const std::string& split);

/// Short label of a noise spec, e.g. "awgn25", "hetero0.08_0.02", "composite".
std::string noise_label(const NoiseSpec& spec);

void cmd_synthesize(const ExperimentConfig& cfg, std::ostream& log);
void cmd_train_pool(const ExperimentConfig& cfg, std::ostream& log, bool force = false);
void cmd_train_scorer(const ExperimentConfig& cfg, std::ostream& log, bool force = false);
void cmd_fuse(const ExperimentConfig& cfg, std::ostream& log);
/// Writes and returns the run report.
nlohmann::ordered_json cmd_evaluate(const ExperimentConfig& cfg, std::ostream& log);
nlohmann::ordered_json cmd_ablate(const ExperimentConfig& cfg, std::ostream& log, bool force = false);
nlohmann::ordered_json cmd_pool_sweep(const ExperimentConfig& cfg, std::ostream& log, bool force = false);
nlohmann::ordered_json cmd_distill(const ExperimentConfig& cfg, std::ostream& log);

const std::vector<std::string>& command_names();

/// Loads the config, runs one command and maps failures to exit codes:
/// 0 success, 1 config error, 2 missing artifact, 3 numerical failure.
int run_command(const std::string& command, const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace fusebench
