#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fusebench/image.hpp"
#include "json.hpp"

namespace fusebench {

enum class NoiseKind { awgn, heteroscedastic, composite };

/// Axis-aligned rectangle in fractional image coordinates, [y0,y1) x [x0,x1).
/// Pixel bounds are round(frac * extent), so shared edges land on the same pixel.
struct FracRect {
  double y0 = 0.0;
  double x0 = 0.0;
  double y1 = 1.0;
  double x1 = 1.0;
};

struct NoiseRegion;

struct NoiseSpec {
  NoiseKind kind = NoiseKind::awgn;
  double sigma = 0.0;    // awgn, 0-255 scale
  double sigma_s = 0.0;  // heteroscedastic signal-dependent part, [0,1] scale
  double sigma_c = 0.0;  // heteroscedastic signal-independent part, [0,1] scale
  std::vector<NoiseRegion> regions;  // composite only
  std::uint64_t seed = 0;

  static NoiseSpec awgn(double sigma, std::uint64_t seed = 0);
  static NoiseSpec heteroscedastic(double sigma_s, double sigma_c, std::uint64_t seed = 0);
};

struct NoiseRegion {
  FracRect rect;
  NoiseSpec spec;
};

/// Default sampling ranges for heteroscedastic parameters. These are
/// assumptions, not calibrated camera values.
inline constexpr double kSigmaSMax = 0.16;
inline constexpr double kSigmaCMax = 0.06;

ImagePatch add_awgn(const ImagePatch& clean, double sigma, std::uint64_t seed);
ImagePatch add_heteroscedastic(const ImagePatch& clean, double sigma_s, double sigma_c,
                               std::uint64_t seed);
/// Region i is synthesized on its own crop with seed spec.seed + i.
ImagePatch add_composite(const ImagePatch& clean, const NoiseSpec& spec);
/// Dispatches on spec.kind using spec.seed.
ImagePatch apply_noise(const ImagePatch& clean, const NoiseSpec& spec);
/// Same as apply_noise with the seed replaced.
ImagePatch apply_noise(const ImagePatch& clean, const NoiseSpec& spec, std::uint64_t seed);

struct PixelRect {
  int y = 0;
  int x = 0;
  int h = 0;
  int w = 0;
};

/// Pixel rectangles of a composite spec; throws std::invalid_argument unless
/// the regions tile the height x width grid exactly once.
std::vector<PixelRect> resolve_regions(const NoiseSpec& spec, int height, int width);

/// Validates ranges and composite tiling (tiling is checked on a unit grid of 64x64).
void validate(const NoiseSpec& spec);

std::string to_string(NoiseKind kind);
nlohmann::ordered_json to_json(const NoiseSpec& spec);
NoiseSpec noise_spec_from_json(const nlohmann::json& j, const std::string& path = "noise");

/// splitmix64 mixing of (base, index); used to derive per-entry seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct ManifestEntry {
  std::string id;
  std::filesystem::path noisy;  // manifest-relative
  std::filesystem::path clean;  // manifest-relative
  std::uint64_t seed = 0;
  int spec_index = 0;
  std::string source;
  int y = 0;
  int x = 0;
};

/// Dataset index: (noisy, clean) float-raster pairs plus the noise specs that made them.
struct Manifest {
  std::filesystem::path root;  // directory holding manifest.json
  int patch = 0;
  std::vector<NoiseSpec> specs;
  std::vector<ManifestEntry> entries;

  std::filesystem::path resolve(const std::filesystem::path& rel) const { return root / rel; }
  ImagePatch load_noisy(std::size_t i) const;
  ImagePatch load_clean(std::size_t i) const;

  void save() const;
  static Manifest load(const std::filesystem::path& dir_or_file);
};

inline constexpr const char* kManifestFile = "manifest.json";

/// Sorted list of loadable images (.png/.fras) in a directory.
std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir);

/// Crops `count_per_spec` patches per spec from the images in clean_dir and
/// writes noisy/clean float rasters plus manifest.json into out_dir.
Manifest make_dataset(const std::filesystem::path& clean_dir, const std::vector<NoiseSpec>& specs,
                      int patch, int count_per_spec, const std::filesystem::path& out_dir);

/// Same, drawing from an explicit list of source images.
Manifest make_dataset(const std::vector<std::filesystem::path>& images, const std::vector<NoiseSpec>& specs,
                      int patch, int count_per_spec, const std::filesystem::path& out_dir);
inline Manifest make_dataset(const std::filesystem::path& clean_dir, const NoiseSpec& spec,
                             int patch, int count, const std::filesystem::path& out_dir) {
  return make_dataset(clean_dir, std::vector<NoiseSpec>{spec}, patch, count, out_dir);
}

}  // namespace fusebench
