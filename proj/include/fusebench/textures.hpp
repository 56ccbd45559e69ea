#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "fusebench/image.hpp"

namespace fusebench {

/// Procedural test image: smooth shaded background with anti-aliased shapes
/// filled by flat color, gratings, checkerboards or fractal value noise.
ImagePatch generate_texture(int size, int channels, std::uint64_t seed);

/// Writes `count` textures as texture_<NN>.png into `dir`; returns the paths.
std::vector<std::filesystem::path> write_texture_set(const std::filesystem::path& dir, int count = 20,
                                                     int size = 128, int channels = 1,
                                                     std::uint64_t seed = 2024);

}  // namespace fusebench
