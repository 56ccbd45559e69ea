#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "fusebench/image.hpp"

namespace fusebench {

// Float raster container (".fras"):
//   "FRAS" | u16 version=1 | u32 height | u32 width | u32 channels | f32 data...
// all little-endian, data row-major with interleaved channels.
inline constexpr std::uint16_t kFrasVersion = 1;

/// Loads a float container or an 8-bit PNG (values divided by 255).
/// The format is chosen from the file's magic bytes.
ImagePatch load_raster(const std::filesystem::path& path);

/// Writes a float container unless the extension is ".png", in which case
/// values are clamped to [0,1] and quantized with round-half-up.
void save_raster(const ImagePatch& img, const std::filesystem::path& path);

void save_fras(const ImagePatch& img, const std::filesystem::path& path);
ImagePatch load_fras(const std::filesystem::path& path);
void save_png8(const ImagePatch& img, const std::filesystem::path& path);
ImagePatch load_png8(const std::filesystem::path& path);

/// 8-bit quantization used for PNG export.
std::uint8_t to_u8(float v);

/// Writes raw RGB8 pixels (height*width*3 bytes) as a PNG.
void write_rgb_png(const std::filesystem::path& path, int height, int width,
                   const std::vector<std::uint8_t>& rgb);

}  // namespace fusebench
