#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusebench {

/// Dense float raster, row-major with interleaved channels. Values are
/// nominally in [0,1] but noisy data is allowed to leave that range.
class ImagePatch {
 public:
  ImagePatch() = default;
  ImagePatch(int height, int width, int channels, float fill = 0.0f);
  ImagePatch(int height, int width, int channels, std::vector<float> data);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }
  std::size_t pixels() const { return static_cast<std::size_t>(height_) * width_; }
  bool empty() const { return data_.empty(); }

  float& at(int y, int x, int c) { return data_[index(y, x, c)]; }
  float at(int y, int x, int c) const { return data_[index(y, x, c)]; }
  float& operator[](std::size_t i) { return data_[i]; }
  float operator[](std::size_t i) const { return data_[i]; }

  std::span<float> data() { return data_; }
  std::span<const float> data() const { return data_; }
  std::vector<float>& raw() { return data_; }
  const std::vector<float>& raw() const { return data_; }

  bool same_shape(const ImagePatch& o) const {
    return height_ == o.height_ && width_ == o.width_ && channels_ == o.channels_;
  }
  std::string shape_string() const;

  /// Copy of the rectangle [y0, y0+h) x [x0, x0+w).
  ImagePatch crop(int y0, int x0, int h, int w) const;
  /// Writes `src` into this image with its top-left corner at (y0, x0).
  void paste(const ImagePatch& src, int y0, int x0);
  /// Single channel of this image as a 1-channel patch.
  ImagePatch channel(int c) const;

  bool all_finite() const;
  ImagePatch clipped(float lo = 0.0f, float hi = 1.0f) const;

  friend bool operator==(const ImagePatch&, const ImagePatch&) = default;

 private:
  std::size_t index(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<float> data_;
};

/// Throws std::invalid_argument naming `what` if shapes differ.
void require_same_shape(const ImagePatch& a, const ImagePatch& b, const char* what);

/// Dihedral transform: `rot` quarter turns counter-clockwise, then optional horizontal flip.
ImagePatch dihedral(const ImagePatch& img, int rot, bool flip);

/// Reflect-pads (mirror without repeating the edge) to the requested size.
ImagePatch reflect_pad(const ImagePatch& img, int new_height, int new_width);

}  // namespace fusebench
