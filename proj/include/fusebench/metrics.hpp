#pragma once

#include <string>
#include <vector>

#include "fusebench/image.hpp"

namespace fusebench {

/// Returned by psnr() when the two images are identical.
inline constexpr double kPsnrCap = 99.0;

double mse(const ImagePatch& a, const ImagePatch& b);

/// 10*log10(peak^2 / MSE), capped at kPsnrCap.
double psnr(const ImagePatch& a, const ImagePatch& b, double peak = 1.0);

/// Mean SSIM over all valid 11x11 Gaussian windows (sigma 1.5, K1=0.01,
/// K2=0.03, dynamic range 1), averaged over channels.
double ssim(const ImagePatch& a, const ImagePatch& b);

struct ImageScore {
  std::string id;
  double psnr = 0.0;
  double ssim = 0.0;
};

struct MetricReport {
  double psnr = 0.0;
  double ssim = 0.0;
  std::vector<ImageScore> per_image;

  void add(std::string id, double p, double s);
  /// Recomputes the aggregates as arithmetic means of per_image.
  void finalize();
};

}  // namespace fusebench
