#pragma once

#include <string>
#include <vector>

#include "fusebench/image.hpp"

namespace fusebench {

struct PoolResult {
  std::string name;
  ImagePatch image;
};

/// Results of every pool member on one noisy image, in canonical pool order.
/// Fusion weights are positional, so the order is part of the contract.
struct PoolOutput {
  ImagePatch noisy;
  std::vector<PoolResult> results;

  std::size_t size() const { return results.size(); }
  std::vector<ImagePatch> images() const {
    std::vector<ImagePatch> out;
    out.reserve(results.size());
    for (const auto& r : results) out.push_back(r.image);
    return out;
  }
};

}  // namespace fusebench
