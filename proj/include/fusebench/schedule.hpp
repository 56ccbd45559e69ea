#pragma once

#include <algorithm>
#include <cmath>

namespace fusebench {

/// Step decay: max(lr_init * 0.5^floor(epoch / decay_every), lr_floor).
inline double step_lr(double lr_init, int epoch, int decay_every, double lr_floor) {
  const int halvings = decay_every > 0 ? epoch / decay_every : 0;
  return std::max(lr_init * std::pow(0.5, halvings), lr_floor);
}

}  // namespace fusebench
