#include "mcliff/common.hpp"

#include <cstdlib>

namespace mcliff {

int max_dim() {
  static const int cap = [] {
    int n = 12;
    if (const char* env = std::getenv("MC_MAX_DIM")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1) n = static_cast<int>(v);
    }
    return std::min(n, kHardDimCeiling);
  }();
  return cap;
}

void require_dim(int n) {
  if (n < 1 || n > max_dim())
    throw dimension_error("dimension " + std::to_string(n) +
                          " outside [1, " + std::to_string(max_dim()) + "]");
}

}  // namespace mcliff
