#include "cradle/cpg.hpp"

#include <cmath>

namespace cradle {

bool cpg_config_valid(const CpgConfig& cfg) {
  double prev = 0.0;
  for (double f : cfg.frequencies_hz) {
    if (!(f > prev) || !std::isfinite(f)) return false;
    prev = f;
  }
  return true;
}

int cpg_block_size(const CpgConfig& cfg) {
  const int n = static_cast<int>(cfg.frequencies_hz.size());
  return cfg.include_inverted ? 2 * n : n;
}

void cpg_block(double t, const CpgConfig& cfg, double* out) {
  const int n = static_cast<int>(cfg.frequencies_hz.size());
  for (int k = 0; k < n; ++k) {
    out[k] = std::sin(2.0 * M_PI * t * cfg.frequencies_hz[k]);
  }
  if (cfg.include_inverted) {
    for (int k = 0; k < n; ++k) {
      out[n + k] = std::sin(2.0 * M_PI * t * cfg.frequencies_hz[k] - M_PI);
    }
  }
}

std::vector<double> cpg_block(double t, const CpgConfig& cfg) {
  std::vector<double> out(cpg_block_size(cfg));
  cpg_block(t, cfg, out.data());
  return out;
}

}  // namespace cradle
