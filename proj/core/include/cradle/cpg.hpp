#pragma once

#include <array>
#include <vector>

namespace cradle {

// Central-pattern-generator feature block: sine waves at fixed coprime
// frequencies plus a phase-inverted copy of the series. The defaults are the
// first eight primes divided by 4, which places them in the 0.5--5 Hz range
// of human rhythmic motion.
inline constexpr std::array<double, 8> kDefaultCpgFrequenciesHz{
    0.5, 0.75, 1.25, 1.75, 2.75, 3.25, 4.25, 4.75};

struct CpgConfig {
  std::array<double, 8> frequencies_hz = kDefaultCpgFrequenciesHz;
  bool include_inverted = true;
};

// Validates that frequencies are strictly positive and strictly increasing.
bool cpg_config_valid(const CpgConfig& cfg);

// Number of entries cpg_block produces for this config (16 by default).
int cpg_block_size(const CpgConfig& cfg);

// Evaluates the block at simulation time t (seconds, t >= 0):
// entries [0,8) are sin(2*pi*t*f_k), entries [8,16) are sin(2*pi*t*f_k - pi).
std::vector<double> cpg_block(double t, const CpgConfig& cfg);

// In-place variant used on the hot path of observation assembly.
void cpg_block(double t, const CpgConfig& cfg, double* out);

}  // namespace cradle
