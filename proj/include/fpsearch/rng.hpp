#pragma once

#include <cstdint>
#include <random>

namespace fpsearch {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

// Generator stream for one trial, derived counter-style from
// (master_seed, trial) so results do not depend on execution order.
std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial);

// Uniform double in [0, 1) from the top 53 bits; bit-identical everywhere,
// unlike std::uniform_real_distribution.
double next_uniform(std::mt19937_64& rng);

}  // namespace fpsearch
