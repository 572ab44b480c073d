#include "fpsearch/rng.hpp"

namespace fpsearch {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
    return std::mt19937_64(mix64(master_seed ^ mix64(trial)));
}

double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace fpsearch
