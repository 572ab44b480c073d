#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpsearch/algorithms.hpp"

namespace fpsearch {

// Exact-mode guard on the database dimension.
inline constexpr std::size_t kMaxExactItems = std::size_t{1} << 14;

struct DatabaseSpec {
    std::size_t n_items = 0;            // power of two
    std::vector<std::uint32_t> marked;  // sorted, unique, < n_items

    double marked_fraction() const;
    double epsilon() const;  // 1 - M/N
};

DatabaseSpec make_database(std::size_t n_items, std::vector<std::uint32_t> marked);

// n_marked distinct indices chosen by a seeded shuffle.
DatabaseSpec make_random_database(std::size_t n_items, std::size_t n_marked,
                                  std::uint64_t seed);

// 4N amplitudes over ancilla-1 (x) item (x) ancilla-2,
// index a1*2N + item*2 + a2.
struct FullState {
    std::size_t n_items = 0;
    std::vector<Amplitude> amp;
};

std::size_t full_index(std::size_t n_items, int a1, std::size_t item, int a2);
double norm_squared(const FullState& state);

// (R_r (x) U (x) I)|0>|s>|0> with U the uniform-superposition preparer.
FullState prepare_initial_full(const DatabaseSpec& spec, double r);

// Flips ancilla-2 where ancilla-1 = 1 and the item is marked.
FullState oracle_query_full(const FullState& state, const DatabaseSpec& spec);

struct FullMeasurement {
    double p_zero = 0.0;
    double p_one = 0.0;
    std::optional<FullState> if_zero;
    std::optional<FullState> if_one;
};

FullMeasurement measure_ancilla2_full(const FullState& state);

// Reflection about (R_r (x) U)|0>|s> on the (ancilla-1 (x) item) factor.
FullState joint_diffusion_full(const FullState& state, double r);

// P(item is marked), summed over both ancillas.
double marked_probability(const FullState& state, const DatabaseSpec& spec);

OutcomeDistribution run_fixed_point_full_exact(const DatabaseSpec& spec, int q, double r);
std::vector<RunRecord> run_fixed_point_full_sampled(const DatabaseSpec& spec, int q, double r,
                                                    long long trials, std::uint64_t seed);

struct ReducedState {
    JointState state;
    double residual = 0.0;  // norm of the component outside the invariant subspace
};

// Projects onto the subspace spanned by the uniform-marked and
// uniform-unmarked superpositions. A residual at or above kEquivalenceTol
// indicates a gate bug and throws.
ReducedState reduce_state(const FullState& full, const DatabaseSpec& spec);

}  // namespace fpsearch
