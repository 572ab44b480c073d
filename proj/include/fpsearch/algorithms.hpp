#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpsearch/statespace.hpp"

namespace fpsearch {

enum class Variant { standard, avoided_target, deferred_measurement };

struct SearchConfig {
    double epsilon = 0.5;
    double r = 0.5;
    int q = 1;
    Variant variant = Variant::standard;
    std::uint64_t seed = 0;  // sampled mode only
};

// Exact outcome statistics of one run configuration. All probabilities are
// unconditional, so exit_total() + final_success + final_failure = 1.
struct OutcomeDistribution {
    std::vector<double> exit_success;  // [k-1]: P(loop exit at iteration k)
    double final_success = 0.0;        // last register measurement succeeded
    double final_failure = 0.0;        // total error probability of the run
    double expected_queries = 0.0;

    double exit_total() const;
};

struct RunRecord {
    bool success = false;
    int queries_used = 0;
    std::optional<int> exit_iteration;  // 1-based; empty: reached the final measurement
};

// Deterministic branch-tree evaluation: records the exit probability of every
// iteration and follows the outcome-0 branch. Accepts the standard and
// avoided_target variants.
OutcomeDistribution run_fixed_point_exact(const SearchConfig& cfg);

// Stochastic realization of the same algorithm. Trial t draws from a stream
// derived from (cfg.seed, t), so record lists are reproducible and
// independent of scheduling.
std::vector<RunRecord> run_fixed_point_sampled(const SearchConfig& cfg, long long trials);

// Fully unitary variant with one ancilla-2 qubit per iteration: the k-th
// oracle and diffusion act only where ancillas 1..k-1 (resp. 1..k) are 0,
// and everything is measured once at the end. Ancilla outcomes are read in
// iteration order to reassemble the distribution; must match
// run_fixed_point_exact within kEquivalenceTol. q is capped at 12 (state
// dimension 4 * 2^q).
OutcomeDistribution run_deferred_measurement(const SearchConfig& cfg);

struct SimpleSchemeResult {
    double error_probability = 0.0;
    std::vector<double> exit_profile;  // [k-1]: P(exit at iteration k)
};

// Single-ancilla scheme: unconditioned oracle, register-only diffusion.
// Equivalent to the general algorithm at r = 1.
SimpleSchemeResult run_simple_scheme(double epsilon, int n);

struct PhasePi3Result {
    double error_probability = 0.0;
    long long queries = 0;  // (3^levels - 1) / 2
};

// Recursive selective-phase search W_{k+1} = W_k R_s W_k^dag R_t W_k with
// pi/3 phase shifts, starting from W_0 = U_theta. Phase signs are exposed:
// flipping exactly one of them turns epsilon = 1 into the fixed point.
// levels is capped at 8.
PhasePi3Result run_phase_pi3(double epsilon, int levels,
                             int target_phase_sign = +1, int source_phase_sign = +1);

// Classical baseline: pick a random item, spend one query testing it; the
// final pick after max_iters failures is free.
OutcomeDistribution run_classical_exact(double epsilon, int max_iters);
std::vector<RunRecord> run_classical_sampled(double epsilon, int max_iters,
                                             long long trials, std::uint64_t seed);

struct PhaseScale {
    double simulated = 0.0;
    double formula = 0.0;
};

// How one generalized step U R_s^theta U^dag R_t^phi U rescales the
// non-target component of U|s>, measured two ways: from the matrix product
// and from the closed form |e^{i(theta-phi)/2} - 4 sin(theta/2) sin(phi/2) (1-eps)|.
// The ratio is undefined at epsilon = 0 (no non-target component to rescale).
PhaseScale general_phase_scale_check(double theta_phase, double phi_phase, double epsilon);

}  // namespace fpsearch
