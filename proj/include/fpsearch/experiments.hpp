#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fpsearch/algorithms.hpp"

namespace fpsearch {

enum class Provenance { closed_form, exact_sim, sampled };

// Grid sweep with one epsilon column followed by value columns.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<Provenance> provenance;  // one tag per column
    std::vector<std::vector<double>> rows;
};

// A closed form and its simulation recomputation disagreed.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Figure1Row {
    double simple_scheme = 0.0;  // 4 eps^3 - 4 eps^2 + eps
    double phase_pi3 = 0.0;      // eps^3
};

// One-query error probabilities, each cross-checked against the exact
// simulation before being returned.
Figure1Row figure1_point(double epsilon);
SweepTable figure1_data(double grid_step);

struct Figure4Row {
    double fixed_point_avg = 0.0;    // mean queries of the measured algorithm
    double phase_pi3_queries = 0.0;  // constant q: that search never exits early
    double classical_avg = 0.0;      // mean queries of the baseline, 2q iterations
};

Figure4Row figure4_point(double epsilon, int q);
SweepTable figure4_data(double grid_step, int q = 4);

struct MonteCarloSummary {
    long long trials = 0;
    double mean_queries = 0.0;
    double queries_stderr = 0.0;
    double success_rate = 0.0;
    double success_stderr = 0.0;
};

// Aggregates run_fixed_point_sampled; stderr = sample sd / sqrt(trials).
MonteCarloSummary monte_carlo_summary(const SearchConfig& cfg, long long trials);

struct ScalingRow {
    double f = 0.0;
    long long q_needed = 0;  // min q with (1-f)^(2q+1) <= 1/e
    double q_times_f = 0.0;
};

std::vector<ScalingRow> scaling_scan(const std::vector<double>& f_values);

struct VerificationCheck {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// The full closed-form vs simulation matrix. Every check must pass on a
// correct build.
std::vector<VerificationCheck> run_verification_matrix();

}  // namespace fpsearch
