#pragma once

#include <optional>
#include <vector>

namespace fpsearch {

// eps * (1 - 2r(1-eps))^(2q); reduces to eps^(2q+1) at r = 1/2.
double error_after(double epsilon, double r, int q);

// Total probability of exiting the loop on an ancilla outcome of 1:
// 1 - eps^(2q-2) (1+eps)/2.
double deterministic_success(double epsilon, int q);

// Probability that the final register measurement succeeds:
// eps^(2q-2) (1 + eps - 2 eps^3) / 2.
double probabilistic_success(double epsilon, int q);

// Mean query count of the measured algorithm,
// 1 + (1 - (1-2r(1-eps))^(2q-2)) / (4r(1-eps)); at eps = 1 the analytic
// limit q is returned.
double avg_queries_quantum(double epsilon, double r, int q);

// Mean query count of the classical baseline over 2q iterations,
// (1 - eps^(2q)) / (1 - eps); at eps = 1 the analytic limit 2q is returned.
double avg_queries_classical(double epsilon, int q);

struct QueryLimits {
    double quantum = 0.0;    // 1 + 1/(4r(1-eps))
    double classical = 0.0;  // 1/(1-eps)
};

// q -> infinity limits; throws std::domain_error at eps = 1 (both diverge).
QueryLimits avg_queries_limits(double epsilon, double r);

struct PlanResult {
    long long q_an = 0;
    long long q_pi3 = 0;
    long long q_cl = 0;
    double eps_up = 0.0;
    double eps_th = 0.0;
};

// Smallest query budget guaranteeing error <= eps_th given error <= eps_up,
// for each algorithm. Ceiling formulas are used as a starting point and the
// result is settled by the defining power inequalities, which floating-point
// logs cannot be trusted with at exact integer ratios.
PlanResult plan_queries(double eps_up, double eps_th);

// Root of 2x + x^(2q-2) - 2x^(2q) = 1 on (0, 1/2): the epsilon above which
// the measured algorithm beats the classical baseline on mean queries.
// Bisection; residual below kAlgebraTol. q = 1 is rejected (the equation
// degenerates).
double crossover_epsilon_a(int q);

struct Thresholds {
    std::optional<double> eps0;    // 1 - 1/(2r): error vanishes at q = 1
    std::optional<double> eps_rl;  // (2r-1)/(2r+1): faster-than-eps^(2q+1) point
};

// Both thresholds exist only for r > 1/2.
Thresholds thresholds(double r);

// q_1 = 1, q_i = 3 q_{i-1} + 1: allowed query counts of the recursive
// phase-shift search.
std::vector<long long> pi3_query_sequence(int n);

// eps (2 eps - 1)^(2n): error of the single-ancilla scheme after n iterations.
double simple_scheme_error(double epsilon, int n);

// sqrt(2 / (1 + eps)).
double normalization_n(double epsilon);

struct AnalyticReport {
    double error_q = 0.0;
    double p1 = 0.0;
    double p_prob_success = 0.0;
    double avg_q_quantum = 0.0;
    double avg_q_classical = 0.0;
    double limit_quantum = 0.0;    // +inf at eps = 1
    double limit_classical = 0.0;  // +inf at eps = 1
};

// Closed-form counterpart of run_fixed_point_exact for general r;
// error_q + p1 + p_prob_success = 1.
AnalyticReport analytic_report(double epsilon, double r, int q);

}  // namespace fpsearch
