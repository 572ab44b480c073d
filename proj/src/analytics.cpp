#include "fpsearch/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fpsearch {

namespace {

void validate_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("epsilon must lie in [0, 1]");
}

void validate_r(double r) {
    if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("r must lie in (0, 1]");
}

void validate_q(int q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
}

long long pow3(int n) {
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

}  // namespace

double error_after(double epsilon, double r, int q) {
    validate_epsilon(epsilon);
    validate_r(r);
    validate_q(q);
    const double x = 1.0 - 2.0 * r * (1.0 - epsilon);
    return epsilon * std::pow(x, 2.0 * q);
}

double deterministic_success(double epsilon, int q) {
    validate_epsilon(epsilon);
    validate_q(q);
    return 1.0 - std::pow(epsilon, 2.0 * q - 2.0) * 0.5 * (1.0 + epsilon);
}

double probabilistic_success(double epsilon, int q) {
    validate_epsilon(epsilon);
    validate_q(q);
    return 0.5 * std::pow(epsilon, 2.0 * q - 2.0) *
           (1.0 + epsilon - 2.0 * epsilon * epsilon * epsilon);
}

double avg_queries_quantum(double epsilon, double r, int q) {
    validate_epsilon(epsilon);
    validate_r(r);
    validate_q(q);
    if (epsilon == 1.0) return q;  // analytic limit, the formula is 0/0 there
    const double x = 1.0 - 2.0 * r * (1.0 - epsilon);
    return 1.0 + (1.0 - std::pow(x, 2.0 * q - 2.0)) / (4.0 * r * (1.0 - epsilon));
}

double avg_queries_classical(double epsilon, int q) {
    validate_epsilon(epsilon);
    validate_q(q);
    if (epsilon == 1.0) return 2.0 * q;  // analytic limit
    return (1.0 - std::pow(epsilon, 2.0 * q)) / (1.0 - epsilon);
}

QueryLimits avg_queries_limits(double epsilon, double r) {
    validate_epsilon(epsilon);
    validate_r(r);
    if (epsilon == 1.0)
        throw std::domain_error("mean query counts diverge at epsilon = 1");
    return {1.0 + 1.0 / (4.0 * r * (1.0 - epsilon)), 1.0 / (1.0 - epsilon)};
}

PlanResult plan_queries(double eps_up, double eps_th) {
    if (!(eps_th > 0.0 && eps_th < eps_up && eps_up < 1.0))
        throw std::domain_error("require 0 < eps_th < eps_up < 1");

    const double ratio = std::log(eps_th) / std::log(eps_up);

    const auto an_ok = [&](long long q) { return std::pow(eps_up, 2.0 * q + 1.0) <= eps_th; };
    long long q_an = std::max<long long>(
        1, static_cast<long long>(std::ceil(0.5 * std::ceil(ratio - 1.0))));
    while (q_an > 1 && an_ok(q_an - 1)) --q_an;
    while (!an_ok(q_an)) ++q_an;

    const auto cl_ok = [&](long long q) { return std::pow(eps_up, q + 1.0) <= eps_th; };
    long long q_cl = std::max<long long>(1, static_cast<long long>(std::ceil(ratio - 1.0)));
    while (q_cl > 1 && cl_ok(q_cl - 1)) --q_cl;
    while (!cl_ok(q_cl)) ++q_cl;

    const auto pi_ok = [&](int n) { return std::pow(eps_up, std::pow(3.0, n)) <= eps_th; };
    int n = std::max(1, static_cast<int>(std::ceil(std::log(ratio) / std::log(3.0))));
    if (n > 39) throw std::overflow_error("required recursion depth out of range");
    while (n > 1 && pi_ok(n - 1)) --n;
    while (!pi_ok(n)) {
        if (++n > 39) throw std::overflow_error("required recursion depth out of range");
    }

    PlanResult plan;
    plan.q_an = q_an;
    plan.q_pi3 = (pow3(n) - 1) / 2;
    plan.q_cl = q_cl;
    plan.eps_up = eps_up;
    plan.eps_th = eps_th;
    return plan;
}

double crossover_epsilon_a(int q) {
    if (q < 2) throw std::invalid_argument("crossover defined for q >= 2 only");
    const auto g = [q](double x) {
        return 2.0 * x + std::pow(x, 2.0 * q - 2.0) - 2.0 * std::pow(x, 2.0 * q) - 1.0;
    };
    // g(0) = -1 and g(1/2) = 2^(1-2q) > 0, so the root is bracketed.
    double lo = 0.0;
    double hi = 0.5;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Thresholds thresholds(double r) {
    validate_r(r);
    Thresholds t;
    if (r > 0.5) {
        t.eps0 = 1.0 - 1.0 / (2.0 * r);
        t.eps_rl = (2.0 * r - 1.0) / (2.0 * r + 1.0);
    }
    return t;
}

std::vector<long long> pi3_query_sequence(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<long long> seq(n);
    seq[0] = 1;
    for (int i = 1; i < n; ++i) seq[i] = 3 * seq[i - 1] + 1;
    return seq;
}

double simple_scheme_error(double epsilon, int n) {
    validate_epsilon(epsilon);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double c2 = 2.0 * epsilon - 1.0;  // cos(2 theta)
    return epsilon * std::pow(c2 * c2, n);
}

double normalization_n(double epsilon) {
    validate_epsilon(epsilon);
    return std::sqrt(2.0 / (1.0 + epsilon));
}

AnalyticReport analytic_report(double epsilon, double r, int q) {
    validate_epsilon(epsilon);
    validate_r(r);
    validate_q(q);

    AnalyticReport rep;
    rep.error_q = error_after(epsilon, r, q);

    // Branch bookkeeping for general r: the loop survives the first
    // measurement with probability keep = 1 - r(1-eps), and each later
    // round rescales the surviving amplitude by x = 1 - 2r(1-eps).
    const double x = 1.0 - 2.0 * r * (1.0 - epsilon);
    const double keep = 1.0 - r * (1.0 - epsilon);
    const double x_2qm2 = std::pow(x, 2.0 * q - 2.0);
    rep.p1 = r * (1.0 - epsilon) + keep * (1.0 - x_2qm2);
    rep.p_prob_success = keep * x_2qm2 - rep.error_q;

    rep.avg_q_quantum = avg_queries_quantum(epsilon, r, q);
    rep.avg_q_classical = avg_queries_classical(epsilon, q);
    if (epsilon == 1.0) {
        rep.limit_quantum = std::numeric_limits<double>::infinity();
        rep.limit_classical = std::numeric_limits<double>::infinity();
    } else {
        const QueryLimits limits = avg_queries_limits(epsilon, r);
        rep.limit_quantum = limits.quantum;
        rep.limit_classical = limits.classical;
    }
    return rep;
}

}  // namespace fpsearch
