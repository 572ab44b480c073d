#include "fpsearch/algorithms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fpsearch/rng.hpp"

namespace fpsearch {

namespace {

void validate_loop_config(const SearchConfig& cfg) {
    if (cfg.q < 1) throw std::invalid_argument("q must be >= 1");
    if (cfg.variant != Variant::standard && cfg.variant != Variant::avoided_target)
        throw std::invalid_argument("variant must be standard or avoided_target");
}

double expected_queries_of(const OutcomeDistribution& dist, int q) {
    // Trajectories reaching the final measurement entered all q iterations.
    double expected = q * (dist.final_success + dist.final_failure);
    for (int k = 0; k < static_cast<int>(dist.exit_success.size()); ++k)
        expected += (k + 1) * dist.exit_success[k];
    return expected;
}

long long pow3(int n) {
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

}  // namespace

double OutcomeDistribution::exit_total() const {
    double total = 0.0;
    for (double p : exit_success) total += p;
    return total;
}

OutcomeDistribution run_fixed_point_exact(const SearchConfig& cfg) {
    validate_loop_config(cfg);
    const bool avoided = cfg.variant == Variant::avoided_target;
    const ProblemAngles angles = problem_angles(cfg.epsilon, cfg.r);

    OutcomeDistribution dist;
    dist.exit_success.assign(cfg.q, 0.0);

    JointState state = prepare_initial(cfg.epsilon, cfg.r);
    double live = 1.0;  // unconditional probability of still being in the loop
    bool alive = true;
    for (int k = 0; k < cfg.q && alive; ++k) {
        state = oracle_query(state, avoided);
        const Ancilla2Measurement m = measure_ancilla2(state);
        dist.exit_success[k] = live * m.p_one;
        if (!m.if_zero) {
            alive = false;
            break;
        }
        live *= m.p_zero;
        state = joint_diffusion(*m.if_zero, angles);
    }
    if (alive) {
        const double p_target = register_target_probability(state);
        dist.final_success = live * (avoided ? 1.0 - p_target : p_target);
        dist.final_failure = live * (avoided ? p_target : 1.0 - p_target);
    }
    dist.expected_queries = expected_queries_of(dist, cfg.q);
    return dist;
}

std::vector<RunRecord> run_fixed_point_sampled(const SearchConfig& cfg, long long trials) {
    validate_loop_config(cfg);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const bool avoided = cfg.variant == Variant::avoided_target;
    const ProblemAngles angles = problem_angles(cfg.epsilon, cfg.r);

    std::vector<RunRecord> records;
    records.reserve(static_cast<std::size_t>(trials));
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(t));
        JointState state = prepare_initial(cfg.epsilon, cfg.r);
        RunRecord rec;
        for (int k = 1; k <= cfg.q; ++k) {
            state = oracle_query(state, avoided);
            const Ancilla2Measurement m = measure_ancilla2(state);
            rec.queries_used = k;
            if (next_uniform(rng) < m.p_one || !m.if_zero) {
                rec.success = true;
                rec.exit_iteration = k;
                break;
            }
            state = joint_diffusion(*m.if_zero, angles);
        }
        if (!rec.exit_iteration) {
            rec.queries_used = cfg.q;
            const bool got_target = next_uniform(rng) < register_target_probability(state);
            rec.success = avoided ? !got_target : got_target;
        }
        records.push_back(rec);
    }
    return records;
}

OutcomeDistribution run_deferred_measurement(const SearchConfig& cfg) {
    if (cfg.q < 1 || cfg.q > 12)
        throw std::invalid_argument("deferred mode supports 1 <= q <= 12");
    const bool avoided = cfg.variant == Variant::avoided_target;
    const ProblemAngles angles = problem_angles(cfg.epsilon, cfg.r);
    const std::array<double, 4> v = joint_source_components(angles);

    // Layout: amp[j * 2^q + m] with j = a1*2 + reg and m the ancilla bits,
    // bit k-1 holding the outcome recorded at iteration k.
    const int q = cfg.q;
    const std::size_t n_anc = std::size_t{1} << q;
    std::vector<Amplitude> amp(4 * n_anc);
    for (std::size_t j = 0; j < 4; ++j) amp[j * n_anc] = v[j];

    const std::size_t j_flip = 2 + (avoided ? kRegNonTarget : kRegTarget);  // a1 = 1
    for (int k = 1; k <= q; ++k) {
        const std::size_t prev_mask = (std::size_t{1} << (k - 1)) - 1;
        const std::size_t bit_k = std::size_t{1} << (k - 1);
        for (std::size_t m = 0; m < n_anc; ++m) {
            if ((m & prev_mask) != 0 || (m & bit_k) != 0) continue;
            std::swap(amp[j_flip * n_anc + m], amp[j_flip * n_anc + (m | bit_k)]);
        }
        const std::size_t ctrl_mask = (std::size_t{1} << k) - 1;
        for (std::size_t m = 0; m < n_anc; ++m) {
            if ((m & ctrl_mask) != 0) continue;
            Amplitude overlap{0.0, 0.0};
            for (std::size_t j = 0; j < 4; ++j) overlap += v[j] * amp[j * n_anc + m];
            for (std::size_t j = 0; j < 4; ++j)
                amp[j * n_anc + m] = 2.0 * overlap * v[j] - amp[j * n_anc + m];
        }
    }

    OutcomeDistribution dist;
    dist.exit_success.assign(q, 0.0);
    for (std::size_t j = 0; j < 4; ++j) {
        const int reg = static_cast<int>(j & 1);
        for (std::size_t m = 0; m < n_anc; ++m) {
            const double p = std::norm(amp[j * n_anc + m]);
            if (m == 0) {
                const bool got_target = reg == kRegTarget;
                const bool success = avoided ? !got_target : got_target;
                (success ? dist.final_success : dist.final_failure) += p;
            } else {
                dist.exit_success[std::countr_zero(m)] += p;
            }
        }
    }
    dist.expected_queries = expected_queries_of(dist, q);
    return dist;
}

SimpleSchemeResult run_simple_scheme(double epsilon, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("epsilon must lie in [0, 1]");
    const double theta = std::acos(std::sqrt(epsilon));
    const double us_t = std::sin(theta);
    const double us_p = std::cos(theta);

    // Register (x) single ancilla, all amplitudes real: {t0, t1, p0, p1}.
    std::array<double, 4> amp{us_t, 0.0, us_p, 0.0};
    SimpleSchemeResult res;
    res.exit_profile.assign(n, 0.0);
    double live = 1.0;
    bool alive = true;
    for (int k = 0; k < n && alive; ++k) {
        std::swap(amp[0], amp[1]);  // oracle flips the ancilla on |t>
        const double p_one = amp[1] * amp[1] + amp[3] * amp[3];
        res.exit_profile[k] = live * p_one;
        const double p_zero = amp[0] * amp[0] + amp[2] * amp[2];
        if (p_zero < kBranchCutoff) {
            alive = false;
            break;
        }
        const double inv = 1.0 / std::sqrt(p_zero);
        amp = {amp[0] * inv, 0.0, amp[2] * inv, 0.0};
        live *= p_zero;
        // reflect the register about U|s>
        const double overlap = us_t * amp[0] + us_p * amp[2];
        amp[0] = 2.0 * overlap * us_t - amp[0];
        amp[2] = 2.0 * overlap * us_p - amp[2];
    }
    res.error_probability = alive ? live * (amp[2] * amp[2] + amp[3] * amp[3]) : 0.0;
    return res;
}

PhasePi3Result run_phase_pi3(double epsilon, int levels,
                             int target_phase_sign, int source_phase_sign) {
    if (levels < 0 || levels > 8)
        throw std::invalid_argument("levels must lie in [0, 8]");
    if (target_phase_sign * target_phase_sign != 1 || source_phase_sign * source_phase_sign != 1)
        throw std::invalid_argument("phase signs must be +1 or -1");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("epsilon must lie in [0, 1]");

    // W is unitary throughout, so it is determined up to column phases by its
    // first column (a, b) = (<t|W|s>, <t_perp|W|s>). The level update
    // W -> W R_s W^dag R_t W closes over that column:
    //   a' = a [wt ws |a|^2 + |b|^2 (wt + ws - 1)]
    //   b' = b [|a|^2 (wt ws - wt + 1) + ws |b|^2]
    // For equal signs wt = ws = w the sixth-root identity w^2 - w + 1 = 0
    // collapses the b update to b' = ws |b|^2 b; for opposite signs
    // wt ws = 1 and wt + ws = 1 collapse the a update to a' = |a|^2 a.
    // Evaluating the collapsed forms keeps the shrinking amplitude
    // multiplicative instead of extracting it from cancellation between O(1)
    // products, which loses all relative accuracy once it drops below the
    // square root of machine epsilon.
    const double theta = std::acos(std::sqrt(epsilon));
    Amplitude a = std::sin(theta);
    Amplitude b = std::cos(theta);
    const double third = std::numbers::pi / 3.0;
    const Amplitude wt = std::polar(1.0, target_phase_sign * third);
    const Amplitude ws = std::polar(1.0, source_phase_sign * third);
    const bool equal_signs = target_phase_sign == source_phase_sign;

    for (int k = 0; k < levels; ++k) {
        const double p = std::norm(a);
        const double e = std::norm(b);
        if (equal_signs) {
            a = a * (wt * ws * p + e * (wt + ws - 1.0));
            b = b * (ws * e);
        } else {
            a = a * p;
            b = b * (p * (wt * ws - wt + 1.0) + ws * e);
        }
    }

    PhasePi3Result res;
    res.error_probability = equal_signs ? std::norm(b) : 1.0 - std::norm(a);
    res.queries = (pow3(levels) - 1) / 2;
    return res;
}

OutcomeDistribution run_classical_exact(double epsilon, int max_iters) {
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("epsilon must lie in [0, 1]");

    OutcomeDistribution dist;
    dist.exit_success.assign(max_iters, 0.0);
    double live = 1.0;
    for (int k = 0; k < max_iters; ++k) {
        dist.exit_success[k] = live * (1.0 - epsilon);
        live *= epsilon;
    }
    // The pick after the last tested item costs no query.
    dist.final_success = live * (1.0 - epsilon);
    dist.final_failure = live * epsilon;
    dist.expected_queries = expected_queries_of(dist, max_iters);
    return dist;
}

std::vector<RunRecord> run_classical_sampled(double epsilon, int max_iters,
                                             long long trials, std::uint64_t seed) {
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("epsilon must lie in [0, 1]");

    std::vector<RunRecord> records;
    records.reserve(static_cast<std::size_t>(trials));
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        RunRecord rec;
        for (int k = 1; k <= max_iters; ++k) {
            rec.queries_used = k;
            if (next_uniform(rng) < 1.0 - epsilon) {
                rec.success = true;
                rec.exit_iteration = k;
                break;
            }
        }
        if (!rec.exit_iteration) {
            rec.queries_used = max_iters;
            rec.success = next_uniform(rng) < 1.0 - epsilon;
        }
        records.push_back(rec);
    }
    return records;
}

PhaseScale general_phase_scale_check(double theta_phase, double phi_phase, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("epsilon must lie in [0, 1]");
    if (epsilon == 0.0)
        throw std::domain_error("scale ratio undefined at epsilon = 0");

    const double theta_angle = std::acos(std::sqrt(epsilon));
    const RegisterMatrix w = register_phase_s(theta_angle, theta_phase) *
                             register_phase_t(phi_phase) * register_u(theta_angle);

    PhaseScale out;
    out.simulated = std::abs(w(1, 0)) / std::cos(theta_angle);
    const Amplitude lead = std::polar(1.0, 0.5 * (theta_phase - phi_phase));
    out.formula = std::abs(lead - 4.0 * std::sin(0.5 * theta_phase) *
                                      std::sin(0.5 * phi_phase) * (1.0 - epsilon));
    return out;
}

}  // namespace fpsearch
