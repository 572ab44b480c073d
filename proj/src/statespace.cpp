#include "fpsearch/statespace.hpp"

#include <cmath>
#include <stdexcept>

namespace fpsearch {

double norm_squared(const JointState& state) {
    double total = 0.0;
    for (const Amplitude& a : state.amp) total += std::norm(a);
    return total;
}

RegisterMatrix operator*(const RegisterMatrix& a, const RegisterMatrix& b) {
    RegisterMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return out;
}

RegisterMatrix adjoint(const RegisterMatrix& a) {
    RegisterMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = std::conj(a(j, i));
    return out;
}

double unitarity_defect(const RegisterMatrix& a) {
    const RegisterMatrix p = adjoint(a) * a;
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Amplitude want = (i == j) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            worst = std::max(worst, std::abs(p(i, j) - want));
        }
    return worst;
}

ProblemAngles problem_angles(double epsilon, double r) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("epsilon must lie in [0, 1]");
    if (!(r > 0.0 && r <= 1.0))
        throw std::domain_error("r must lie in (0, 1]");
    ProblemAngles angles;
    angles.epsilon = epsilon;
    angles.r = r;
    angles.theta = std::acos(std::sqrt(epsilon));
    angles.theta_j = std::asin(std::sqrt(r) * std::sin(angles.theta));
    return angles;
}

std::array<double, 4> joint_source_components(const ProblemAngles& angles) {
    const double st = std::sin(angles.theta);
    const double ct = std::cos(angles.theta);
    const double w0 = std::sqrt(1.0 - angles.r);
    const double w1 = std::sqrt(angles.r);
    return {w0 * st, w0 * ct, w1 * st, w1 * ct};
}

JointState prepare_initial(double epsilon, double r) {
    const std::array<double, 4> v = joint_source_components(problem_angles(epsilon, r));
    JointState state;
    for (int j = 0; j < 4; ++j) state.amp[2 * j] = v[j];  // ancilla-2 stays |0>
    return state;
}

JointState oracle_query(const JointState& state, bool avoided) {
    JointState out = state;
    const int reg = avoided ? kRegNonTarget : kRegTarget;
    std::swap(out.amp[joint_index(1, reg, 0)], out.amp[joint_index(1, reg, 1)]);
    return out;
}

Ancilla2Measurement measure_ancilla2(const JointState& state) {
    Ancilla2Measurement m;
    for (int i = 0; i < 8; i += 2) m.p_zero += std::norm(state.amp[i]);
    for (int i = 1; i < 8; i += 2) m.p_one += std::norm(state.amp[i]);

    const auto collapse = [&state](int a2, double p) {
        JointState branch;
        const double scale = 1.0 / std::sqrt(p);
        for (int i = a2; i < 8; i += 2) branch.amp[i] = state.amp[i] * scale;
        return branch;
    };
    if (m.p_zero >= kBranchCutoff) m.if_zero = collapse(0, m.p_zero);
    if (m.p_one >= kBranchCutoff) m.if_one = collapse(1, m.p_one);
    return m;
}

JointState joint_diffusion(const JointState& state, const ProblemAngles& angles) {
    const std::array<double, 4> v = joint_source_components(angles);
    JointState out;
    for (int a2 = 0; a2 < 2; ++a2) {
        Amplitude overlap{0.0, 0.0};
        for (int j = 0; j < 4; ++j) overlap += v[j] * state.amp[2 * j + a2];
        for (int j = 0; j < 4; ++j)
            out.amp[2 * j + a2] = 2.0 * overlap * v[j] - state.amp[2 * j + a2];
    }
    return out;
}

double register_target_probability(const JointState& state) {
    double p = 0.0;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            p += std::norm(state.amp[joint_index(a1, kRegTarget, a2)]);
    return p;
}

RegisterMatrix register_u(double theta) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    RegisterMatrix u;
    u(0, 0) = st;
    u(0, 1) = ct;
    u(1, 0) = ct;
    u(1, 1) = -st;
    return u;
}

RegisterMatrix register_phase_t(double phi) {
    RegisterMatrix d;
    d(0, 0) = std::polar(1.0, phi);
    d(1, 1) = 1.0;
    return d;
}

RegisterMatrix register_phase_s(double theta, double phi) {
    const RegisterMatrix u = register_u(theta);
    return u * register_phase_t(phi) * adjoint(u);
}

}  // namespace fpsearch
