#pragma once

#include <array>
#include <complex>
#include <optional>

namespace fpsearch {

using Amplitude = std::complex<double>;

// Tolerance hierarchy: algebraic identities hold to kAlgebraTol, quantities
// compared across modules (roundoff accumulated over q iterations) to
// kEquivalenceTol. A measurement branch below kBranchCutoff is reported as
// absent instead of being renormalized.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEquivalenceTol = 1e-10;
inline constexpr double kBranchCutoff = 1e-15;

// Register basis labels for the two-dimensional search subspace.
inline constexpr int kRegTarget = 0;     // |t>
inline constexpr int kRegNonTarget = 1;  // |t_perp>

// State of ancilla-1 (x) register (x) ancilla-2.
// Index convention: a1*4 + reg*2 + a2 with reg: t = 0, t_perp = 1.
struct JointState {
    std::array<Amplitude, 8> amp{};
};

constexpr int joint_index(int a1, int reg, int a2) { return a1 * 4 + reg * 2 + a2; }

double norm_squared(const JointState& state);

// 2x2 operator on the {t, t_perp} subspace, row-major.
struct RegisterMatrix {
    std::array<Amplitude, 4> m{};

    Amplitude& operator()(int row, int col) { return m[row * 2 + col]; }
    const Amplitude& operator()(int row, int col) const { return m[row * 2 + col]; }
};

RegisterMatrix operator*(const RegisterMatrix& a, const RegisterMatrix& b);
RegisterMatrix adjoint(const RegisterMatrix& a);
// Max |(A^dag A - I)| entry, for unitarity checks.
double unitarity_defect(const RegisterMatrix& a);

// Angles of one search instance: epsilon = cos^2(theta) and
// sin^2(theta_j) = r * sin^2(theta).
struct ProblemAngles {
    double epsilon = 0.0;
    double theta = 0.0;
    double theta_j = 0.0;
    double r = 0.5;
};

// theta is taken in [0, pi/2] via arccos(sqrt(epsilon)), so every prepared
// amplitude is real and non-negative.
ProblemAngles problem_angles(double epsilon, double r);

// Components of (R_r (x) U_theta)|0>|s> on the (a1, reg) factor, index a1*2 + reg.
std::array<double, 4> joint_source_components(const ProblemAngles& angles);

// (R_r (x) U_theta (x) I)|0>|s>|0>.
JointState prepare_initial(double epsilon, double r);

// Flips ancilla-2 on |1>|t> (avoided = false) or on |1>|t_perp> (avoided = true).
JointState oracle_query(const JointState& state, bool avoided);

struct Ancilla2Measurement {
    double p_zero = 0.0;
    double p_one = 0.0;
    std::optional<JointState> if_zero;
    std::optional<JointState> if_one;
};

// Projective measurement of ancilla-2; each present branch is renormalized.
Ancilla2Measurement measure_ancilla2(const JointState& state);

// Reflection 2|v><v| - I on the (ancilla-1 (x) register) factor, identity on
// ancilla-2, with |v> = (R_r (x) U_theta)|0>|s>. Sign convention: the
// component along |v> is preserved and the orthogonal complement is negated.
JointState joint_diffusion(const JointState& state, const ProblemAngles& angles);

// P(register = t), summed over both ancillas.
double register_target_probability(const JointState& state);

// Maps |s> to sin(theta)|t> + cos(theta)|t_perp>. |s> occupies the first
// basis slot, so the matrix is the symmetric involution
// [[sin, cos], [cos, -sin]].
RegisterMatrix register_u(double theta);

// diag(e^{i phi}, 1): selective phase on |t>.
RegisterMatrix register_phase_t(double phi);

// U diag(e^{i phi}, 1) U^dag: selective phase on U|s>, expressed in the
// {t, t_perp} basis.
RegisterMatrix register_phase_s(double theta, double phi);

}  // namespace fpsearch
