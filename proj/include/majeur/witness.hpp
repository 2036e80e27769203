// witness.hpp — the direct/indirect measurement protocol on the two dots and
// the quantum witness W = |P - Q|, both as the full numeric protocol and as
// the closed form xi_+^2 / 4.
//
// The Kraus pair L1 = sqrt(mu1) |1><0|_1 ox |0><1|_2,
// L2 = sqrt(mu2) |0><1|_1 ox |1><0|_2 is implemented exactly as printed even
// though sum L^dag L != I, so the map is trace-decreasing on part of the
// space; both the direct and the indirect branch use the same map and the
// witness reproduces the closed form.  The trace deficit is observable via
// apply_channel (it returns a plain matrix, not a DensityMatrix).

#pragma once

#include <cmath>

#include "majeur/density.hpp"
#include "majeur/errors.hpp"
#include "majeur/linalg.hpp"
#include "majeur/qinfo.hpp"

namespace majeur::witness {

using linalg::Complex;
using linalg::ComplexMatrix;
using qi::DensityMatrix;

struct KrausChannel {
    double mu1 = 0.5;
    double mu2 = 0.5;
    ComplexMatrix l1;  // sqrt(mu1) |1><0|_1 ox |0><1|_2
    ComplexMatrix l2;  // sqrt(mu2) |0><1|_1 ox |1><0|_2
};

inline KrausChannel make_kraus_channel(double mu1) {
    if (!(mu1 >= 0.0 && mu1 <= 1.0)) {
        throw ConfigError("make_kraus_channel: mu1 must lie in [0, 1]");
    }
    KrausChannel ch;
    ch.mu1 = mu1;
    ch.mu2 = 1.0 - mu1;
    ch.l1 = ComplexMatrix(4);
    ch.l2 = ComplexMatrix(4);
    // two-qubit basis |n_1 n_2> with index 2*n_1 + n_2
    ch.l1(2, 1) = std::sqrt(ch.mu1);  // |10><01|
    ch.l2(1, 2) = std::sqrt(ch.mu2);  // |01><10|
    return ch;
}

// F[rho] = sum_a L_a rho L_a^dag; Hermitian and PSD, but the trace may drop
// below 1 (see the header note).
inline ComplexMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch) {
    if (rho.matrix.dim() != 4) {
        throw DimensionMismatchError("apply_channel: expected a two-qubit state");
    }
    return ch.l1 * rho.matrix * linalg::dagger(ch.l1) +
           ch.l2 * rho.matrix * linalg::dagger(ch.l2);
}

// Reduced ground state of the dots: Tr_C |e1><e1|, labels (A, B) in Kronecker
// order.  Equals eta_+^2 |Phi^-><Phi^-| + xi_+^2 |Psi^+><Psi^+|.
inline DensityMatrix ground_state_qd_density(double omega, double lambda) {
    return qi::partial_trace(qi::ground_state_abc(omega, lambda), {"A", "B"});
}

// rho_post = (|0><0|_1 ox I_2) rho (|0><0|_1 ox I_2), renormalized.
inline DensityMatrix post_select_qd1_ground(const DensityMatrix& rho) {
    if (rho.matrix.dim() != 4) {
        throw DimensionMismatchError("post_select_qd1_ground: expected a two-qubit state");
    }
    ComplexMatrix proj(4);
    proj(0, 0) = 1.0;
    proj(1, 1) = 1.0;
    ComplexMatrix projected = proj * rho.matrix * proj;
    const double p = linalg::trace(projected).real();
    if (p <= 1e-14) {
        throw ZeroProbabilityOutcomeError(
            "post_select_qd1_ground: projected weight vanishes");
    }
    return DensityMatrix{(1.0 / p) * projected, rho.dims, rho.labels};
}

enum class Dot { qd1, qd2 };

struct MeasurementTarget {
    Dot dot = Dot::qd2;
    int outcome = 0;  // 0 = ground, 1 = excited
};

struct WitnessResult {
    double p_direct = 0.0;
    double q_indirect = 0.0;
    double witness = 0.0;
    double analytic_witness = 0.0;
};

// W = (1/4) (omega + Delta)^2 / (4 lambda^2 + (omega + Delta)^2) = xi_+^2 / 4,
// the closed form for the symmetric map and target (QD2, outcome 0).
inline double analytic_witness(double omega, double lambda) {
    if (!(omega >= 0.0) || !std::isfinite(omega) || !std::isfinite(lambda)) {
        throw UnsupportedConfigurationError(
            "analytic_witness: omega must be finite and non-negative, lambda finite");
    }
    const double d = std::hypot(omega, 2.0 * lambda);
    if (d <= 0.0) throw DegenerateDeltaError("analytic_witness: Delta = 0");
    const double wd = (omega + d) * (omega + d);
    return 0.25 * wd / (4.0 * lambda * lambda + wd);
}

// Full protocol: P = Tr{Pi F[rho]} against Q = Tr{Pi F[rho_post]} where
// rho_post conditions QD1 on outcome |0>.  General (dot, outcome) targets are
// accepted; the closed form is reproduced for the default target under the
// symmetric map.
inline WitnessResult quantum_witness(double omega, double lambda, double mu1 = 0.5,
                                     MeasurementTarget target = {}) {
    if (target.outcome != 0 && target.outcome != 1) {
        throw ConfigError("quantum_witness: outcome must be 0 or 1");
    }
    const KrausChannel ch = make_kraus_channel(mu1);
    const DensityMatrix rho = ground_state_qd_density(omega, lambda);

    ComplexMatrix proj1(2);
    proj1(std::size_t(target.outcome), std::size_t(target.outcome)) = 1.0;
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix pi = (target.dot == Dot::qd1) ? linalg::kron(proj1, id2)
                                                      : linalg::kron(id2, proj1);

    WitnessResult out;
    out.p_direct = linalg::trace(pi * apply_channel(rho, ch)).real();
    out.q_indirect =
        linalg::trace(pi * apply_channel(post_select_qd1_ground(rho), ch)).real();
    out.witness = std::abs(out.p_direct - out.q_indirect);
    out.analytic_witness = analytic_witness(omega, lambda);
    return out;
}

}  // namespace majeur::witness
