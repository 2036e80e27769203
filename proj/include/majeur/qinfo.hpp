// qinfo.hpp — von Neumann entropies, projective measurements on a qubit
// register, Holevo quantities, and both entropic-uncertainty evaluators:
// the numeric path (pure linear algebra on rho_ABC) and the closed forms
// in (omega, lambda).  All entropies are in bits.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "majeur/density.hpp"
#include "majeur/eig.hpp"
#include "majeur/errors.hpp"
#include "majeur/fock.hpp"
#include "majeur/linalg.hpp"

namespace majeur::qi {

// ----------------------------- measurement bases ------------------------------

// A pair of orthogonal rank-1 projectors on a 2-dimensional subsystem.
struct MeasurementBasis {
    std::array<ComplexMatrix, 2> projectors;

    static MeasurementBasis from_kets(const CVector& k0, const CVector& k1) {
        if (k0.size() != 2 || k1.size() != 2) {
            throw DimensionMismatchError("MeasurementBasis: kets must be 2-dimensional");
        }
        MeasurementBasis b{{linalg::outer(k0, k0), linalg::outer(k1, k1)}};
        const ComplexMatrix sum = b.projectors[0] + b.projectors[1];
        if (linalg::max_abs(sum - ComplexMatrix::identity(2)) > 1e-12 ||
            linalg::max_abs(b.projectors[0] * b.projectors[1]) > 1e-12) {
            throw InvalidStateError("MeasurementBasis: projectors are not an orthogonal pair");
        }
        return b;
    }

    static MeasurementBasis pauli_z() {
        return from_kets({1.0, 0.0}, {0.0, 1.0});
    }

    static MeasurementBasis pauli_x() {
        const double r = 1.0 / std::numbers::sqrt2;
        return from_kets({r, r}, {r, -r});
    }

    // Z basis rotated by angle theta about y: kets cos(t/2)|0> +/- sin(t/2)|1>.
    static MeasurementBasis rotated(double theta) {
        const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
        return from_kets({c, s}, {-s, c});
    }
};

// c = max_{i,j} |<psi_i|phi_j>|^2; in [1/2, 1] for qubit bases.
inline double complementarity(const MeasurementBasis& b1, const MeasurementBasis& b2) {
    double c = 0.0;
    for (const auto& p : b1.projectors)
        for (const auto& q : b2.projectors)
            c = std::max(c, linalg::trace(p * q).real());
    return c;
}

// -------------------------------- entropies -----------------------------------

namespace detail {

inline double entropy_bits_of_probs(const std::vector<double>& w) {
    double s = 0.0;
    for (double p : w) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

}  // namespace detail

// S(rho) = -Tr rho log2 rho.  Eigenvalues within 1e-10 of [0,1] are clipped;
// anything further out (or a trace off by more than 1e-8) raises InvalidState
// so construction bugs are not silently absorbed as numerical noise.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    detail::check_shape(rho);
    if (!rho.matrix.all_finite()) throw InvalidStateError("entropy: non-finite entries");
    if (std::abs(linalg::trace(rho.matrix) - Complex(1.0)) > 1e-8) {
        throw InvalidStateError("entropy: trace deviates from 1 by more than 1e-8");
    }
    auto w = linalg::hermitian_eigenvalues(rho.matrix);
    for (double& p : w) {
        if (p < -1e-10 || p > 1.0 + 1e-10) {
            throw InvalidStateError("entropy: eigenvalue outside [0,1] beyond tolerance");
        }
        p = std::clamp(p, 0.0, 1.0);
    }
    return detail::entropy_bits_of_probs(w);
}

// S(target|memory) = S(rho_{target,memory}) - S(rho_memory)
inline double conditional_entropy(const DensityMatrix& rho, const std::string& target,
                                  const std::string& memory) {
    const auto joint = partial_trace(rho, {target, memory});
    const auto mem = partial_trace(rho, {memory});
    return von_neumann_entropy(joint) - von_neumann_entropy(mem);
}

// I(a:b) = S(rho_a) + S(rho_b) - S(rho_ab) >= 0
inline double mutual_information(const DensityMatrix& rho, const std::string& a,
                                 const std::string& b) {
    return von_neumann_entropy(partial_trace(rho, {a})) +
           von_neumann_entropy(partial_trace(rho, {b})) -
           von_neumann_entropy(partial_trace(rho, {a, b}));
}

// ------------------------- projective measurement maps ------------------------

// rho' = sum_n Pi_n ox Tr_on{(Pi_n ox I) rho (Pi_n ox I)}, with the measured
// register put back in its original slot.
inline DensityMatrix post_measurement_state(const DensityMatrix& rho,
                                            const MeasurementBasis& basis,
                                            const std::string& on) {
    if (rho.subsystem_dim(on) != 2) {
        throw DimensionMismatchError("post_measurement_state: measured subsystem must be a qubit");
    }
    // Work with the measured register in front, then restore the order.
    std::vector<std::string> front{on};
    for (const auto& l : rho.labels)
        if (l != on) front.push_back(l);
    const DensityMatrix perm = permute_subsystems(rho, front);

    const std::size_t rest_dim = perm.matrix.dim() / 2;
    const ComplexMatrix id_rest = ComplexMatrix::identity(rest_dim);
    ComplexMatrix out(perm.matrix.dim());
    const std::vector<std::string> rest_labels(front.begin() + 1, front.end());
    for (const auto& proj : basis.projectors) {
        const ComplexMatrix big = linalg::kron(proj, id_rest);
        const ComplexMatrix sandwich = big * perm.matrix * big;
        if (rest_labels.empty()) {
            out = out + linalg::trace(sandwich) * proj;
        } else {
            const DensityMatrix block =
                partial_trace(DensityMatrix{sandwich, perm.dims, front}, rest_labels);
            out = out + linalg::kron(proj, block.matrix);
        }
    }
    return permute_subsystems(DensityMatrix{std::move(out), perm.dims, front}, rho.labels);
}

// Holevo quantity S(rho_memory) - sum_i p_i S(rho_{memory|i}) for a projective
// measurement on `measured`.  Outcomes with p_i < 1e-14 contribute nothing
// (the 0 log 0 convention); the result is clamped at the [0, S(rho_memory)]
// boundary against roundoff.
inline double holevo_quantity(const DensityMatrix& rho, const MeasurementBasis& basis,
                              const std::string& measured, const std::string& memory) {
    if (rho.subsystem_dim(measured) != 2) {
        throw DimensionMismatchError("holevo_quantity: measured subsystem must be a qubit");
    }
    const DensityMatrix pair =
        permute_subsystems(partial_trace(rho, {measured, memory}), {measured, memory});
    const std::size_t mem_dim = pair.dims[1];
    const ComplexMatrix id_mem = ComplexMatrix::identity(mem_dim);

    double acc = 0.0;
    double total_p = 0.0;
    for (const auto& proj : basis.projectors) {
        const ComplexMatrix big = linalg::kron(proj, id_mem);
        const ComplexMatrix sandwich = big * pair.matrix * big;
        const double p = linalg::trace(sandwich).real();
        total_p += p;
        if (p < 1e-14) continue;  // ZeroProbabilityOutcome: term dropped
        const DensityMatrix cond = partial_trace(
            DensityMatrix{(1.0 / p) * sandwich, pair.dims, pair.labels}, {memory});
        acc += p * von_neumann_entropy(cond);
    }
    if (std::abs(total_p - 1.0) > 1e-12) {
        throw InvalidStateError("holevo_quantity: outcome probabilities do not sum to 1");
    }
    const double s_mem = von_neumann_entropy(partial_trace(rho, {memory}));
    double h = s_mem - acc;
    if (h < 0.0 && h > -1e-12) h = 0.0;
    return h;
}

// ------------------------------ closed forms ----------------------------------

// Binary entropy in bits.
inline double binary_entropy(double p) {
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

// Every closed-form scalar of the tripartite analysis, in bits.
struct AnalyticQuantities {
    double eta_sq = 0.0;        // eta_+^2
    double xi_sq = 0.0;         // xi_+^2
    double script_A = 0.0;      // A = xi_+^2 - eta_+^2 (signed)
    double s_rhoX_AB = 0.0;     // S(rho^X_AB)
    double s_X_given_B = 0.0;   // S(X|B)
    double s_rhoZ_AC = 0.0;     // S(rho^Z_AC)
    double s_Z_given_C = 0.0;   // S(Z|C) = 1
    double s_A_given_B = 0.0;   // S(A|B)
    double s_rho_AC = 0.0;      // S(rho_AC) = 1
    double s_rho_AB = 0.0;      // S(rho_AB)
    double s_A_given_C = 0.0;   // S(A|C)
    double i_AB = 0.0;          // I(A:B)
    double i_AC = 0.0;          // I(A:C)
    double h_XB = 0.0;          // H(X:B)
    double h_ZC = 0.0;          // H(Z:C) = 0
    double delta = 0.0;         // delta = h2((1+A)/2)
};

inline AnalyticQuantities analytic_quantities(double omega, double lambda) {
    if (!(omega >= 0.0) || !std::isfinite(omega) || !std::isfinite(lambda)) {
        throw UnsupportedConfigurationError(
            "analytic_quantities: omega must be finite and non-negative, lambda finite");
    }
    const double d = std::hypot(omega, 2.0 * lambda);
    if (d <= 0.0) throw DegenerateDeltaError("analytic_quantities: Delta = 0");
    const double npsq = 4.0 * lambda * lambda + (omega + d) * (omega + d);

    AnalyticQuantities q;
    q.xi_sq = (omega + d) * (omega + d) / npsq;
    q.eta_sq = 4.0 * lambda * lambda / npsq;
    q.script_A = q.xi_sq - q.eta_sq;

    const double abs_a = std::abs(q.script_A);
    const double lo = (1.0 - abs_a) / 2.0, hi = (1.0 + abs_a) / 2.0;
    q.s_rhoX_AB = 0.0;
    if (lo > 0.0) q.s_rhoX_AB -= lo * std::log2(lo / 2.0);
    q.s_rhoX_AB -= hi * std::log2(hi / 2.0);
    q.s_X_given_B = q.s_rhoX_AB - 1.0;

    const double h2xi = binary_entropy(q.xi_sq);
    q.s_rhoZ_AC = h2xi + 1.0;
    q.s_Z_given_C = 1.0;
    q.s_A_given_B = h2xi - 1.0;
    q.s_rho_AC = 1.0;
    q.s_rho_AB = h2xi;
    q.s_A_given_C = 1.0 - h2xi;
    q.i_AB = 2.0 - h2xi;
    q.i_AC = h2xi;
    q.delta = binary_entropy((1.0 + q.script_A) / 2.0);
    q.h_XB = 1.0 - q.delta;
    q.h_ZC = 0.0;
    return q;
}

// ------------------------------ EUR evaluators ---------------------------------

struct BipartiteEur {
    double lhs = 0.0;  // S(X|B) + S(Z|B)
    double rhs = 0.0;  // log2(1/c) + S(A|B)
    double gap = 0.0;  // lhs - rhs >= 0 for all valid states
};

// S(X|B) + S(Z|B) >= log2(1/c) + S(A|B) for a two-qubit state with labels
// (A, B); measurements are Pauli X and Z on A.
inline BipartiteEur bipartite_eur(const DensityMatrix& rho_ab) {
    if (rho_ab.subsystem_count() != 2 || rho_ab.subsystem_dim("A") != 2) {
        throw DimensionMismatchError("bipartite_eur: expected qubit subsystems A, B");
    }
    const auto x = MeasurementBasis::pauli_x();
    const auto z = MeasurementBasis::pauli_z();
    const DensityMatrix rx = post_measurement_state(rho_ab, x, "A");
    const DensityMatrix rz = post_measurement_state(rho_ab, z, "A");
    const double s_x_b = von_neumann_entropy(rx) - von_neumann_entropy(partial_trace(rx, {"B"}));
    const double s_z_b = von_neumann_entropy(rz) - von_neumann_entropy(partial_trace(rz, {"B"}));
    BipartiteEur out;
    out.lhs = s_x_b + s_z_b;
    out.rhs = std::log2(1.0 / complementarity(x, z)) + conditional_entropy(rho_ab, "A", "B");
    out.gap = out.lhs - out.rhs;
    return out;
}

// Numeric-vs-analytic report for the tripartite relation.
struct EurReport {
    AnalyticQuantities numeric;   // from linear algebra on rho_ABC
    AnalyticQuantities analytic;  // closed forms (NaN until filled)
    double lhs = 0.0;             // S(X|B) + S(Z|C)
    double rhs = 0.0;             // log2(1/c) + max{0, delta} + (S(A|B)+S(A|C))/2
    double gap = 0.0;
    double bipartite_lhs = 0.0;
    double bipartite_rhs = 0.0;
    double bipartite_gap = 0.0;
    double complementarity_c = 0.0;
};

namespace detail {

inline void fill_unset(AnalyticQuantities& q) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    q.eta_sq = q.xi_sq = q.script_A = nan;
    q.s_rhoX_AB = q.s_X_given_B = q.s_rhoZ_AC = q.s_Z_given_C = nan;
    q.s_A_given_B = q.s_rho_AC = q.s_rho_AB = q.s_A_given_C = nan;
    q.i_AB = q.i_AC = q.h_XB = q.h_ZC = q.delta = nan;
}

}  // namespace detail

// Evaluates every report field from rho_ABC alone (no closed forms); the
// analytic side is left NaN for the caller to fill.  A and B must be qubits,
// with Pauli X measured against memory B and Pauli Z against memory C.
inline EurReport tripartite_eur(const DensityMatrix& rho_abc) {
    if (rho_abc.subsystem_count() != 3 || rho_abc.subsystem_dim("A") != 2 ||
        rho_abc.subsystem_dim("B") != 2) {
        throw DimensionMismatchError("tripartite_eur: expected labels {A,B,C} with qubit A, B");
    }
    const auto x = MeasurementBasis::pauli_x();
    const auto z = MeasurementBasis::pauli_z();

    const DensityMatrix rho_ab = permute_subsystems(partial_trace(rho_abc, {"A", "B"}), {"A", "B"});
    const DensityMatrix rho_ac = permute_subsystems(partial_trace(rho_abc, {"A", "C"}), {"A", "C"});
    const DensityMatrix rho_c = partial_trace(rho_abc, {"C"});

    const DensityMatrix rho_x_ab = post_measurement_state(rho_ab, x, "A");
    const DensityMatrix rho_z_ac = post_measurement_state(rho_ac, z, "A");

    EurReport rep;
    detail::fill_unset(rep.analytic);
    AnalyticQuantities& n = rep.numeric;

    // xi_+^2 and eta_+^2 are read off the Majorana-mode marginal
    // rho_C = xi^2 |0><0| + eta^2 |1><1|.
    n.xi_sq = rho_c.matrix(0, 0).real();
    n.eta_sq = rho_c.matrix(1, 1).real();
    n.script_A = n.xi_sq - n.eta_sq;

    n.s_rhoX_AB = von_neumann_entropy(rho_x_ab);
    n.s_X_given_B =
        n.s_rhoX_AB - von_neumann_entropy(partial_trace(rho_x_ab, {"B"}));
    n.s_rhoZ_AC = von_neumann_entropy(rho_z_ac);
    n.s_Z_given_C =
        n.s_rhoZ_AC - von_neumann_entropy(partial_trace(rho_z_ac, {"C"}));
    n.s_A_given_B = conditional_entropy(rho_abc, "A", "B");
    n.s_rho_AC = von_neumann_entropy(rho_ac);
    n.s_rho_AB = von_neumann_entropy(rho_ab);
    n.s_A_given_C = conditional_entropy(rho_abc, "A", "C");
    n.i_AB = mutual_information(rho_abc, "A", "B");
    n.i_AC = mutual_information(rho_abc, "A", "C");
    n.h_XB = holevo_quantity(rho_abc, x, "A", "B");
    n.h_ZC = holevo_quantity(rho_abc, z, "A", "C");
    n.delta = 0.5 * (n.i_AB + n.i_AC) - (n.h_XB + n.h_ZC);

    rep.complementarity_c = complementarity(x, z);
    rep.lhs = n.s_X_given_B + n.s_Z_given_C;
    rep.rhs = std::log2(1.0 / rep.complementarity_c) + std::max(0.0, n.delta) +
              0.5 * (n.s_A_given_B + n.s_A_given_C);
    rep.gap = rep.lhs - rep.rhs;

    const BipartiteEur bi = bipartite_eur(rho_ab);
    rep.bipartite_lhs = bi.lhs;
    rep.bipartite_rhs = bi.rhs;
    rep.bipartite_gap = bi.gap;
    return rep;
}

// ------------------------- ground-state construction --------------------------

// rho_ABC = |e1><e1| with A = QD1, B = QD2, C = Majorana mode, reordered from
// the Fock-basis factor order (B, A, C) to (A, B, C).
inline DensityMatrix ground_state_abc(double omega, double lambda) {
    const fock::ModelParams p{omega, lambda};
    const CVector e1 = fock::ground_state(p);
    const DensityMatrix fock_order = pure_state(e1, {2, 2, 2}, {"B", "A", "C"});
    return permute_subsystems(fock_order, {"A", "B", "C"});
}

// Full side-by-side report at a parameter point: numeric path on the ground
// state plus the closed forms.
inline EurReport eur_report(double omega, double lambda) {
    EurReport rep = tripartite_eur(ground_state_abc(omega, lambda));
    rep.analytic = analytic_quantities(omega, lambda);
    return rep;
}

// Largest |numeric - analytic| over all paired report fields.
inline double max_numeric_deviation(const EurReport& rep) {
    const AnalyticQuantities& n = rep.numeric;
    const AnalyticQuantities& a = rep.analytic;
    const double devs[] = {
        std::abs(n.eta_sq - a.eta_sq),           std::abs(n.xi_sq - a.xi_sq),
        std::abs(n.script_A - a.script_A),       std::abs(n.s_rhoX_AB - a.s_rhoX_AB),
        std::abs(n.s_X_given_B - a.s_X_given_B), std::abs(n.s_rhoZ_AC - a.s_rhoZ_AC),
        std::abs(n.s_Z_given_C - a.s_Z_given_C), std::abs(n.s_A_given_B - a.s_A_given_B),
        std::abs(n.s_rho_AC - a.s_rho_AC),       std::abs(n.s_rho_AB - a.s_rho_AB),
        std::abs(n.s_A_given_C - a.s_A_given_C), std::abs(n.i_AB - a.i_AB),
        std::abs(n.i_AC - a.i_AC),               std::abs(n.h_XB - a.h_XB),
        std::abs(n.h_ZC - a.h_ZC),               std::abs(n.delta - a.delta)};
    return *std::max_element(std::begin(devs), std::end(devs));
}

// ------------------------------- asymptotics -----------------------------------

struct AsymptoticBounds {
    double min_uncertainty = 0.0;  // valid for eps_M >> lambda
    double max_uncertainty = 0.0;  // valid for eps_M << lambda
};

// Quoted expansions of the uncertainty sum in the two extreme regimes, with
// eps_M = 2*omega.  Regime validity is the caller's concern.
//
// The max-side formula agrees with the exact S(rho^X_AB) = 1 + h2((1+A)/2) to
// leading order.  The min-side formula does not: exactly, 1 - A = 2 eta_+^2
// with eta_+^2 -> 4 lambda^2/eps_M^2, hence the true correction is
// (eps/ln2)(1 + ln(1/eps)) at eps = 4 lambda^2/eps_M^2, while the formula
// below equals that expression at eps/16.  Inside its own regime it
// underestimates the exact correction by a factor approaching 16; the
// acceptance suite records this discrepancy rather than patching the formula.
inline AsymptoticBounds asymptotic_bounds(double omega, double lambda) {
    const double eps_m = 2.0 * omega;
    const double ln2 = std::numbers::ln2;
    AsymptoticBounds b;
    const double r2 = (lambda * lambda) / (eps_m * eps_m);
    b.min_uncertainty = 1.0 + (1.0 / (4.0 * ln2)) * r2 * (1.0 + std::log(4.0 / r2));
    b.max_uncertainty = 2.0 - (1.0 / (32.0 * ln2)) / r2;
    return b;
}

}  // namespace majeur::qi
