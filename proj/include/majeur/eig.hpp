// eig.hpp — Hermitian eigensolver: cyclic Jacobi with complex rotations.
// Deterministic for a fixed input (fixed sweep order, no pivot search),
// which keeps degenerate-cluster bases reproducible run to run.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "majeur/errors.hpp"
#include "majeur/linalg.hpp"

namespace majeur::linalg {

struct EigenDecomposition {
    std::vector<double> eigenvalues;   // ascending
    std::vector<CVector> eigenvectors; // eigenvectors[i] pairs with eigenvalues[i]
};

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < a.dim(); ++p)
        for (std::size_t q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

}  // namespace detail

inline constexpr int kJacobiSweepBudget = 100;

// Diagonalizes a Hermitian matrix. The (p,q) element is annihilated by the
// unitary J = I except J(p,p)=J(q,q)=c, J(p,q)=s, J(q,p)=-conj(s) with
// s = t*c*exp(i arg a_pq) and t the small root of t^2 - 2*theta*t - 1 = 0,
// theta = (a_pp - a_qq) / (2|a_pq|).  A <- J^dag A J, V <- V J.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& input, double tol = 1e-10) {
    if (!input.all_finite()) {
        throw InvalidStateError("hermitian_eig: non-finite entries");
    }
    const double herm_dev = hermiticity_deviation(input);
    if (herm_dev > tol) throw NotHermitianError(herm_dev);

    const std::size_t n = input.dim();
    // Work on the Hermitian part so that deviations below `tol` cannot bias
    // the rotations.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-13 * frobenius_norm(a);

    bool converged = (n < 2) || detail::offdiag_frobenius(a) <= threshold;
    for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double absg = std::abs(g);
                if (absg == 0.0) continue;  // exact zeros never rotate; block structure survives

                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double theta = (alpha - beta) / (2.0 * absg);
                const double t =
                    (theta >= 0.0 ? -1.0 : 1.0) / (std::abs(theta) + std::hypot(1.0, theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = (t * c / absg) * g;
                const Complex sbar = std::conj(s);

                a(p, p) = alpha - t * absg;
                a(q, q) = beta + t * absg;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const Complex arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - sbar * arq;
                    a(r, q) = s * arp + c * arq;
                    a(p, r) = std::conj(a(r, p));
                    a(q, r) = std::conj(a(r, q));
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp - sbar * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
        converged = detail::offdiag_frobenius(a) <= threshold;
    }
    if (!converged) throw NoConvergenceError(kJacobiSweepBudget);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(a(k, k).real());
        CVector col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = v(r, k);
        out.eigenvectors.push_back(std::move(col));
    }
    return out;
}

// Eigenvalues of a Hermitian matrix, ascending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol = 1e-10) {
    return hermitian_eig(a, tol).eigenvalues;
}

}  // namespace majeur::linalg
