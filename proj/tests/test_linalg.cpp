#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "majeur/eig.hpp"
#include "majeur/fock.hpp"
#include "majeur/linalg.hpp"

using namespace majeur;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::CVector;
using Catch::Approx;

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

// Seeded random Hermitian matrix with entries of order 1.
ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = Complex(u(rng), u(rng));
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

// Integer-valued random matrix; products of entries stay exact in doubles.
ComplexMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> u(-4, 4);
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(u(rng), u(rng));
    return a;
}

}  // namespace

TEST_CASE("kron basics") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(linalg::max_abs(linalg::kron(i2, i2) - ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix d = ComplexMatrix::diagonal({1.0, 2.0});
    const ComplexMatrix k = linalg::kron(d, i2);
    CHECK(linalg::max_abs(k - ComplexMatrix::diagonal({1.0, 1.0, 2.0, 2.0})) == 0.0);

    // bit flip on both factors: (sx ox sx)|00> = |11>
    const ComplexMatrix xx = linalg::kron(pauli_x(), pauli_x());
    const CVector out = linalg::apply(xx, linalg::basis_vector(4, 0));
    CHECK(out[3] == Complex(1.0));
    CHECK(std::abs(out[0]) + std::abs(out[1]) + std::abs(out[2]) == 0.0);
}

TEST_CASE("kron associativity on integer-valued random triples") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 10; ++rep) {
        const auto a = random_integer_matrix(rng, 2);
        const auto b = random_integer_matrix(rng, 3);
        const auto c = random_integer_matrix(rng, 2);
        const auto left = linalg::kron(linalg::kron(a, b), c);
        const auto right = linalg::kron(a, linalg::kron(b, c));
        CHECK(linalg::max_abs(left - right) == 0.0);
    }
}

TEST_CASE("dagger") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(linalg::max_abs(linalg::dagger(i2) - i2) == 0.0);

    ComplexMatrix lower(2);  // sigma^- = |0><1|
    lower(0, 1) = 1.0;
    ComplexMatrix raise(2);  // sigma^+ = |1><0|
    raise(1, 0) = 1.0;
    CHECK(linalg::max_abs(linalg::dagger(lower) - raise) == 0.0);

    std::mt19937_64 rng(7);
    const auto a = random_integer_matrix(rng, 4);
    CHECK(linalg::max_abs(linalg::dagger(linalg::dagger(a)) - a) == 0.0);
}

TEST_CASE("trace and matmul") {
    CHECK(linalg::trace(ComplexMatrix::identity(8)) == Complex(8.0));
    CHECK(linalg::trace(pauli_x()) == Complex(0.0));
    CHECK(linalg::max_abs(pauli_x() * pauli_x() - ComplexMatrix::identity(2)) == 0.0);
    CHECK_THROWS_AS(linalg::matmul(pauli_x(), ComplexMatrix::identity(3)),
                    DimensionMismatchError);
}

TEST_CASE("hermitian_eig on diagonal input") {
    const auto eig = linalg::hermitian_eig(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
    REQUIRE(eig.eigenvalues.size() == 3);
    CHECK(eig.eigenvalues[0] == Approx(1.0).margin(1e-14));
    CHECK(eig.eigenvalues[1] == Approx(2.0).margin(1e-14));
    CHECK(eig.eigenvalues[2] == Approx(3.0).margin(1e-14));
}

TEST_CASE("hermitian_eig on sigma_x") {
    const auto eig = linalg::hermitian_eig(pauli_x());
    CHECK(eig.eigenvalues[0] == Approx(-1.0).margin(1e-13));
    CHECK(eig.eigenvalues[1] == Approx(1.0).margin(1e-13));
    const double r = 1.0 / std::numbers::sqrt2;
    const CVector minus{r, -r}, plus{r, r};
    CHECK(std::abs(linalg::vdot(minus, eig.eigenvectors[0])) == Approx(1.0).margin(1e-12));
    CHECK(std::abs(linalg::vdot(plus, eig.eigenvectors[1])) == Approx(1.0).margin(1e-12));
}

TEST_CASE("hermitian_eig on the 8x8 model Hamiltonian") {
    // oracle: spectrum is {-Delta, -omega, +omega, +Delta}, each twice,
    // Delta = sqrt(omega^2 + 4 lambda^2)
    const double omega = 0.3, lambda = 0.4;
    const double delta = std::hypot(omega, 2.0 * lambda);
    CHECK(delta == Approx(0.8544003745317531).margin(1e-15));
    const auto h = fock::build_hamiltonian({omega, lambda});
    const auto ev = linalg::hermitian_eigenvalues(h);
    const double expected[8] = {-delta, -delta, -omega, -omega, omega, omega, delta, delta};
    for (int i = 0; i < 8; ++i) CHECK(ev[i] == Approx(expected[i]).margin(1e-12));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix a(2);
    a(0, 1) = 1.0;  // strictly upper triangular
    try {
        linalg::hermitian_eig(a);
        FAIL("expected NotHermitianError");
    } catch (const NotHermitianError& e) {
        CHECK(e.deviation == Approx(1.0).margin(1e-15));
    }
}

TEST_CASE("eigendecomposition invariants on seeded random Hermitian matrices") {
    std::mt19937_64 rng(12345);
    for (std::size_t n : {2, 3, 5, 8, 13}) {
        for (int rep = 0; rep < 8; ++rep) {
            const auto a = random_hermitian(rng, n);
            const auto eig = linalg::hermitian_eig(a);
            const double scale = linalg::max_abs(a);

            // trace identity
            double sum = 0.0, tr = linalg::trace(a).real();
            for (double w : eig.eigenvalues) sum += w;
            CHECK(std::abs(sum - tr) <= 1e-10 * std::max(1.0, std::abs(tr)));

            // residuals, orthonormality, reconstruction
            ComplexMatrix recon(n);
            for (std::size_t k = 0; k < n; ++k) {
                const auto& v = eig.eigenvectors[k];
                const auto av = linalg::apply(a, v);
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(std::abs(av[i] - eig.eigenvalues[k] * v[i]) <= 1e-10 * scale);
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const double ov = std::abs(linalg::vdot(eig.eigenvectors[j], v));
                    CHECK(std::abs(ov - (j == k ? 1.0 : 0.0)) <= 1e-10);
                }
                recon = recon + eig.eigenvalues[k] * linalg::outer(v, v);
            }
            CHECK(linalg::max_abs(recon - a) <= 1e-9 * scale);

            // ascending order
            for (std::size_t k = 1; k < n; ++k) {
                CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
            }
        }
    }
}

TEST_CASE("hermitian_eig is deterministic for a fixed input") {
    std::mt19937_64 rng(99);
    const auto a = random_hermitian(rng, 6);
    const auto e1 = linalg::hermitian_eig(a);
    const auto e2 = linalg::hermitian_eig(a);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(e1.eigenvalues[k] == e2.eigenvalues[k]);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(e1.eigenvectors[k][i] == e2.eigenvectors[k][i]);
        }
    }
}
