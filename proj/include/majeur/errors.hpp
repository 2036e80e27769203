// errors.hpp — exception types shared by all majeur modules

#pragma once

#include <stdexcept>
#include <string>

namespace majeur {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input matrix fails the Hermiticity tolerance.
struct NotHermitianError : Error {
    double deviation;
    explicit NotHermitianError(double dev)
        : Error("matrix is not Hermitian (max |a_ij - conj(a_ji)| = " +
                std::to_string(dev) + ")"),
          deviation(dev) {}
};

// Jacobi sweep budget exhausted before reaching the off-diagonal threshold.
struct NoConvergenceError : Error {
    int sweeps;
    explicit NoConvergenceError(int n)
        : Error("eigensolver did not converge within " + std::to_string(n) + " sweeps"),
          sweeps(n) {}
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct UnsupportedConfigurationError : Error {
    using Error::Error;
};

// Delta = sqrt(omega^2 + 4 lambda^2) vanishes; analytic branch undefined.
struct DegenerateDeltaError : Error {
    using Error::Error;
};

// Numeric ground cluster has no vector overlapping the analytic ground state;
// indicates a basis/convention bug, not a physics condition.
struct SectorMismatchError : Error {
    using Error::Error;
};

struct UnknownLabelError : Error {
    using Error::Error;
};

struct BadPermutationError : Error {
    using Error::Error;
};

struct InvalidStateError : Error {
    using Error::Error;
};

struct ZeroProbabilityOutcomeError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace majeur
