// linalg.hpp — dense complex matrices, vectors, and the basic algebra
// everything downstream is built on. Row-major storage, value semantics.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "majeur/errors.hpp"

namespace majeur::linalg {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{}) {}

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<double>& d) {
        ComplexMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    const CVector& data() const { return data_; }

    bool all_finite() const {
        for (const auto& z : data_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
        return true;
    }

private:
    std::size_t dim_ = 0;
    CVector data_;
};

// ---------------------------- element-wise algebra ---------------------------

inline void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError(std::string(op) + ": dimension mismatch");
    }
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator+");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator-");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

inline ComplexMatrix operator*(Complex z, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = z * a(i, j);
    return out;
}

inline ComplexMatrix operator*(double x, const ComplexMatrix& a) { return Complex(x) * a; }

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

inline ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

inline Complex trace(const ComplexMatrix& a) {
    Complex t{};
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

// Kronecker product; (a ox b)[(i*db+k),(j*db+l)] = a(i,j) b(k,l),
// i.e. the first factor owns the most significant digit of the index.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

// --------------------------------- norms -------------------------------------

inline double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

inline double hermiticity_deviation(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

// -------------------------------- vectors ------------------------------------

inline Complex vdot(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vdot: size mismatch");
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm(const CVector& a) { return std::sqrt(std::abs(vdot(a, a))); }

inline CVector apply(const ComplexMatrix& m, const CVector& v) {
    if (m.dim() != v.size()) throw DimensionMismatchError("apply: size mismatch");
    CVector out(v.size(), Complex{});
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline ComplexMatrix outer(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("outer: size mismatch");
    ComplexMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a[i] * std::conj(b[j]);
    return out;
}

inline CVector basis_vector(std::size_t dim, std::size_t k) {
    CVector v(dim, Complex{});
    v[k] = 1.0;
    return v;
}

}  // namespace majeur::linalg
