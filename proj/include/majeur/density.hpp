// density.hpp — density matrices over labeled tensor factors, partial trace,
// and subsystem permutation.  Labels follow Kronecker order: labels[0] owns
// the most significant digit of the basis index.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "majeur/eig.hpp"
#include "majeur/errors.hpp"
#include "majeur/linalg.hpp"

namespace majeur::qi {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::CVector;

struct DensityMatrix {
    ComplexMatrix matrix;
    std::vector<std::size_t> dims;
    std::vector<std::string> labels;

    std::size_t subsystem_count() const { return dims.size(); }

    std::size_t label_position(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return i;
        throw UnknownLabelError("unknown subsystem label '" + label + "'");
    }

    std::size_t subsystem_dim(const std::string& label) const {
        return dims[label_position(label)];
    }
};

namespace detail {

inline std::vector<std::size_t> strides(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
    return s;
}

inline void check_shape(const DensityMatrix& rho) {
    if (rho.dims.empty() || rho.dims.size() != rho.labels.size()) {
        throw InvalidStateError("density matrix: dims/labels mismatch");
    }
    const std::size_t prod = std::accumulate(rho.dims.begin(), rho.dims.end(),
                                             std::size_t{1}, std::multiplies<>());
    if (prod != rho.matrix.dim()) {
        throw InvalidStateError("density matrix: product of dims does not match matrix dim");
    }
    for (std::size_t i = 0; i < rho.labels.size(); ++i)
        for (std::size_t j = i + 1; j < rho.labels.size(); ++j)
            if (rho.labels[i] == rho.labels[j]) {
                throw InvalidStateError("density matrix: duplicate label '" + rho.labels[i] + "'");
            }
}

}  // namespace detail

inline DensityMatrix make_density(ComplexMatrix m, std::vector<std::size_t> dims,
                                  std::vector<std::string> labels) {
    DensityMatrix rho{std::move(m), std::move(dims), std::move(labels)};
    detail::check_shape(rho);
    return rho;
}

inline DensityMatrix pure_state(const CVector& psi, std::vector<std::size_t> dims,
                                std::vector<std::string> labels) {
    return make_density(linalg::outer(psi, psi), std::move(dims), std::move(labels));
}

// Full invariant check: Hermitian to 1e-10, unit trace to 1e-10, smallest
// eigenvalue >= -1e-10.  Throws InvalidState.
inline void validate_density(const DensityMatrix& rho) {
    detail::check_shape(rho);
    if (!rho.matrix.all_finite()) throw InvalidStateError("density matrix: non-finite entries");
    const double hd = linalg::hermiticity_deviation(rho.matrix);
    if (hd > 1e-10) throw InvalidStateError("density matrix: not Hermitian");
    const Complex tr = linalg::trace(rho.matrix);
    if (std::abs(tr - Complex(1.0)) > 1e-10) {
        throw InvalidStateError("density matrix: trace deviates from 1");
    }
    const auto w = linalg::hermitian_eigenvalues(rho.matrix);
    if (w.front() < -1e-10) throw InvalidStateError("density matrix: negative eigenvalue");
}

// Traces out every subsystem not in `keep`; kept labels stay in their
// original order.  Trace is preserved exactly (summation only).
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<std::string>& keep) {
    detail::check_shape(rho);
    if (keep.empty()) throw UnknownLabelError("partial_trace: keep set is empty");

    std::vector<bool> kept(rho.dims.size(), false);
    for (const auto& label : keep) {
        const std::size_t pos = rho.label_position(label);
        if (kept[pos]) throw UnknownLabelError("partial_trace: duplicate label '" + label + "'");
        kept[pos] = true;
    }

    std::vector<std::size_t> keep_pos, tr_pos;
    for (std::size_t i = 0; i < rho.dims.size(); ++i) (kept[i] ? keep_pos : tr_pos).push_back(i);

    std::vector<std::size_t> out_dims, tr_dims;
    for (std::size_t i : keep_pos) out_dims.push_back(rho.dims[i]);
    for (std::size_t i : tr_pos) tr_dims.push_back(rho.dims[i]);
    const std::size_t out_dim = std::accumulate(out_dims.begin(), out_dims.end(),
                                                std::size_t{1}, std::multiplies<>());
    const std::size_t tr_count = std::accumulate(tr_dims.begin(), tr_dims.end(),
                                                 std::size_t{1}, std::multiplies<>());
    const auto in_strides = detail::strides(rho.dims);

    auto expand = [](std::size_t flat, const std::vector<std::size_t>& dims) {
        std::vector<std::size_t> idx(dims.size());
        for (std::size_t i = dims.size(); i-- > 0;) {
            idx[i] = flat % dims[i];
            flat /= dims[i];
        }
        return idx;
    };

    ComplexMatrix out(out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        const auto ridx = expand(r, out_dims);
        for (std::size_t c = 0; c < out_dim; ++c) {
            const auto cidx = expand(c, out_dims);
            Complex sum{};
            for (std::size_t t = 0; t < tr_count; ++t) {
                const auto tidx = expand(t, tr_dims);
                std::size_t in_r = 0, in_c = 0;
                for (std::size_t k = 0; k < keep_pos.size(); ++k) {
                    in_r += ridx[k] * in_strides[keep_pos[k]];
                    in_c += cidx[k] * in_strides[keep_pos[k]];
                }
                for (std::size_t k = 0; k < tr_pos.size(); ++k) {
                    const std::size_t off = tidx[k] * in_strides[tr_pos[k]];
                    in_r += off;
                    in_c += off;
                }
                sum += rho.matrix(in_r, in_c);
            }
            out(r, c) = sum;
        }
    }

    std::vector<std::string> out_labels;
    for (std::size_t i : keep_pos) out_labels.push_back(rho.labels[i]);
    return DensityMatrix{std::move(out), std::move(out_dims), std::move(out_labels)};
}

// Relabels the tensor factors so the output carries `new_order`; applying the
// inverse permutation afterwards restores the input bit for bit.
inline DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                        const std::vector<std::string>& new_order) {
    detail::check_shape(rho);
    if (new_order.size() != rho.labels.size()) {
        throw BadPermutationError("permute_subsystems: wrong number of labels");
    }
    std::vector<std::size_t> src(new_order.size());  // src[k] = old position of new factor k
    std::vector<bool> used(rho.labels.size(), false);
    for (std::size_t k = 0; k < new_order.size(); ++k) {
        std::size_t pos;
        try {
            pos = rho.label_position(new_order[k]);
        } catch (const UnknownLabelError&) {
            throw BadPermutationError("permute_subsystems: label '" + new_order[k] +
                                      "' not present");
        }
        if (used[pos]) {
            throw BadPermutationError("permute_subsystems: duplicate label '" + new_order[k] +
                                      "'");
        }
        used[pos] = true;
        src[k] = pos;
    }

    std::vector<std::size_t> out_dims(new_order.size());
    for (std::size_t k = 0; k < new_order.size(); ++k) out_dims[k] = rho.dims[src[k]];
    const auto in_strides = detail::strides(rho.dims);
    const auto out_strides = detail::strides(out_dims);
    const std::size_t dim = rho.matrix.dim();

    // map: output flat index -> input flat index
    std::vector<std::size_t> to_in(dim, 0);
    for (std::size_t o = 0; o < dim; ++o) {
        std::size_t rem = o, in = 0;
        for (std::size_t k = 0; k < out_dims.size(); ++k) {
            const std::size_t digit = rem / out_strides[k];
            rem %= out_strides[k];
            in += digit * in_strides[src[k]];
        }
        to_in[o] = in;
    }

    ComplexMatrix out(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) out(r, c) = rho.matrix(to_in[r], to_in[c]);
    return DensityMatrix{std::move(out), std::move(out_dims), std::vector<std::string>(new_order)};
}

}  // namespace majeur::qi
