#ifndef HOPFCYCLIC_SUBSPACE_HPP
#define HOPFCYCLIC_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace hopfcyclic {

// Subspace of k^ambient_dim; basis columns are reduced to a unique canonical
// form on construction, so equal subspaces compare equal as matrices.
template <class F>
struct Subspace {
    std::size_t ambient_dim;
    Matrix<F> basis;

    Subspace(std::size_t ambient, const Matrix<F>& spanning)
        : ambient_dim(ambient), basis(canonicalize(ambient, spanning)) {}

    static Subspace full(const F& field, std::size_t n) {
        return Subspace(n, Matrix<F>::identity(field, n));
    }
    static Subspace zero_space(const F& field, std::size_t n) {
        return Subspace(n, Matrix<F>(field, n, 0));
    }

    std::size_t dim() const { return basis.cols(); }

    bool operator==(const Subspace& other) const {
        return ambient_dim == other.ambient_dim && basis == other.basis;
    }
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    bool contains(const Matrix<F>& vectors) const {
        if (vectors.rows() != ambient_dim)
            throw DimensionError("contains: ambient mismatch " + std::to_string(vectors.rows()) +
                                 " vs " + std::to_string(ambient_dim));
        return solve(basis, vectors).has_value();
    }

    bool contains(const Subspace& other) const { return contains(other.basis); }

private:
    static Matrix<F> canonicalize(std::size_t ambient, const Matrix<F>& spanning) {
        if (spanning.rows() != ambient)
            throw DimensionError("subspace spanning set has " + std::to_string(spanning.rows()) +
                                 " rows, ambient is " + std::to_string(ambient));
        RrefResult<F> rr = rref(spanning.transpose());
        Matrix<F> rows_as_cols = rr.reduced.transpose();
        Matrix<F> out(spanning.field(), ambient, rr.pivot_cols.size());
        for (std::size_t j = 0; j < rr.pivot_cols.size(); ++j)
            for (const auto& [c, v] : rows_as_cols.column(j)) out.set(c, j, v);
        return out;
    }
};

template <class F>
Subspace<F> image(const Matrix<F>& f) {
    return Subspace<F>(f.rows(), f);
}

template <class F>
Subspace<F> kernel(const Matrix<F>& f) {
    return Subspace<F>(f.cols(), kernel_basis(f));
}

template <class F>
Subspace<F> equalizer(const Matrix<F>& f, const Matrix<F>& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw DimensionError("equalizer shape mismatch: " + f.shape_str() + " vs " + g.shape_str());
    return kernel(f - g);
}

template <class F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient_dim != v.ambient_dim)
        throw DimensionError("intersect ambient mismatch: " + std::to_string(u.ambient_dim) +
                             " vs " + std::to_string(v.ambient_dim));
    // Solutions of  u.basis x = v.basis y  are the kernel of [u.basis | -v.basis].
    Matrix<F> joint = hstack(u.basis, -v.basis);
    Matrix<F> ker = kernel_basis(joint);
    Matrix<F> xpart(u.basis.field(), u.dim(), ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
        for (const auto& [r, val] : ker.column(j))
            if (r < u.dim()) xpart.set(r, j, val);
    return Subspace<F>(u.ambient_dim, u.basis * xpart);
}

template <class F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient_dim != v.ambient_dim)
        throw DimensionError("sum ambient mismatch");
    return Subspace<F>(u.ambient_dim, hstack(u.basis, v.basis));
}

// Rows spanning the annihilator {u : u^T basis = 0}.
template <class F>
Matrix<F> annihilator_rows(const Subspace<F>& v) {
    return kernel_basis(v.basis.transpose()).transpose();
}

template <class F>
Subspace<F> preimage(const Matrix<F>& f, const Subspace<F>& v) {
    if (f.rows() != v.ambient_dim)
        throw DimensionError("preimage: map lands in dim " + std::to_string(f.rows()) +
                             ", subspace ambient is " + std::to_string(v.ambient_dim));
    return kernel(annihilator_rows(v) * f);
}

// Largest V inside seed with t(V) <= V for all t; dims strictly decrease, so
// the iteration reaches its fixpoint in at most dim(seed) rounds.
template <class F>
Subspace<F> largest_invariant_subspace(const Subspace<F>& seed, const std::vector<Matrix<F>>& ops) {
    for (const auto& t : ops)
        if (t.rows() != seed.ambient_dim || t.cols() != seed.ambient_dim)
            throw DimensionError("largest_invariant_subspace: op " + t.shape_str() +
                                 " is not an endomorphism of dim " + std::to_string(seed.ambient_dim));
    Subspace<F> v = seed;
    for (;;) {
        Subspace<F> w = v;
        for (const auto& t : ops) w = intersect(w, preimage(t, v));
        if (w == v) return v;
        v = w;
    }
}

} // namespace hopfcyclic

#endif
