#pragma once

// Dense reference homology tables: bar complex, cyclic bicomplex, and
// group-like coinvariant reductions assembled straight from multiplication
// tables and row-reduced with plain Gaussian elimination. No code shared
// with the library's sparse linear algebra.

#include <cstddef>
#include <vector>

#include "oracle_classical.hpp"

namespace oracle {

template <class F>
using Dense = std::vector<std::vector<typename F::Value>>;

template <class F>
Dense<F> dense_zeros(const F& K, std::size_t r, std::size_t c) {
    return Dense<F>(r, std::vector<typename F::Value>(c, K.zero()));
}

template <class F>
Dense<F> dense_identity(const F& K, std::size_t n) {
    auto m = dense_zeros(K, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = K.one();
    return m;
}

template <class F>
Dense<F> dense_mul(const F& K, const Dense<F>& a, const Dense<F>& b) {
    std::size_t r = a.size(), mid = b.size(), c = mid ? b[0].size() : 0;
    auto out = dense_zeros(K, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            if (K.is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < c; ++j)
                out[i][j] = K.add(out[i][j], K.mul(a[i][k], b[k][j]));
        }
    return out;
}

template <class F>
Dense<F> dense_sub(const F& K, const Dense<F>& a, const Dense<F>& b) {
    auto out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = K.sub(out[i][j], b[i][j]);
    return out;
}

template <class F>
Dense<F> dense_add(const F& K, const Dense<F>& a, const Dense<F>& b) {
    auto out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = K.add(out[i][j], b[i][j]);
    return out;
}

template <class F>
Dense<F> dense_neg(const F& K, const Dense<F>& a) {
    auto out = a;
    for (auto& row : out)
        for (auto& v : row) v = K.neg(v);
    return out;
}

template <class F>
Dense<F> dense_kron(const F& K, const Dense<F>& a, const Dense<F>& b) {
    std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
    std::size_t br = b.size(), bc = br ? b[0].size() : 0;
    auto out = dense_zeros(K, ar * br, ac * bc);
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j) {
            if (K.is_zero(a[i][j])) continue;
            for (std::size_t p = 0; p < br; ++p)
                for (std::size_t q = 0; q < bc; ++q)
                    out[i * br + p][j * bc + q] = K.mul(a[i][j], b[p][q]);
        }
    return out;
}

template <class F>
struct DenseRref {
    Dense<F> rows;
    std::vector<std::size_t> pivots;
};

template <class F>
DenseRref<F> dense_rref(const F& K, Dense<F> m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    DenseRref<F> out;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rk;
        while (piv < rows && K.is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rk]);
        auto inv = K.inv(m[rk][c]);
        for (std::size_t cc = c; cc < cols; ++cc) m[rk][cc] = K.mul(m[rk][cc], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rk || K.is_zero(m[r][c])) continue;
            auto f = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = K.sub(m[r][cc], K.mul(f, m[rk][cc]));
        }
        out.pivots.push_back(c);
        ++rk;
    }
    m.resize(rk);
    out.rows = std::move(m);
    return out;
}

template <class F>
std::size_t dense_rank(const F& K, const Dense<F>& m) {
    return dense_rref(K, m).pivots.size();
}

// v minus its projection onto the row space; the result is supported on the
// non-pivot coordinates.
template <class F>
std::vector<typename F::Value> dense_reduce(const F& K, const DenseRref<F>& R,
                                            std::vector<typename F::Value> v) {
    for (std::size_t r = 0; r < R.pivots.size(); ++r) {
        auto f = v[R.pivots[r]];
        if (K.is_zero(f)) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = K.sub(v[c], K.mul(f, R.rows[r][c]));
    }
    return v;
}

// Homology of a chain complex with diff[k] mapping degree k+1 to degree k.
template <class F>
std::vector<std::size_t> dense_homology(const F& K, const std::vector<std::size_t>& dims,
                                        const std::vector<Dense<F>>& diff, std::size_t count) {
    std::vector<std::size_t> rk(count);
    for (std::size_t k = 0; k < count; ++k) rk[k] = dense_rank(K, diff[k]);
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < count; ++n) {
        std::size_t cycles = n == 0 ? dims[0] : dims[n] - rk[n - 1];
        out.push_back(cycles - rk[n]);
    }
    return out;
}

inline std::size_t dense_pow(std::size_t d, std::size_t e) {
    std::size_t out = 1;
    while (e--) out *= d;
    return out;
}

// Alternating face sum on A^{(x) n+1}: slots i, i+1 multiply for i < n, the
// last wraps onto the first for i = n. with_top false drops the wrapping term.
template <class F>
Dense<F> dense_bar_boundary(const F& K, const Table<F>& c, std::size_t n, bool with_top) {
    std::size_t d = c.size();
    std::size_t src = dense_pow(d, n + 1), dst = dense_pow(d, n);
    auto out = dense_zeros(K, dst, src);
    for (std::size_t col = 0; col < src; ++col) {
        auto t = unrank(col, d, n + 1);
        std::size_t top = with_top ? n : n - 1;
        for (std::size_t i = 0; i <= top; ++i) {
            std::size_t a = i < n ? t[i] : t[n];
            std::size_t b = i < n ? t[i + 1] : t[0];
            for (std::size_t k = 0; k < d; ++k) {
                if (K.is_zero(c[a][b][k])) continue;
                std::vector<std::size_t> img;
                if (i < n) {
                    for (std::size_t s = 0; s < i; ++s) img.push_back(t[s]);
                    img.push_back(k);
                    for (std::size_t s = i + 2; s <= n; ++s) img.push_back(t[s]);
                } else {
                    img.push_back(k);
                    for (std::size_t s = 1; s < n; ++s) img.push_back(t[s]);
                }
                auto v = i % 2 == 0 ? c[a][b][k] : K.neg(c[a][b][k]);
                std::size_t row = rank(img, d);
                out[row][col] = K.add(out[row][col], v);
            }
        }
    }
    return out;
}

// (-1)^q times the rotation pulling the last tuple slot to the front.
template <class F>
Dense<F> dense_signed_rotation(const F& K, std::size_t d, std::size_t q) {
    std::size_t dim = dense_pow(d, q + 1);
    auto out = dense_zeros(K, dim, dim);
    auto v = q % 2 == 0 ? K.one() : K.neg(K.one());
    for (std::size_t col = 0; col < dim; ++col) {
        auto t = unrank(col, d, q + 1);
        std::vector<std::size_t> img{t[q]};
        for (std::size_t s = 0; s < q; ++s) img.push_back(t[s]);
        out[rank(img, d)][col] = v;
    }
    return out;
}

template <class F>
std::vector<std::size_t> dense_hh(const F& K, const hopfcyclic::Matrix<F>& mult, std::size_t N) {
    auto c = mult_table(mult);
    std::size_t d = c.size();
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= N; ++n) dims.push_back(dense_pow(d, n + 1));
    std::vector<Dense<F>> diff;
    for (std::size_t n = 1; n <= N; ++n) diff.push_back(dense_bar_boundary(K, c, n, true));
    return dense_homology(K, dims, diff, N);
}

template <class F>
std::vector<Dense<F>> dense_bar_ranks_input(const F& K, const hopfcyclic::Matrix<F>& mult,
                                            std::size_t N) {
    auto c = mult_table(mult);
    std::vector<Dense<F>> diff;
    for (std::size_t n = 1; n <= N; ++n) diff.push_back(dense_bar_boundary(K, c, n, true));
    return diff;
}

// Total complex of the first-quadrant bicomplex with columns b, -b' and rows
// 1 - lambda, norm.
template <class F>
std::vector<std::size_t> dense_hc(const F& K, const hopfcyclic::Matrix<F>& mult, std::size_t N) {
    auto c = mult_table(mult);
    std::size_t d = c.size();
    std::vector<std::size_t> qdim, tdim;
    for (std::size_t q = 0; q <= N; ++q) qdim.push_back(dense_pow(d, q + 1));
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t s = 0;
        for (std::size_t p = 0; p <= n; ++p) s += qdim[n - p];
        tdim.push_back(s);
    }
    std::vector<Dense<F>> diff;
    for (std::size_t n = 1; n <= N; ++n) {
        auto D = dense_zeros(K, tdim[n - 1], tdim[n]);
        std::size_t col = 0;
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (q >= 1) {
                std::size_t row = 0;
                for (std::size_t p2 = 0; p2 < p; ++p2) row += qdim[n - 1 - p2];
                auto vert = dense_bar_boundary(K, c, q, p % 2 == 0);
                if (p % 2 == 1) vert = dense_neg(K, vert);
                for (std::size_t r = 0; r < vert.size(); ++r)
                    for (std::size_t cc = 0; cc < vert[r].size(); ++cc)
                        D[row + r][col + cc] = vert[r][cc];
            }
            if (p >= 1) {
                std::size_t row = 0;
                for (std::size_t p2 = 0; p2 + 1 < p; ++p2) row += qdim[n - 1 - p2];
                auto lam = dense_signed_rotation(K, d, q);
                Dense<F> horiz;
                if (p % 2 == 1) {
                    horiz = dense_sub(K, dense_identity(K, qdim[q]), lam);
                } else {
                    horiz = dense_identity(K, qdim[q]);
                    auto acc = dense_identity(K, qdim[q]);
                    for (std::size_t i = 1; i <= q; ++i) {
                        acc = dense_mul(K, lam, acc);
                        horiz = dense_add(K, horiz, acc);
                    }
                }
                for (std::size_t r = 0; r < horiz.size(); ++r)
                    for (std::size_t cc = 0; cc < horiz[r].size(); ++cc)
                        D[row + r][col + cc] = horiz[r][cc];
            }
            col += qdim[q];
        }
        diff.push_back(std::move(D));
    }
    return dense_homology(K, tdim, diff, N >= 1 ? N - 1 : 0);
}

// Coinvariants of a slotwise (group-like generator) action on the bar
// complex, reduced in complement coordinates, then its homology.
template <class F>
std::vector<std::size_t> dense_hopf_hh(const F& K, const hopfcyclic::Matrix<F>& mult,
                                       const std::vector<Dense<F>>& gens, std::size_t N) {
    auto c = mult_table(mult);
    std::size_t d = c.size();
    std::vector<DenseRref<F>> red(N + 1);
    std::vector<std::vector<std::size_t>> free_cols(N + 1);
    std::vector<std::size_t> dims(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t dim = dense_pow(d, n + 1);
        Dense<F> rel;
        for (const auto& g : gens) {
            auto diag = g;
            for (std::size_t s = 0; s < n; ++s) diag = dense_kron(K, diag, g);
            auto gen = dense_sub(K, diag, dense_identity(K, dim));
            for (std::size_t colv = 0; colv < dim; ++colv) {
                std::vector<typename F::Value> row(dim);
                for (std::size_t r = 0; r < dim; ++r) row[r] = gen[r][colv];
                rel.push_back(std::move(row));
            }
        }
        red[n] = dense_rref(K, std::move(rel));
        std::size_t next = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            if (next < red[n].pivots.size() && red[n].pivots[next] == j) {
                ++next;
                continue;
            }
            free_cols[n].push_back(j);
        }
        dims[n] = free_cols[n].size();
    }
    std::vector<Dense<F>> diff;
    for (std::size_t n = 1; n <= N; ++n) {
        auto bar = dense_bar_boundary(K, c, n, true);
        auto D = dense_zeros(K, dims[n - 1], dims[n]);
        for (std::size_t j = 0; j < dims[n]; ++j) {
            std::size_t src_col = free_cols[n][j];
            std::vector<typename F::Value> v(bar.size());
            for (std::size_t r = 0; r < bar.size(); ++r) v[r] = bar[r][src_col];
            v = dense_reduce(K, red[n - 1], std::move(v));
            for (std::size_t i = 0; i < dims[n - 1]; ++i) D[i][j] = v[free_cols[n - 1][i]];
        }
        diff.push_back(std::move(D));
    }
    return dense_homology(K, dims, diff, N);
}

}  // namespace oracle
