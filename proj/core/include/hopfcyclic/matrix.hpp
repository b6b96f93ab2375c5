#ifndef HOPFCYCLIC_MATRIX_HPP
#define HOPFCYCLIC_MATRIX_HPP

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace hopfcyclic {

// Column-major sparse matrix; stored entries are always nonzero.
template <class F>
class Matrix {
public:
    using Value = typename F::Value;
    using Column = std::map<std::size_t, Value>;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), columns_(cols) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace(i, field.one());
        return m;
    }

    static Matrix from_rows(const F& field, const std::vector<std::vector<long>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionError("ragged row list");
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.from_long(rows[i][j]));
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& col : columns_) n += col.size();
        return n;
    }

    const Column& column(std::size_t c) const {
        check_col(c);
        return columns_[c];
    }

    Value get(std::size_t r, std::size_t c) const {
        check_row(r);
        check_col(c);
        auto it = columns_[c].find(r);
        return it == columns_[c].end() ? field_.zero() : it->second;
    }

    void set(std::size_t r, std::size_t c, const Value& v) {
        check_row(r);
        check_col(c);
        if (field_.is_zero(v)) columns_[c].erase(r);
        else columns_[c][r] = v;
    }

    void add_to(std::size_t r, std::size_t c, const Value& v) {
        check_row(r);
        check_col(c);
        auto it = columns_[c].find(r);
        if (it == columns_[c].end()) {
            if (!field_.is_zero(v)) columns_[c].emplace(r, v);
            return;
        }
        Value s = field_.add(it->second, v);
        if (field_.is_zero(s)) columns_[c].erase(it);
        else it->second = std::move(s);
    }

    bool is_zero() const {
        for (const auto& col : columns_)
            if (!col.empty()) return false;
        return true;
    }

    bool operator==(const Matrix& other) const {
        if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = columns_[c];
            const auto& b = other.columns_[c];
            if (a.size() != b.size()) return false;
            auto ia = a.begin();
            auto ib = b.begin();
            for (; ia != a.end(); ++ia, ++ib)
                if (ia->first != ib->first || !field_.eq(ia->second, ib->second)) return false;
        }
        return true;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix operator+(const Matrix& other) const {
        check_same_shape(other, "+");
        Matrix out = *this;
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : other.columns_[c]) out.add_to(r, c, v);
        return out;
    }

    Matrix operator-(const Matrix& other) const {
        check_same_shape(other, "-");
        Matrix out = *this;
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : other.columns_[c]) out.add_to(r, c, field_.neg(v));
        return out;
    }

    Matrix operator-() const {
        Matrix out(field_, rows_, cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : columns_[c]) out.columns_[c].emplace(r, field_.neg(v));
        return out;
    }

    Matrix scale(const Value& s) const {
        Matrix out(field_, rows_, cols_);
        if (field_.is_zero(s)) return out;
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : columns_[c]) {
                Value w = field_.mul(s, v);
                if (!field_.is_zero(w)) out.columns_[c].emplace(r, std::move(w));
            }
        return out;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_)
            throw CompositionError("matrix product shape mismatch: " + shape_str() + " * " + other.shape_str());
        Matrix out(field_, rows_, other.cols_);
        for (std::size_t j = 0; j < other.cols_; ++j) {
            Column& dst = out.columns_[j];
            for (const auto& [i, bv] : other.columns_[j]) {
                for (const auto& [r, av] : columns_[i]) {
                    Value prod = field_.mul(av, bv);
                    auto it = dst.find(r);
                    if (it == dst.end()) {
                        if (!field_.is_zero(prod)) dst.emplace(r, std::move(prod));
                    } else {
                        Value s = field_.add(it->second, prod);
                        if (field_.is_zero(s)) dst.erase(it);
                        else it->second = std::move(s);
                    }
                }
            }
        }
        return out;
    }

    Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : columns_[c]) out.columns_[r].emplace(c, v);
        return out;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_row(std::size_t r) const {
        if (r >= rows_) throw RangeError("row index " + std::to_string(r) + " out of range in " + shape_str());
    }
    void check_col(std::size_t c) const {
        if (c >= cols_) throw RangeError("col index " + std::to_string(c) + " out of range in " + shape_str());
    }
    void check_same_shape(const Matrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw DimensionError(std::string("shape mismatch in ") + op + ": " + shape_str() + " vs " + other.shape_str());
    }

    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Column> columns_;
};

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch: " + a.shape_str() + " vs " + b.shape_str());
    Matrix<F> out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (const auto& [r, v] : a.column(c)) out.set(r, c, v);
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (const auto& [r, v] : b.column(c)) out.set(r, a.cols() + c, v);
    return out;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack col mismatch: " + a.shape_str() + " vs " + b.shape_str());
    Matrix<F> out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (const auto& [r, v] : a.column(c)) out.set(r, c, v);
        for (const auto& [r, v] : b.column(c)) out.set(a.rows() + r, c, v);
    }
    return out;
}

template <class F>
Matrix<F> kronecker(const Matrix<F>& f, const Matrix<F>& g) {
    Matrix<F> out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
    const F& K = f.field();
    for (std::size_t cf = 0; cf < f.cols(); ++cf)
        for (const auto& [rf, vf] : f.column(cf))
            for (std::size_t cg = 0; cg < g.cols(); ++cg)
                for (const auto& [rg, vg] : g.column(cg))
                    out.set(rf * g.rows() + rg, cf * g.cols() + cg, K.mul(vf, vg));
    return out;
}

// Permutes tensor factors: output slot s carries input factor src_of_dst[s].
// Basis order is lexicographic with the leftmost factor most significant.
template <class F>
Matrix<F> tensor_permutation(const F& field, const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& src_of_dst) {
    const std::size_t k = dims.size();
    if (src_of_dst.size() != k) throw DimensionError("tensor_permutation arity mismatch");
    std::vector<bool> seen(k, false);
    for (std::size_t s : src_of_dst) {
        if (s >= k || seen[s]) throw RangeError("tensor_permutation: not a permutation");
        seen[s] = true;
    }
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    Matrix<F> out(field, total, total);
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t col = 0; col < total; ++col) {
        std::size_t rem = col;
        for (std::size_t f = k; f-- > 0;) {
            idx[f] = rem % dims[f];
            rem /= dims[f];
        }
        std::size_t row = 0;
        for (std::size_t s = 0; s < k; ++s) row = row * dims[src_of_dst[s]] + idx[src_of_dst[s]];
        out.set(row, col, field.one());
    }
    return out;
}

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivot_cols;
};

namespace detail {

// Sparse-row elimination; pivot choice cannot change the (unique) reduced form.
template <class F>
RrefResult<F> rref_sparse(const Matrix<F>& m) {
    const F& K = m.field();
    using Value = typename F::Value;
    std::vector<std::map<std::size_t, Value>> rows(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) rows[r].emplace(c, v);

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t best = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r) {
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            if (best == m.rows() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == m.rows()) continue;
        std::swap(rows[rank], rows[best]);
        Value pv = rows[rank].at(c);
        if (!K.eq(pv, K.one())) {
            Value pinv = K.inv(pv);
            for (auto& [cc, v] : rows[rank]) v = K.mul(pinv, v);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            Value factor = it->second;
            for (const auto& [cc, pvv] : rows[rank]) {
                Value delta = K.mul(factor, pvv);
                auto jt = rows[r].find(cc);
                if (jt == rows[r].end()) {
                    rows[r].emplace(cc, K.neg(delta));
                } else {
                    Value s = K.sub(jt->second, delta);
                    if (K.is_zero(s)) rows[r].erase(jt);
                    else jt->second = std::move(s);
                }
            }
        }
        pivots.push_back(c);
        ++rank;
    }

    Matrix<F> out(K, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : rows[r]) out.set(r, c, v);
    return {std::move(out), std::move(pivots)};
}

template <class F>
RrefResult<F> rref_dense(const Matrix<F>& m) {
    const F& K = m.field();
    using Value = typename F::Value;
    std::vector<std::vector<Value>> rows(m.rows(), std::vector<Value>(m.cols(), K.zero()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) rows[r][c] = v;

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t best = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r)
            if (!K.is_zero(rows[r][c])) { best = r; break; }
        if (best == m.rows()) continue;
        std::swap(rows[rank], rows[best]);
        Value pinv = K.inv(rows[rank][c]);
        for (std::size_t cc = c; cc < m.cols(); ++cc) rows[rank][cc] = K.mul(pinv, rows[rank][cc]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || K.is_zero(rows[r][c])) continue;
            Value factor = rows[r][c];
            for (std::size_t cc = c; cc < m.cols(); ++cc)
                rows[r][cc] = K.sub(rows[r][cc], K.mul(factor, rows[rank][cc]));
        }
        pivots.push_back(c);
        ++rank;
    }

    Matrix<F> out(K, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, rows[r][c]);
    return {std::move(out), std::move(pivots)};
}

} // namespace detail

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
    if (m.rows() * m.cols() > 0 && m.nnz() * 2 > m.rows() * m.cols()) return detail::rref_dense(m);
    return detail::rref_sparse(m);
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).pivot_cols.size();
}

// Kernel basis columns, one per free column, in ascending free-column order.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& f) {
    const F& K = f.field();
    RrefResult<F> rr = rref(f);
    std::vector<bool> is_pivot(f.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < f.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix<F> out(K, f.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        out.set(fc, j, K.one());
        for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr) {
            auto v = rr.reduced.get(pr, fc);
            if (!K.is_zero(v)) out.set(rr.pivot_cols[pr], j, K.neg(v));
        }
    }
    return out;
}

// Two-sided inverse of a square matrix; nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square " + m.shape_str());
    RrefResult<F> rr = rref(hstack(m, Matrix<F>::identity(m.field(), m.rows())));
    // pivots of [m | I] must stay inside the left block, else m is singular
    if (rr.pivot_cols.size() != m.rows() || (!rr.pivot_cols.empty() && rr.pivot_cols.back() >= m.cols()))
        return std::nullopt;
    Matrix<F> out(m.field(), m.rows(), m.rows());
    for (std::size_t c = 0; c < m.rows(); ++c)
        for (const auto& [r, v] : rr.reduced.column(m.cols() + c)) out.set(r, c, v);
    return out;
}

// Any solution X of a X = b with free variables set to zero; nullopt when inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows())
        throw DimensionError("solve row mismatch: " + a.shape_str() + " vs " + b.shape_str());
    RrefResult<F> rr = rref(hstack(a, b));
    for (std::size_t c : rr.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    Matrix<F> x(a.field(), a.cols(), b.cols());
    for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto v = rr.reduced.get(pr, a.cols() + j);
            if (!a.field().is_zero(v)) x.set(rr.pivot_cols[pr], j, v);
        }
    return x;
}

} // namespace hopfcyclic

#endif
