#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcyclic/errors.hpp"
#include "hopfcyclic/hopf_data.hpp"
#include "hopfcyclic/lambda_cat.hpp"
#include "hopfcyclic/matrix.hpp"

namespace hopfcyclic {

enum class Orientation { cyclic, cocyclic };

inline std::string orientation_name(Orientation o) {
    return o == Orientation::cyclic ? "cyclic" : "cocyclic";
}

// Legs of P_n: leg0 = X^{(x)n} (x) M (x) X, leg1 = X^{(x)n+1} (x) M, with the
// cyclic permutation t moving the last factor to the front.
template <class F>
struct SModulePair {
    std::size_t degree;
    std::size_t leg0_dim;
    std::size_t leg1_dim;
    Matrix<F> t;
};

namespace detail {

inline std::size_t int_pow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

template <class F>
Matrix<F> at_slot(const F& K, std::size_t left_dim, const Matrix<F>& op, std::size_t right_dim) {
    return kronecker(Matrix<F>::identity(K, left_dim), kronecker(op, Matrix<F>::identity(K, right_dim)));
}

template <class F>
Matrix<F> matrix_power(const Matrix<F>& m, std::size_t e) {
    auto out = Matrix<F>::identity(m.field(), m.rows());
    for (std::size_t k = 0; k < e; ++k) out = out * m;
    return out;
}

// Permutation sending x_0 (x) ... (x) x_n (x) m to x_1 (x) ... (x) x_n (x) m (x) x_0.
template <class F>
Matrix<F> rotate_first_to_last(const F& K, std::size_t dx, std::size_t dm, std::size_t n) {
    std::vector<std::size_t> dims(n + 1, dx);
    dims.push_back(dm);
    std::vector<std::size_t> src(n + 2);
    for (std::size_t k = 0; k < n; ++k) src[k] = k + 1;
    src[n] = n + 1;
    src[n + 1] = 0;
    return tensor_permutation(K, dims, src);
}

// Permutation sending x_0 (x) ... (x) x_n (x) m to x_n (x) x_0 (x) ... (x) x_{n-1} (x) m.
template <class F>
Matrix<F> rotate_last_to_front(const F& K, std::size_t dx, std::size_t dm, std::size_t n) {
    std::vector<std::size_t> dims(n + 1, dx);
    dims.push_back(dm);
    std::vector<std::size_t> src(n + 2);
    src[0] = n;
    for (std::size_t k = 1; k <= n; ++k) src[k] = k - 1;
    src[n + 1] = n + 1;
    return tensor_permutation(K, dims, src);
}

}  // namespace detail

template <class F>
SModulePair<F> build_P(const SymmetryDatum<F>& X, const CoefficientDatum<F>& M,
                       const Transposition<F>& w, std::size_t n) {
    const F& K = w.w.field();
    std::size_t dx = X.dim, dm = M.dim;
    if (w.w.rows() != dx * dm || w.w.cols() != dx * dm)
        throw DimensionError("transposition shape " + w.w.shape_str() + " does not match carrier dim " +
                             std::to_string(dx) + " and coefficient dim " + std::to_string(dm));
    std::size_t leg = detail::int_pow(dx, n + 1) * dm;
    std::vector<std::size_t> dims(n, dx);
    dims.push_back(dm);
    dims.push_back(dx);
    std::vector<std::size_t> src(n + 2);
    src[0] = n + 1;
    for (std::size_t k = 1; k <= n; ++k) src[k] = k - 1;
    src[n + 1] = n;
    return SModulePair<F>{n, leg, leg, tensor_permutation(K, dims, src)};
}

// Operator family of the colimit module, stored by generator: face[n][i] is the
// matrix assigned to the arrow [n] -> [n+1] at index i (0 <= i <= n+1),
// degen[n][j] the one assigned to [n+1] -> [n] (0 <= j <= n), tau[n] the twist
// at [n]. Matrix directions follow the generators in the cocyclic orientation
// and are reversed in the cyclic one.
template <class F>
struct ParaCyclicModule {
    Orientation orientation = Orientation::cocyclic;
    SymmetryKind kind = SymmetryKind::MC;
    std::size_t truncation = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix<F>>> face;
    std::vector<std::vector<Matrix<F>>> degen;
    std::vector<Matrix<F>> tau;
    std::string provenance;
};

namespace detail {

template <class F>
void transpose_family(ParaCyclicModule<F>& T) {
    for (auto& fs : T.face)
        for (auto& m : fs) m = m.transpose();
    for (auto& ds : T.degen)
        for (auto& m : ds) m = m.transpose();
    for (auto& m : T.tau) m = m.transpose();
}

template <class F>
std::string provenance_tag(SymmetryKind kind, std::size_t dx, std::size_t dm, std::size_t N,
                           Orientation o) {
    return kind_name(kind) + " carrier dim " + std::to_string(dx) + ", coefficient dim " +
           std::to_string(dm) + ", truncation " + std::to_string(N) + ", " + orientation_name(o);
}

}  // namespace detail

template <class F>
ParaCyclicModule<F> build_T_coalgebra(const SymmetryDatum<F>& C, const CoefficientDatum<F>& M,
                                      const Transposition<F>& w, std::size_t N,
                                      Orientation orientation = Orientation::cocyclic) {
    if (!C.comult || !C.counit)
        throw ConfigurationError("coalgebra carrier needs a comultiplication and a counit");
    auto rep = check_w_transpositive(C, w);
    if (!rep.ok()) throw ValidationError("carrier is not w-transpositive:\n" + rep.text());
    const F& K = w.w.field();
    std::size_t dc = C.dim, dm = M.dim;
    if (w.w.rows() != dc * dm)
        throw DimensionError("transposition shape " + w.w.shape_str() + " does not match carrier dim " +
                             std::to_string(dc) + " and coefficient dim " + std::to_string(dm));

    ParaCyclicModule<F> T;
    T.orientation = Orientation::cocyclic;
    T.kind = w.kind;
    T.truncation = N;
    T.provenance = detail::provenance_tag<F>(w.kind, dc, dm, N, orientation);
    for (std::size_t n = 0; n <= N; ++n) T.dims.push_back(detail::int_pow(dc, n + 1) * dm);

    for (std::size_t n = 0; n <= N; ++n) {
        auto to_leg0 = detail::rotate_first_to_last(K, dc, dm, n);
        T.tau.push_back(detail::at_slot(K, detail::int_pow(dc, n), w.w, 1) * to_leg0);
    }
    for (std::size_t n = 0; n + 1 <= N; ++n) {
        std::vector<Matrix<F>> faces, degens;
        for (std::size_t i = 0; i <= n; ++i)
            faces.push_back(detail::at_slot(K, detail::int_pow(dc, i), *C.comult,
                                            detail::int_pow(dc, n - i) * dm));
        faces.push_back(T.tau[n + 1] * faces[0]);
        for (std::size_t j = 0; j <= n; ++j)
            degens.push_back(detail::at_slot(K, detail::int_pow(dc, j + 1), *C.counit,
                                             detail::int_pow(dc, n - j) * dm));
        T.face.push_back(std::move(faces));
        T.degen.push_back(std::move(degens));
    }
    if (orientation == Orientation::cyclic) {
        detail::transpose_family(T);
        T.orientation = Orientation::cyclic;
    }
    return T;
}

template <class F>
ParaCyclicModule<F> build_T_algebra(const SymmetryDatum<F>& A, const CoefficientDatum<F>& M,
                                    const Transposition<F>& w, std::size_t N,
                                    Orientation orientation = Orientation::cyclic) {
    if (!A.mult || !A.unit)
        throw ConfigurationError("algebra carrier needs a multiplication and a unit");
    auto rep = check_w_transpositive(A, w);
    if (!rep.ok()) throw ValidationError("carrier is not w-transpositive:\n" + rep.text());
    const F& K = w.w.field();
    std::size_t da = A.dim, dm = M.dim;
    if (w.w.rows() != da * dm)
        throw DimensionError("transposition shape " + w.w.shape_str() + " does not match carrier dim " +
                             std::to_string(da) + " and coefficient dim " + std::to_string(dm));

    ParaCyclicModule<F> T;
    T.orientation = Orientation::cyclic;
    T.kind = w.kind;
    T.truncation = N;
    T.provenance = detail::provenance_tag<F>(w.kind, da, dm, N, orientation);
    for (std::size_t n = 0; n <= N; ++n) T.dims.push_back(detail::int_pow(da, n + 1) * dm);

    auto twist_last = w.w * tensor_permutation(K, {da, dm}, {1, 0});
    for (std::size_t n = 0; n <= N; ++n) {
        auto to_front = detail::rotate_last_to_front(K, da, dm, n);
        T.tau.push_back(to_front * detail::at_slot(K, detail::int_pow(da, n), twist_last, 1));
    }
    for (std::size_t n = 0; n + 1 <= N; ++n) {
        std::vector<Matrix<F>> faces, degens;
        for (std::size_t i = 0; i <= n; ++i)
            faces.push_back(detail::at_slot(K, detail::int_pow(da, i), *A.mult,
                                            detail::int_pow(da, n - i) * dm));
        faces.push_back(faces[0] * T.tau[n + 1]);
        for (std::size_t j = 0; j <= n; ++j)
            degens.push_back(detail::at_slot(K, detail::int_pow(da, j + 1), *A.unit,
                                             detail::int_pow(da, n - j) * dm));
        T.face.push_back(std::move(faces));
        T.degen.push_back(std::move(degens));
    }
    if (orientation == Orientation::cocyclic) {
        detail::transpose_family(T);
        T.orientation = Orientation::cocyclic;
    }
    return T;
}

template <class F>
ParaCyclicModule<F> opposite_module(const ParaCyclicModule<F>& T) {
    ParaCyclicModule<F> out = T;
    detail::transpose_family(out);
    out.orientation = T.orientation == Orientation::cyclic ? Orientation::cocyclic : Orientation::cyclic;
    out.provenance = T.provenance + ", transposed";
    return out;
}

namespace detail {

template <class F>
Matrix<F> twist_power(const ParaCyclicModule<F>& T, std::size_t n, long e) {
    if (n >= T.tau.size())
        throw ConfigurationError("family carries no twist at degree " + std::to_string(n));
    if (e >= 0) return matrix_power(T.tau[n], static_cast<std::size_t>(e));
    auto inv = inverse(T.tau[n]);
    if (!inv)
        throw ConfigurationError("twist at degree " + std::to_string(n) +
                                 " is not invertible; negative exponents unavailable");
    return matrix_power(*inv, static_cast<std::size_t>(-e));
}

// Twist-free families (simplicial reducts) still need a field for identities.
template <class F>
const F& family_field(const ParaCyclicModule<F>& T) {
    if (!T.tau.empty()) return T.tau.front().field();
    for (const auto& level : T.face)
        if (!level.empty()) return level.front().field();
    for (const auto& level : T.degen)
        if (!level.empty()) return level.front().field();
    throw ConfigurationError("module carries no operators to draw a field from");
}

template <class F>
Matrix<F> letter_matrix(const ParaCyclicModule<F>& T, const Letter& l) {
    std::size_t n = static_cast<std::size_t>(l.degree);
    switch (l.op) {
        case Letter::Op::face:
            if (n + 1 > T.truncation)
                throw TruncationError("face at degree " + std::to_string(n) + " exceeds truncation " +
                                      std::to_string(T.truncation));
            return T.face[n][static_cast<std::size_t>(l.index)];
        case Letter::Op::degen:
            if (n + 1 > T.truncation)
                throw TruncationError("degeneracy at degree " + std::to_string(n) +
                                      " exceeds truncation " + std::to_string(T.truncation));
            return T.degen[n][static_cast<std::size_t>(l.index)];
        default:
            if (n > T.truncation)
                throw TruncationError("twist at degree " + std::to_string(n) + " exceeds truncation " +
                                      std::to_string(T.truncation));
            return twist_power(T, n, l.index);
    }
}

}  // namespace detail

template <class F>
Matrix<F> evaluate(const GeneratorWord& word, const ParaCyclicModule<F>& T) {
    if (word.source < 0 || static_cast<std::size_t>(word.source) > T.truncation ||
        word.target() < 0 || static_cast<std::size_t>(word.target()) > T.truncation)
        throw TruncationError("word endpoints exceed truncation " + std::to_string(T.truncation));
    const F& K = detail::family_field(T);
    std::size_t start = T.orientation == Orientation::cocyclic
                            ? static_cast<std::size_t>(word.source)
                            : static_cast<std::size_t>(word.target());
    auto acc = Matrix<F>::identity(K, T.dims[start]);
    if (T.orientation == Orientation::cocyclic) {
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
            acc = detail::letter_matrix(T, *it) * acc;
    } else {
        for (const auto& l : word.letters) acc = detail::letter_matrix(T, l) * acc;
    }
    return acc;
}

template <class F>
Matrix<F> evaluate(const LambdaMorphism& f, const ParaCyclicModule<F>& T) {
    return evaluate(f.to_word(), T);
}

struct CertificationReport {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }

    std::string text() const {
        if (ok())
            return "certified " + std::to_string(checked) + " relation instances (" +
                   std::to_string(skipped) + " beyond truncation)";
        std::string out = std::to_string(failures.size()) + " of " + std::to_string(checked) +
                          " relation instances failed:";
        for (const auto& f : failures) out += "\n  " + f;
        return out;
    }

    void require_ok(const std::string& what) const {
        if (!ok()) throw CertificationError(what + ": " + text());
    }
};

template <class F>
CertificationReport certify_relations(const ParaCyclicModule<F>& T,
                                      CategoryFlavor flavor = CategoryFlavor::LambdaN) {
    CertificationReport rep;
    for (const auto& [lhs, rhs] : relation_instances(flavor, T.truncation)) {
        std::optional<Matrix<F>> L, R;
        try {
            L = evaluate(lhs, T);
            R = evaluate(rhs, T);
        } catch (const TruncationError&) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (!(*L == *R)) rep.failures.push_back(display_word(lhs) + " != " + display_word(rhs));
    }
    return rep;
}

template <class F>
bool twists_are_cyclic(const ParaCyclicModule<F>& T) {
    for (std::size_t n = 0; n <= T.truncation; ++n) {
        auto id = Matrix<F>::identity(T.tau[n].field(), T.dims[n]);
        if (!(detail::matrix_power(T.tau[n], n + 1) == id)) return false;
    }
    return true;
}

}  // namespace hopfcyclic
