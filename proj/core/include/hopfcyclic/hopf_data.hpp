#ifndef HOPFCYCLIC_HOPF_DATA_HPP
#define HOPFCYCLIC_HOPF_DATA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "subspace.hpp"

namespace hopfcyclic {

enum class SymmetryKind { MC, CA, MA, CC };

inline std::string kind_name(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::MC: return "MC";
        case SymmetryKind::CA: return "CA";
        case SymmetryKind::MA: return "MA";
        case SymmetryKind::CC: return "CC";
    }
    return "?";
}

inline bool algebra_kind(SymmetryKind k) { return k == SymmetryKind::MA || k == SymmetryKind::CA; }
inline bool module_kind(SymmetryKind k) { return k == SymmetryKind::MC || k == SymmetryKind::MA; }

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    std::string text() const {
        if (ok()) return "all axioms hold";
        std::string out;
        for (const auto& f : failures) {
            out += f;
            out += '\n';
        }
        return out;
    }
    void require_ok(const char* what) const {
        if (!ok()) throw ValidationError(std::string(what) + ":\n" + text());
    }
};

namespace detail {

inline std::string tuple_str(std::size_t col, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> idx(dims.size(), 0);
    std::size_t rem = col;
    for (std::size_t f = dims.size(); f-- > 0;) {
        idx[f] = rem % dims[f];
        rem /= dims[f];
    }
    std::string out = "(";
    for (std::size_t f = 0; f < idx.size(); ++f) {
        if (f) out += ",";
        out += std::to_string(idx[f]);
    }
    return out + ")";
}

template <class F>
std::string column_str(const Matrix<F>& m, std::size_t c) {
    std::string out = "{";
    bool first = true;
    for (const auto& [r, v] : m.column(c)) {
        if (!first) out += ", ";
        out += std::to_string(r) + ": " + m.field().show(v);
        first = false;
    }
    return out + "}";
}

// Appends a failure line with the first differing basis column as witness.
template <class F>
void check_identity(ValidationReport& rep, const std::string& name, const Matrix<F>& lhs,
                    const Matrix<F>& rhs, const std::vector<std::size_t>& src_dims) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw DimensionError(name + ": comparing " + lhs.shape_str() + " with " + rhs.shape_str());
    if (lhs == rhs) return;
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        bool differ = false;
        const auto& a = lhs.column(c);
        const auto& b = rhs.column(c);
        if (a.size() != b.size()) differ = true;
        else {
            auto ia = a.begin();
            auto ib = b.begin();
            for (; ia != a.end(); ++ia, ++ib)
                if (ia->first != ib->first || !lhs.field().eq(ia->second, ib->second)) { differ = true; break; }
        }
        if (differ) {
            rep.failures.push_back(name + " fails at basis " + tuple_str(c, src_dims) + ": lhs " +
                                   column_str(lhs, c) + " vs rhs " + column_str(rhs, c));
            return;
        }
    }
}

template <class F>
void check_shape(const Matrix<F>& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols)
        throw FormatError(what + " has shape " + m.shape_str() + ", expected " + std::to_string(rows) +
                          "x" + std::to_string(cols));
}

template <class F>
Matrix<F> swap_matrix(const F& field, std::size_t a, std::size_t b) {
    return tensor_permutation(field, {a, b}, {1, 0});
}

} // namespace detail

template <class F>
struct BialgebraSpec {
    F field;
    std::size_t dim;
    Matrix<F> mult;    // B (x) B -> B
    Matrix<F> unit;    // k -> B
    Matrix<F> comult;  // B -> B (x) B
    Matrix<F> counit;  // B -> k
    std::optional<Matrix<F>> antipode;
};

template <class F>
struct CoefficientDatum {
    std::size_t dim;
    std::optional<Matrix<F>> action;   // B (x) M -> M
    std::optional<Matrix<F>> coaction; // M -> B (x) M
};

template <class F>
struct SymmetryDatum {
    SymmetryKind kind;
    std::size_t dim;
    std::optional<Matrix<F>> mult;     // algebra kinds
    std::optional<Matrix<F>> unit;
    std::optional<Matrix<F>> comult;   // coalgebra kinds
    std::optional<Matrix<F>> counit;
    std::optional<Matrix<F>> action;   // module kinds: B (x) X -> X
    std::optional<Matrix<F>> coaction; // comodule kinds: X -> B (x) X
};

template <class F>
struct Transposition {
    SymmetryKind kind;
    Matrix<F> w; // M (x) X -> X (x) M
};

namespace detail {

template <class F>
void check_algebra_axioms(ValidationReport& rep, const F& K, const std::string& who,
                          const Matrix<F>& mult, const Matrix<F>& unit) {
    std::size_t d = mult.rows();
    auto id = Matrix<F>::identity(K, d);
    check_identity(rep, who + " associativity", mult * kronecker(mult, id), mult * kronecker(id, mult),
                   {d, d, d});
    check_identity(rep, who + " left unit", mult * kronecker(unit, id), id, {d});
    check_identity(rep, who + " right unit", mult * kronecker(id, unit), id, {d});
}

template <class F>
void check_coalgebra_axioms(ValidationReport& rep, const F& K, const std::string& who,
                            const Matrix<F>& comult, const Matrix<F>& counit) {
    std::size_t d = comult.cols();
    auto id = Matrix<F>::identity(K, d);
    check_identity(rep, who + " coassociativity", kronecker(comult, id) * comult,
                   kronecker(id, comult) * comult, {d});
    check_identity(rep, who + " left counit", kronecker(counit, id) * comult, id, {d});
    check_identity(rep, who + " right counit", kronecker(id, counit) * comult, id, {d});
}

template <class F>
void check_module_axioms(ValidationReport& rep, const BialgebraSpec<F>& B, const std::string& who,
                         const Matrix<F>& act, std::size_t dx) {
    const F& K = B.field;
    auto idx = Matrix<F>::identity(K, dx);
    auto idb = Matrix<F>::identity(K, B.dim);
    check_identity(rep, who + " action associativity", act * kronecker(B.mult, idx),
                   act * kronecker(idb, act), {B.dim, B.dim, dx});
    check_identity(rep, who + " action unit", act * kronecker(B.unit, idx), idx, {dx});
}

template <class F>
void check_comodule_axioms(ValidationReport& rep, const BialgebraSpec<F>& B, const std::string& who,
                           const Matrix<F>& coact, std::size_t dx) {
    const F& K = B.field;
    auto idx = Matrix<F>::identity(K, dx);
    auto idb = Matrix<F>::identity(K, B.dim);
    check_identity(rep, who + " coaction coassociativity", kronecker(B.comult, idx) * coact,
                   kronecker(idb, coact) * coact, {dx});
    check_identity(rep, who + " coaction counit", kronecker(B.counit, idx) * coact, idx, {dx});
}

} // namespace detail

template <class F>
ValidationReport validate_bialgebra(const BialgebraSpec<F>& B) {
    const F& K = B.field;
    std::size_t d = B.dim;
    detail::check_shape(B.mult, d, d * d, "mult");
    detail::check_shape(B.unit, d, 1, "unit");
    detail::check_shape(B.comult, d * d, d, "comult");
    detail::check_shape(B.counit, 1, d, "counit");
    if (B.antipode) detail::check_shape(*B.antipode, d, d, "antipode");

    ValidationReport rep;
    detail::check_algebra_axioms(rep, K, "bialgebra", B.mult, B.unit);
    detail::check_coalgebra_axioms(rep, K, "bialgebra", B.comult, B.counit);

    auto id = Matrix<F>::identity(K, d);
    auto mid_swap = tensor_permutation(K, {d, d, d, d}, {0, 2, 1, 3});
    detail::check_identity(rep, "comult is multiplicative", B.comult * B.mult,
                           kronecker(B.mult, B.mult) * mid_swap * kronecker(B.comult, B.comult), {d, d});
    detail::check_identity(rep, "comult preserves unit", B.comult * B.unit, kronecker(B.unit, B.unit), {std::size_t{1}});
    detail::check_identity(rep, "counit is multiplicative", B.counit * B.mult, kronecker(B.counit, B.counit),
                           {d, d});
    detail::check_identity(rep, "counit preserves unit", B.counit * B.unit,
                           Matrix<F>::identity(K, 1), {std::size_t{1}});

    if (B.antipode) {
        auto eta_eps = B.unit * B.counit;
        detail::check_identity(rep, "left antipode identity",
                               B.mult * kronecker(*B.antipode, id) * B.comult, eta_eps, {d});
        detail::check_identity(rep, "right antipode identity",
                               B.mult * kronecker(id, *B.antipode) * B.comult, eta_eps, {d});
    }
    return rep;
}

template <class F>
ValidationReport validate_coefficient(const BialgebraSpec<F>& B, const CoefficientDatum<F>& M,
                                      SymmetryKind kind) {
    ValidationReport rep;
    if (module_kind(kind)) {
        if (!M.coaction) throw ConfigurationError("kind " + kind_name(kind) + " needs a coefficient coaction");
        detail::check_shape(*M.coaction, B.dim * M.dim, M.dim, "coefficient coaction");
        detail::check_comodule_axioms(rep, B, "coefficient", *M.coaction, M.dim);
    } else {
        if (!M.action) throw ConfigurationError("kind " + kind_name(kind) + " needs a coefficient action");
        detail::check_shape(*M.action, M.dim, B.dim * M.dim, "coefficient action");
        detail::check_module_axioms(rep, B, "coefficient", *M.action, M.dim);
    }
    return rep;
}

template <class F>
ValidationReport validate_symmetry(const BialgebraSpec<F>& B, const SymmetryDatum<F>& D,
                                   const CoefficientDatum<F>& M) {
    const F& K = B.field;
    std::size_t d = B.dim, dx = D.dim;
    auto idb = Matrix<F>::identity(K, d);
    auto idx = Matrix<F>::identity(K, dx);

    ValidationReport rep;
    if (algebra_kind(D.kind)) {
        if (!D.mult || !D.unit)
            throw ConfigurationError("kind " + kind_name(D.kind) + " needs carrier mult and unit");
        detail::check_shape(*D.mult, dx, dx * dx, "carrier mult");
        detail::check_shape(*D.unit, dx, 1, "carrier unit");
        detail::check_algebra_axioms(rep, K, "carrier", *D.mult, *D.unit);
    } else {
        if (!D.comult || !D.counit)
            throw ConfigurationError("kind " + kind_name(D.kind) + " needs carrier comult and counit");
        detail::check_shape(*D.comult, dx * dx, dx, "carrier comult");
        detail::check_shape(*D.counit, 1, dx, "carrier counit");
        detail::check_coalgebra_axioms(rep, K, "carrier", *D.comult, *D.counit);
    }

    if (module_kind(D.kind)) {
        if (!D.action) throw ConfigurationError("kind " + kind_name(D.kind) + " needs a carrier action");
        detail::check_shape(*D.action, dx, d * dx, "carrier action");
        detail::check_module_axioms(rep, B, "carrier", *D.action, dx);
    } else {
        if (!D.coaction) throw ConfigurationError("kind " + kind_name(D.kind) + " needs a carrier coaction");
        detail::check_shape(*D.coaction, d * dx, dx, "carrier coaction");
        detail::check_comodule_axioms(rep, B, "carrier", *D.coaction, dx);
    }

    auto mid_swap_bx = tensor_permutation(K, {d, d, dx, dx}, {0, 2, 1, 3});
    switch (D.kind) {
        case SymmetryKind::MA: {
            // b(xy) = (b_(1) x)(b_(2) y), b 1 = eps(b) 1
            auto lhs = *D.action * kronecker(idb, *D.mult);
            auto rhs = *D.mult * kronecker(*D.action, *D.action) * mid_swap_bx * kronecker(B.comult, kronecker(idx, idx));
            detail::check_identity(rep, "diagonal action is multiplicative", lhs, rhs, {d, dx, dx});
            detail::check_identity(rep, "action fixes the unit up to counit",
                                   *D.action * kronecker(idb, *D.unit), *D.unit * B.counit, {d});
            break;
        }
        case SymmetryKind::MC: {
            // delta(b x) = b_(1) x_(1) (x) b_(2) x_(2), eps(b x) = eps(b) eps(x)
            auto mid_swap_bbxx = tensor_permutation(K, {d, dx, d, dx}, {0, 2, 1, 3});
            auto lhs = *D.comult * *D.action;
            auto rhs = kronecker(*D.action, *D.action) * mid_swap_bbxx * kronecker(B.comult, *D.comult);
            detail::check_identity(rep, "comultiplication is equivariant", lhs, rhs, {d, dx});
            detail::check_identity(rep, "counit is equivariant", *D.counit * *D.action,
                                   kronecker(B.counit, *D.counit), {d, dx});
            break;
        }
        case SymmetryKind::CA: {
            // rho is an algebra map
            auto mid_swap_bxbx = tensor_permutation(K, {d, dx, d, dx}, {0, 2, 1, 3});
            auto lhs = *D.coaction * *D.mult;
            auto rhs = kronecker(B.mult, *D.mult) * mid_swap_bxbx * kronecker(*D.coaction, *D.coaction);
            detail::check_identity(rep, "coaction is multiplicative", lhs, rhs, {dx, dx});
            detail::check_identity(rep, "coaction preserves the unit", *D.coaction * *D.unit,
                                   kronecker(B.unit, *D.unit), {std::size_t{1}});
            break;
        }
        case SymmetryKind::CC: {
            // rho is diagonal on comultiplication, counit is colinear
            auto mid_swap_bxbx = tensor_permutation(K, {d, dx, d, dx}, {0, 2, 1, 3});
            auto lhs = kronecker(idb, *D.comult) * *D.coaction;
            auto rhs = kronecker(B.mult, kronecker(idx, idx)) * mid_swap_bxbx *
                       kronecker(*D.coaction, *D.coaction) * *D.comult;
            detail::check_identity(rep, "comultiplication is coequivariant", lhs, rhs, {dx});
            detail::check_identity(rep, "counit is colinear", kronecker(idb, *D.counit) * *D.coaction,
                                   B.unit * *D.counit, {dx});
            break;
        }
    }

    auto coeff = validate_coefficient(B, M, D.kind);
    rep.failures.insert(rep.failures.end(), coeff.failures.begin(), coeff.failures.end());
    return rep;
}

enum class TranspositionSide { left, right };

// Module kinds:   w(m (x) x) = m_(-1) x (x) m_(0)
// Comodule kinds: w(m (x) x) = x_(0) (x) x_(-1) m
// The right side flag mirrors the formula, reading the stored structure maps
// as right-sided ones.
template <class F>
Transposition<F> build_transposition(SymmetryKind kind, const BialgebraSpec<F>& B,
                                     const CoefficientDatum<F>& M, const SymmetryDatum<F>& X,
                                     TranspositionSide side = TranspositionSide::left) {
    const F& K = B.field;
    std::size_t d = B.dim, dm = M.dim, dx = X.dim;
    auto idm = Matrix<F>::identity(K, dm);
    auto idx = Matrix<F>::identity(K, dx);
    auto idb = Matrix<F>::identity(K, d);

    if (module_kind(kind)) {
        if (!M.coaction) throw ConfigurationError("transposition for " + kind_name(kind) + " needs a coefficient coaction");
        if (!X.action) throw ConfigurationError("transposition for " + kind_name(kind) + " needs a carrier action");
        detail::check_shape(*M.coaction, d * dm, dm, "coefficient coaction");
        detail::check_shape(*X.action, dx, d * dx, "carrier action");
        if (side == TranspositionSide::left) {
            auto w = kronecker(*X.action, idm) * kronecker(idb, detail::swap_matrix(K, dm, dx)) *
                     kronecker(*M.coaction, idx);
            return Transposition<F>{kind, std::move(w)};
        }
        auto act_r = *X.action * detail::swap_matrix(K, dx, d);
        auto w = kronecker(act_r, idm) * tensor_permutation(K, {d, dm, dx}, {2, 0, 1}) *
                 kronecker(*M.coaction, idx);
        return Transposition<F>{kind, std::move(w)};
    }

    if (!M.action) throw ConfigurationError("transposition for " + kind_name(kind) + " needs a coefficient action");
    if (!X.coaction) throw ConfigurationError("transposition for " + kind_name(kind) + " needs a carrier coaction");
    detail::check_shape(*M.action, dm, d * dm, "coefficient action");
    detail::check_shape(*X.coaction, d * dx, dx, "carrier coaction");
    if (side == TranspositionSide::left) {
        auto w = kronecker(idx, *M.action) * tensor_permutation(K, {d, dx, dm}, {1, 0, 2}) *
                 kronecker(*X.coaction, idm) * detail::swap_matrix(K, dm, dx);
        return Transposition<F>{kind, std::move(w)};
    }
    auto act_r = *M.action * detail::swap_matrix(K, dm, d);
    auto w = kronecker(idx, act_r) * tensor_permutation(K, {dm, d, dx}, {2, 0, 1}) *
             kronecker(idm, *X.coaction);
    return Transposition<F>{kind, std::move(w)};
}

// Bow-tie compatibility of w with the carrier structure. Module kinds are
// checked in the stated form; comodule kinds in the mirrored form on
// v = swap . w . swap, which is the orientation their pipelines use.
template <class F>
ValidationReport check_w_transpositive(const SymmetryDatum<F>& D, const Transposition<F>& w) {
    std::size_t dx = D.dim;
    if (w.w.rows() != w.w.cols() || w.w.rows() % dx != 0)
        throw DimensionError("transposition shape " + w.w.shape_str() + " does not match carrier dim " +
                             std::to_string(dx));
    std::size_t dm = w.w.rows() / dx;
    const Matrix<F>& W = w.w;
    const F& K = W.field();
    auto idm = Matrix<F>::identity(K, dm);
    auto idx = Matrix<F>::identity(K, dx);

    ValidationReport rep;
    if (module_kind(D.kind)) {
        if (algebra_kind(D.kind)) {
            if (!D.mult || !D.unit) throw ConfigurationError("algebra carrier lacks mult/unit");
            detail::check_identity(rep, "bow-tie with multiplication", W * kronecker(idm, *D.mult),
                                   kronecker(*D.mult, idm) * kronecker(idx, W) * kronecker(W, idx),
                                   {dm, dx, dx});
            detail::check_identity(rep, "bow-tie with unit", W * kronecker(idm, *D.unit),
                                   kronecker(*D.unit, idm), {dm});
        } else {
            if (!D.comult || !D.counit) throw ConfigurationError("coalgebra carrier lacks comult/counit");
            detail::check_identity(rep, "bow-tie with comultiplication", kronecker(*D.comult, idm) * W,
                                   kronecker(idx, W) * kronecker(W, idx) * kronecker(idm, *D.comult),
                                   {dm, dx});
            detail::check_identity(rep, "bow-tie with counit", kronecker(*D.counit, idm) * W,
                                   kronecker(idm, *D.counit), {dm, dx});
        }
        return rep;
    }

    // V = swap . W . swap : X (x) M -> M (x) X
    auto V = detail::swap_matrix(K, dx, dm) * W * detail::swap_matrix(K, dx, dm);
    if (algebra_kind(D.kind)) {
        if (!D.mult || !D.unit) throw ConfigurationError("algebra carrier lacks mult/unit");
        detail::check_identity(rep, "mirrored bow-tie with multiplication", V * kronecker(*D.mult, idm),
                               kronecker(idm, *D.mult) * kronecker(V, idx) * kronecker(idx, V),
                               {dx, dx, dm});
        detail::check_identity(rep, "mirrored bow-tie with unit", V * kronecker(*D.unit, idm),
                               kronecker(idm, *D.unit), {dm});
    } else {
        if (!D.comult || !D.counit) throw ConfigurationError("coalgebra carrier lacks comult/counit");
        detail::check_identity(rep, "mirrored bow-tie with comultiplication", kronecker(idm, *D.comult) * V,
                               kronecker(V, idx) * kronecker(idx, V) * kronecker(*D.comult, idm),
                               {dx, dm});
        detail::check_identity(rep, "mirrored bow-tie with counit", kronecker(idm, *D.counit) * V,
                               kronecker(*D.counit, idm), {dx, dm});
    }
    return rep;
}

} // namespace hopfcyclic

#endif
