#ifndef HOPFCYCLIC_HOMOLOGY_HPP
#define HOPFCYCLIC_HOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "approximation.hpp"
#include "errors.hpp"
#include "hopf_data.hpp"
#include "matrix.hpp"
#include "paracyclic.hpp"
#include "subspace.hpp"

namespace hopfcyclic {

// diff[k] connects degrees k and k+1: downward for chain complexes, upward
// for cochain ones.
template <class F>
struct ChainComplex {
    bool cochain = false;
    std::vector<std::size_t> dims;
    std::vector<Matrix<F>> diff;
};

template <class F>
void verify_complex(const ChainComplex<F>& C) {
    if (C.diff.size() + 1 != C.dims.size() && !(C.dims.size() <= 1 && C.diff.empty()))
        throw DimensionError("complex stores " + std::to_string(C.dims.size()) + " degrees but " +
                             std::to_string(C.diff.size()) + " differentials");
    for (std::size_t k = 0; k < C.diff.size(); ++k) {
        std::size_t lo = C.cochain ? C.diff[k].cols() : C.diff[k].rows();
        std::size_t hi = C.cochain ? C.diff[k].rows() : C.diff[k].cols();
        if (lo != C.dims[k] || hi != C.dims[k + 1])
            throw DimensionError("differential " + std::to_string(k) + " has shape " +
                                 C.diff[k].shape_str() + ", expected to connect dimensions " +
                                 std::to_string(C.dims[k]) + " and " + std::to_string(C.dims[k + 1]));
    }
    for (std::size_t k = 0; k + 1 < C.diff.size(); ++k) {
        auto prod = C.cochain ? C.diff[k + 1] * C.diff[k] : C.diff[k] * C.diff[k + 1];
        if (prod.nnz() != 0)
            throw CertificationError("differential does not square to zero between degrees " +
                                     std::to_string(k) + " and " + std::to_string(k + 2));
    }
}

// Dimensions of the (co)homology at degrees 0..count-1. Each degree consumes
// the differential indexed by the degree itself, so count <= diff.size().
template <class F>
std::vector<std::size_t> homology_dims(const ChainComplex<F>& C, std::size_t count) {
    if (count > C.diff.size())
        throw RangeError("homology through degree " + std::to_string(count) + " needs " +
                         std::to_string(count) + " differentials, complex stores " +
                         std::to_string(C.diff.size()));
    std::vector<std::size_t> rk(count);
    for (std::size_t k = 0; k < count; ++k) rk[k] = rank(C.diff[k]);
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        std::size_t cycles = C.cochain ? C.dims[n] - rk[n]
                                       : (n == 0 ? C.dims[0] : C.dims[n] - rk[n - 1]);
        std::size_t boundaries = C.cochain ? (n == 0 ? 0 : rk[n - 1]) : rk[n];
        out.push_back(cycles - boundaries);
    }
    return out;
}

enum class TheoryTag { hochschild, cyclic, cocyclic_dual, hopf_hochschild };

inline std::string theory_name(TheoryTag t) {
    switch (t) {
        case TheoryTag::hochschild: return "HH";
        case TheoryTag::cyclic: return "HC";
        case TheoryTag::cocyclic_dual: return "HC*";
        case TheoryTag::hopf_hochschild: return "HopfHH";
    }
    return "?";
}

// dims[n] is the degree-n dimension over the honest range only.
struct HomologyTable {
    TheoryTag theory = TheoryTag::hochschild;
    std::vector<std::size_t> dims;
    std::string provenance;
};

// b_n = sum_i (-1)^i d_i : X_n -> X_{n-1}, all stored faces included.
template <class F>
Matrix<F> hochschild_boundary(const ParaCyclicModule<F>& S, std::size_t n) {
    if (S.orientation != Orientation::cyclic)
        throw ConfigurationError("homological boundaries need the cyclic orientation");
    if (n == 0 || n > S.truncation)
        throw RangeError("no boundary out of degree " + std::to_string(n));
    Matrix<F> b = S.face[n - 1][0];
    bool neg = true;
    for (std::size_t i = 1; i < S.face[n - 1].size(); ++i, neg = !neg)
        b = neg ? b - S.face[n - 1][i] : b + S.face[n - 1][i];
    return b;
}

// b'_n drops the top face; the acyclic column of the cyclic bicomplex.
template <class F>
Matrix<F> reduced_boundary(const ParaCyclicModule<F>& S, std::size_t n) {
    if (S.orientation != Orientation::cyclic)
        throw ConfigurationError("homological boundaries need the cyclic orientation");
    if (n == 0 || n > S.truncation)
        throw RangeError("no boundary out of degree " + std::to_string(n));
    Matrix<F> b = S.face[n - 1][0];
    bool neg = true;
    for (std::size_t i = 1; i + 1 < S.face[n - 1].size(); ++i, neg = !neg)
        b = neg ? b - S.face[n - 1][i] : b + S.face[n - 1][i];
    return b;
}

template <class F>
ChainComplex<F> hochschild_complex(const ParaCyclicModule<F>& S, std::size_t N) {
    if (N > S.truncation)
        throw TruncationError("complex through degree " + std::to_string(N) +
                              " exceeds stored truncation " + std::to_string(S.truncation));
    ChainComplex<F> C;
    C.dims.assign(S.dims.begin(), S.dims.begin() + N + 1);
    for (std::size_t n = 1; n <= N; ++n) C.diff.push_back(hochschild_boundary(S, n));
    verify_complex(C);
    return C;
}

// Degree N homology would need faces stored at level N, so the table stops
// at N-1 rather than guessing.
template <class F>
HomologyTable hochschild_homology(const ParaCyclicModule<F>& S, std::size_t N) {
    auto C = hochschild_complex(S, N);
    HomologyTable t;
    t.theory = TheoryTag::hochschild;
    t.dims = homology_dims(C, N);
    t.provenance = S.provenance + ", b-complex through degree " + std::to_string(N);
    return t;
}

namespace detail {

template <class F>
Matrix<F> signed_twist(const ParaCyclicModule<F>& Q, std::size_t q) {
    return q % 2 == 0 ? Q.tau[q] : -Q.tau[q];
}

// sum_{i=0}^{q} lambda_q^i with lambda_q = (-1)^q tau_q.
template <class F>
Matrix<F> twist_norm(const ParaCyclicModule<F>& Q, std::size_t q) {
    auto lambda = signed_twist(Q, q);
    auto acc = Matrix<F>::identity(lambda.field(), Q.dims[q]);
    auto out = acc;
    for (std::size_t i = 1; i <= q; ++i) {
        acc = lambda * acc;
        out = out + acc;
    }
    return out;
}

template <class F>
void paste_block(Matrix<F>& dst, std::size_t r0, std::size_t c0, const Matrix<F>& src) {
    for (std::size_t c = 0; c < src.cols(); ++c)
        for (const auto& [r, v] : src.column(c)) dst.add_to(r0 + r, c0 + c, v);
}

}  // namespace detail

// Total complex of the first-quadrant (b, b') bicomplex: columns alternate b
// and -b', rows connect through 1 - lambda and the norm.
template <class F>
ChainComplex<F> cyclic_total_complex(const ParaCyclicModule<F>& Q, std::size_t N) {
    if (Q.orientation != Orientation::cyclic)
        throw ConfigurationError("cyclic homology needs the cyclic orientation; transpose first");
    if (N > Q.truncation)
        throw TruncationError("complex through degree " + std::to_string(N) +
                              " exceeds stored truncation " + std::to_string(Q.truncation));
    certify_relations(Q, CategoryFlavor::Lambda).require_ok("cyclic homology input");
    const F& K = detail::family_field(Q);
    ChainComplex<F> C;
    C.dims.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t total = 0;
        for (std::size_t p = 0; p <= n; ++p) total += Q.dims[n - p];
        C.dims.push_back(total);
    }
    for (std::size_t n = 1; n <= N; ++n) {
        Matrix<F> D(K, C.dims[n - 1], C.dims[n]);
        std::size_t col = 0;
        for (std::size_t p = 0; p <= n; ++p) {
            std::size_t q = n - p;
            if (q >= 1) {
                // vertical map stays in column p, landing at row block p of Tot_{n-1}
                std::size_t row = 0;
                for (std::size_t p2 = 0; p2 < p; ++p2) row += Q.dims[n - 1 - p2];
                auto vert = p % 2 == 0 ? hochschild_boundary(Q, q) : -reduced_boundary(Q, q);
                detail::paste_block(D, row, col, vert);
            }
            if (p >= 1) {
                std::size_t row = 0;
                for (std::size_t p2 = 0; p2 + 1 < p; ++p2) row += Q.dims[n - 1 - p2];
                auto idq = Matrix<F>::identity(K, Q.dims[q]);
                auto horiz = p % 2 == 1 ? idq - detail::signed_twist(Q, q) : detail::twist_norm(Q, q);
                detail::paste_block(D, row, col, horiz);
            }
            col += Q.dims[q];
        }
        C.diff.push_back(std::move(D));
    }
    verify_complex(C);
    return C;
}

// Tot_n is complete for n <= N, but its homology is stable under raising the
// truncation only strictly below the cut, so the table stops at N-2.
template <class F>
HomologyTable cyclic_homology(const ParaCyclicModule<F>& Q, std::size_t N) {
    auto C = cyclic_total_complex(Q, N);
    HomologyTable t;
    t.theory = TheoryTag::cyclic;
    t.dims = homology_dims(C, N >= 1 ? N - 1 : 0);
    t.provenance = Q.provenance + ", cyclic bicomplex through degree " + std::to_string(N);
    return t;
}

template <class F>
HomologyTable cocyclic_cohomology(const ParaCyclicModule<F>& Q, std::size_t N) {
    if (Q.orientation != Orientation::cocyclic)
        throw ConfigurationError("cocyclic cohomology expects the cocyclic orientation");
    auto t = cyclic_homology(opposite_module(Q), N);
    t.theory = TheoryTag::cocyclic_dual;
    return t;
}

// Reduced coefficient family together with the connecting maps: quotient
// maps T_n -> T_n/span{b.x - counit(b) x} for coinvariants, inclusions of
// {x : rho(x) = 1 (x) x} for the cotensor part.
template <class F>
struct CoefficientFamily {
    ParaCyclicModule<F> T;
    std::vector<Matrix<F>> map;
};

namespace detail {

// Names of operators that fail to be morphisms for the structure maps. All
// faces and degeneracies are checked, the top ones included; twists only on
// request.
template <class F>
std::vector<std::string> nonequivariant_ops(const EquivariantParaCyclic<F>& E, bool with_twists) {
    std::vector<std::string> bad;
    const auto& T = E.T;
    bool cocyclic = T.orientation == Orientation::cocyclic;
    for (std::size_t low = 0; low + 1 <= T.truncation; ++low) {
        std::size_t fsrc = cocyclic ? low : low + 1;
        std::size_t ftgt = low + (low + 1) - fsrc;
        for (std::size_t i = 0; i < T.face[low].size(); ++i)
            if (!equivariant(E.comonad, T.face[low][i], E.rho[fsrc], E.rho[ftgt]))
                bad.push_back("d" + std::to_string(low) + "_" + std::to_string(i));
        std::size_t ssrc = cocyclic ? low + 1 : low;
        std::size_t stgt = low + (low + 1) - ssrc;
        for (std::size_t j = 0; j < T.degen[low].size(); ++j)
            if (!equivariant(E.comonad, T.degen[low][j], E.rho[ssrc], E.rho[stgt]))
                bad.push_back("s" + std::to_string(low) + "_" + std::to_string(j));
    }
    if (with_twists)
        for (std::size_t n = 0; n <= T.truncation; ++n)
            if (!equivariant(E.comonad, T.tau[n], E.rho[n], E.rho[n]))
                bad.push_back("t" + std::to_string(n));
    return bad;
}

inline std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& s : names) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

// Descend op through quotient maps: the unique map with bar(op) q_src = q_tgt op.
template <class F>
Matrix<F> descend_map(const Matrix<F>& op, const Matrix<F>& q_src, const Matrix<F>& q_tgt,
                      const std::string& what) {
    auto r = solve(q_src.transpose(), op.transpose() * q_tgt.transpose());
    if (!r) throw CertificationError(what + " does not descend to the quotient family");
    return r->transpose();
}

}  // namespace detail

// Quotient by the augmentation submodule span{b.x - counit(b) x} in every
// degree. Operators must be module maps: the whole family descends, or with
// with_twists false only the simplicial part does and the twists are dropped.
template <class F>
CoefficientFamily<F> coinvariants(const EquivariantParaCyclic<F>& E, bool with_twists = true) {
    if (E.comonad.mode != ComonadMode::module_side)
        throw ConfigurationError("coinvariants need module-side structure maps");
    auto bad = detail::nonequivariant_ops(E, with_twists);
    if (!bad.empty())
        throw CertificationError("operators do not descend to coinvariants: " +
                                 detail::join_names(bad));
    const F& K = E.comonad.B.field;
    const auto& B = E.comonad.B;
    const auto& T = E.T;
    CoefficientFamily<F> out;
    out.map.reserve(T.truncation + 1);
    for (std::size_t n = 0; n <= T.truncation; ++n) {
        auto slices = detail::action_slices(K, B.dim, E.rho[n]);
        std::optional<Matrix<F>> rel;
        for (std::size_t i = 0; i < B.dim; ++i) {
            Matrix<F> gen = slices[i];
            auto eps = B.counit.get(0, i);
            for (std::size_t r = 0; r < T.dims[n]; ++r) gen.add_to(r, r, K.neg(eps));
            rel = rel ? hstack(*rel, gen) : gen;
        }
        out.map.push_back(annihilator_rows(image(*rel)));
    }
    auto& R = out.T;
    R.orientation = T.orientation;
    R.kind = T.kind;
    R.truncation = T.truncation;
    R.provenance = T.provenance + ", coinvariants";
    R.dims.resize(T.truncation + 1);
    for (std::size_t n = 0; n <= T.truncation; ++n) R.dims[n] = out.map[n].rows();
    bool cocyclic = T.orientation == Orientation::cocyclic;
    R.face.resize(T.face.size());
    R.degen.resize(T.degen.size());
    for (std::size_t low = 0; low + 1 <= T.truncation; ++low) {
        std::size_t fsrc = cocyclic ? low : low + 1;
        std::size_t ftgt = low + (low + 1) - fsrc;
        for (std::size_t i = 0; i < T.face[low].size(); ++i)
            R.face[low].push_back(detail::descend_map(T.face[low][i], out.map[fsrc],
                                                      out.map[ftgt],
                                                      "d" + std::to_string(low) + "_" +
                                                          std::to_string(i)));
        std::size_t ssrc = cocyclic ? low + 1 : low;
        std::size_t stgt = low + (low + 1) - ssrc;
        for (std::size_t j = 0; j < T.degen[low].size(); ++j)
            R.degen[low].push_back(detail::descend_map(T.degen[low][j], out.map[ssrc],
                                                       out.map[stgt],
                                                       "s" + std::to_string(low) + "_" +
                                                           std::to_string(j)));
    }
    if (with_twists) {
        for (std::size_t n = 0; n <= T.truncation; ++n)
            R.tau.push_back(detail::descend_map(T.tau[n], out.map[n], out.map[n],
                                                "t" + std::to_string(n)));
        certify_relations(R).require_ok("coinvariant family");
    } else {
        certify_relations(R, CategoryFlavor::LambdaPlus).require_ok("coinvariant simplicial family");
    }
    return out;
}

// Subfamily {x : rho(x) = 1 (x) x} in every degree; the comodule-side mirror
// of coinvariants.
template <class F>
CoefficientFamily<F> cotensor(const EquivariantParaCyclic<F>& E, bool with_twists = true) {
    if (E.comonad.mode != ComonadMode::comodule_side)
        throw ConfigurationError("the cotensor part needs comodule-side structure maps");
    auto bad = detail::nonequivariant_ops(E, with_twists);
    if (!bad.empty())
        throw CertificationError("operators do not restrict to the cotensor part: " +
                                 detail::join_names(bad));
    const F& K = E.comonad.B.field;
    const auto& T = E.T;
    CoefficientFamily<F> out;
    out.map.reserve(T.truncation + 1);
    for (std::size_t n = 0; n <= T.truncation; ++n) {
        auto idt = Matrix<F>::identity(K, T.dims[n]);
        out.map.push_back(equalizer(E.rho[n], kronecker(E.comonad.B.unit, idt)).basis);
    }
    auto& R = out.T;
    R.orientation = T.orientation;
    R.kind = T.kind;
    R.truncation = T.truncation;
    R.provenance = T.provenance + ", cotensor part";
    R.dims.resize(T.truncation + 1);
    for (std::size_t n = 0; n <= T.truncation; ++n) R.dims[n] = out.map[n].cols();
    bool cocyclic = T.orientation == Orientation::cocyclic;
    R.face.resize(T.face.size());
    R.degen.resize(T.degen.size());
    for (std::size_t low = 0; low + 1 <= T.truncation; ++low) {
        std::size_t fsrc = cocyclic ? low : low + 1;
        std::size_t ftgt = low + (low + 1) - fsrc;
        for (std::size_t i = 0; i < T.face[low].size(); ++i)
            R.face[low].push_back(detail::restrict_map(T.face[low][i], out.map[fsrc],
                                                       out.map[ftgt],
                                                       "d" + std::to_string(low) + "_" +
                                                           std::to_string(i)));
        std::size_t ssrc = cocyclic ? low + 1 : low;
        std::size_t stgt = low + (low + 1) - ssrc;
        for (std::size_t j = 0; j < T.degen[low].size(); ++j)
            R.degen[low].push_back(detail::restrict_map(T.degen[low][j], out.map[ssrc],
                                                        out.map[stgt],
                                                        "s" + std::to_string(low) + "_" +
                                                            std::to_string(j)));
    }
    if (with_twists) {
        for (std::size_t n = 0; n <= T.truncation; ++n)
            R.tau.push_back(detail::restrict_map(T.tau[n], out.map[n], out.map[n],
                                                 "t" + std::to_string(n)));
        certify_relations(R).require_ok("cotensor family");
    } else {
        certify_relations(R, CategoryFlavor::LambdaPlus).require_ok("cotensor simplicial family");
    }
    return out;
}

// Simplicial reduction for module-algebra data: diagonal structure maps,
// coinvariants, then the b-complex. Twists are never consulted, so the
// module-algebra twists need not be equivariant.
template <class F>
HomologyTable hopf_hochschild(const SymmetryDatum<F>& A, const BialgebraSpec<F>& B,
                              const CoefficientDatum<F>& M, std::size_t N) {
    if (A.kind != SymmetryKind::MA)
        throw ConfigurationError("hopf_hochschild expects a module-algebra datum");
    auto v = validate_symmetry(B, A, M);
    if (!v.ok()) throw ValidationError(v.text());
    auto w = build_transposition(A.kind, B, M, A);
    auto T = build_T_algebra(A, M, w, N);
    certify_relations(T).require_ok("module-algebra family");
    auto E = equip_diagonal(std::move(T), B, A, M);
    auto co = coinvariants(E, false);
    auto t = hochschild_homology(co.T, N);
    t.theory = TheoryTag::hopf_hochschild;
    return t;
}

}  // namespace hopfcyclic

#endif
