#ifndef HOPFCYCLIC_APPROXIMATION_HPP
#define HOPFCYCLIC_APPROXIMATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyclic/errors.hpp"
#include "hopfcyclic/hopf_data.hpp"
#include "hopfcyclic/matrix.hpp"
#include "hopfcyclic/paracyclic.hpp"
#include "hopfcyclic/subspace.hpp"

namespace hopfcyclic {

// module_side: operators are expected to be B-module maps for a diagonal
// action. comodule_side: B-comodule maps for a diagonal coaction.
enum class ComonadMode { comodule_side, module_side };

inline ComonadMode comonad_mode_for(SymmetryKind k) {
    return module_kind(k) ? ComonadMode::module_side : ComonadMode::comodule_side;
}

template <class F>
struct ComonadSpec {
    BialgebraSpec<F> B;
    ComonadMode mode;
};

// rho[n] is the degree-n structure map: an action B (x) T_n -> T_n in
// module_side, a coaction T_n -> B (x) T_n in comodule_side.
template <class F>
struct EquivariantParaCyclic {
    ParaCyclicModule<F> T;
    ComonadSpec<F> comonad;
    std::vector<Matrix<F>> rho;
};

namespace detail {

// b . (u (x) v) = (b_(1) . u) (x) (b_(2) . v)
template <class F>
Matrix<F> diagonal_action_pair(const BialgebraSpec<F>& B, const Matrix<F>& au, const Matrix<F>& av) {
    const F& K = B.field;
    std::size_t db = B.dim, du = au.rows(), dv = av.rows();
    auto mid = at_slot(K, db, tensor_permutation(K, {db, du}, {1, 0}), dv);
    return kronecker(au, av) * mid * kronecker(B.comult, Matrix<F>::identity(K, du * dv));
}

// rho(u (x) v) = u_(-1) v_(-1) (x) u_(0) (x) v_(0)
template <class F>
Matrix<F> diagonal_coaction_pair(const BialgebraSpec<F>& B, const Matrix<F>& ru, const Matrix<F>& rv) {
    const F& K = B.field;
    std::size_t db = B.dim, du = ru.cols(), dv = rv.cols();
    auto mid = at_slot(K, db, tensor_permutation(K, {du, db}, {1, 0}), dv);
    return kronecker(B.mult, Matrix<F>::identity(K, du * dv)) * mid * kronecker(ru, rv);
}

// Whether op: X_src -> X_tgt is a morphism for the given structure maps.
template <class F>
bool equivariant(const ComonadSpec<F>& c, const Matrix<F>& op, const Matrix<F>& rho_src,
                 const Matrix<F>& rho_tgt) {
    auto idb = Matrix<F>::identity(c.B.field, c.B.dim);
    if (c.mode == ComonadMode::module_side) return op * rho_src == rho_tgt * kronecker(idb, op);
    return rho_tgt * op == kronecker(idb, op) * rho_src;
}

// Endomorphisms x -> b_i . x for the basis elements b_i of B.
template <class F>
std::vector<Matrix<F>> action_slices(const F& K, std::size_t db, const Matrix<F>& alpha) {
    std::size_t dt = alpha.rows();
    std::vector<Matrix<F>> out;
    out.reserve(db);
    for (std::size_t i = 0; i < db; ++i) {
        Matrix<F> pick(K, db * dt, dt);
        for (std::size_t r = 0; r < dt; ++r) pick.set(i * dt + r, r, K.one());
        out.push_back(alpha * pick);
    }
    return out;
}

// Vectors x with f(b_i (x) x) = g(b_i (x) x) for all i, where f, g already
// carry the two action orders baked in.
template <class F>
Subspace<F> commutant_space(const F& K, const std::vector<Matrix<F>>& lhs,
                            const std::vector<Matrix<F>>& rhs) {
    Subspace<F> v(lhs.front().cols(), Matrix<F>::identity(K, lhs.front().cols()));
    for (std::size_t i = 0; i < lhs.size(); ++i) v = intersect(v, equalizer(lhs[i], rhs[i]));
    return v;
}

template <class F>
Matrix<F> restrict_map(const Matrix<F>& op, const Matrix<F>& eta_src, const Matrix<F>& eta_tgt,
                       const std::string& what) {
    auto r = solve(eta_tgt, op * eta_src);
    if (!r) throw CertificationError(what + " does not preserve the approximation subspaces");
    return *r;
}

}  // namespace detail

template <class F>
EquivariantParaCyclic<F> equip_diagonal(ParaCyclicModule<F> T, const BialgebraSpec<F>& B,
                                        const SymmetryDatum<F>& X, const CoefficientDatum<F>& M) {
    const F& K = B.field;
    ComonadMode mode = comonad_mode_for(T.kind);
    std::vector<Matrix<F>> rho;
    rho.reserve(T.truncation + 1);
    if (mode == ComonadMode::module_side) {
        if (!X.action) throw ConfigurationError("module-side comonad structure needs a carrier action");
        Matrix<F> acc = M.action ? *M.action : kronecker(B.counit, Matrix<F>::identity(K, M.dim));
        for (std::size_t n = 0; n <= T.truncation; ++n) {
            acc = detail::diagonal_action_pair(B, *X.action, acc);
            if (acc.rows() != T.dims[n])
                throw DimensionError("diagonal action dim " + std::to_string(acc.rows()) +
                                     " does not match T_" + std::to_string(n));
            rho.push_back(acc);
        }
    } else {
        if (!X.coaction)
            throw ConfigurationError("comodule-side comonad structure needs a carrier coaction");
        Matrix<F> acc = M.coaction ? *M.coaction : kronecker(B.unit, Matrix<F>::identity(K, M.dim));
        for (std::size_t n = 0; n <= T.truncation; ++n) {
            acc = detail::diagonal_coaction_pair(B, *X.coaction, acc);
            if (acc.cols() != T.dims[n])
                throw DimensionError("diagonal coaction dim " + std::to_string(acc.cols()) +
                                     " does not match T_" + std::to_string(n));
            rho.push_back(acc);
        }
    }
    return EquivariantParaCyclic<F>{std::move(T), ComonadSpec<F>{B, mode}, std::move(rho)};
}

struct EquivarianceReport {
    // structure-map axioms and the face/degeneracy squares
    std::vector<std::string> failures;
    // twist and top-face squares, reported separately since they are allowed to fail
    std::vector<std::string> twist_failures;

    bool ok() const { return failures.empty(); }
    bool fully_equivariant() const { return failures.empty() && twist_failures.empty(); }

    std::string text() const {
        if (failures.empty() && twist_failures.empty()) return "fully equivariant";
        std::string out;
        for (const auto& f : failures) out += (out.empty() ? "" : "\n") + f;
        for (const auto& f : twist_failures)
            out += (out.empty() ? "" : "\n") + ("twist square: " + f);
        return out;
    }
};

template <class F>
EquivarianceReport detect_pseudo_para(const EquivariantParaCyclic<F>& E) {
    const auto& T = E.T;
    const auto& B = E.comonad.B;
    const F& K = B.field;
    if (E.rho.size() != T.truncation + 1)
        throw ConfigurationError("expected " + std::to_string(T.truncation + 1) +
                                 " structure maps, got " + std::to_string(E.rho.size()));
    EquivarianceReport rep;
    auto idb = Matrix<F>::identity(K, B.dim);
    for (std::size_t n = 0; n <= T.truncation; ++n) {
        const auto& r = E.rho[n];
        auto idt = Matrix<F>::identity(K, T.dims[n]);
        if (E.comonad.mode == ComonadMode::module_side) {
            if (r.rows() != T.dims[n] || r.cols() != B.dim * T.dims[n])
                throw DimensionError("action shape " + r.shape_str() + " at degree " +
                                     std::to_string(n));
            if (!(r * kronecker(B.mult, idt) == r * kronecker(idb, r)))
                rep.failures.push_back("degree " + std::to_string(n) + " action is not associative");
            if (!(r * kronecker(B.unit, idt) == idt))
                rep.failures.push_back("degree " + std::to_string(n) + " action fails the unit law");
        } else {
            if (r.rows() != B.dim * T.dims[n] || r.cols() != T.dims[n])
                throw DimensionError("coaction shape " + r.shape_str() + " at degree " +
                                     std::to_string(n));
            if (!(kronecker(B.comult, idt) * r == kronecker(idb, r) * r))
                rep.failures.push_back("degree " + std::to_string(n) +
                                       " coaction is not coassociative");
            if (!(kronecker(B.counit, idt) * r == idt))
                rep.failures.push_back("degree " + std::to_string(n) +
                                       " coaction fails the counit law");
        }
    }
    bool cocyclic = T.orientation == Orientation::cocyclic;
    auto check = [&](const Matrix<F>& op, std::size_t low, bool raises, const std::string& name,
                     std::vector<std::string>& sink) {
        std::size_t src = (cocyclic == raises) ? low : low + 1;
        std::size_t tgt = low + (low + 1) - src;
        if (!detail::equivariant(E.comonad, op, E.rho[src], E.rho[tgt]))
            sink.push_back(name + " is not equivariant");
    };
    for (std::size_t n = 0; n + 1 <= T.truncation; ++n) {
        for (std::size_t i = 0; i <= n; ++i)
            check(T.face[n][i], n, true, "d" + std::to_string(n) + "_" + std::to_string(i),
                  rep.failures);
        check(T.face[n][n + 1], n, true, "d" + std::to_string(n) + "_" + std::to_string(n + 1),
              rep.twist_failures);
        for (std::size_t j = 0; j <= n; ++j)
            check(T.degen[n][j], n, false, "s" + std::to_string(n) + "_" + std::to_string(j),
                  rep.failures);
    }
    for (std::size_t n = 0; n <= T.truncation; ++n)
        if (!detail::equivariant(E.comonad, T.tau[n], E.rho[n], E.rho[n]))
            rep.twist_failures.push_back("t" + std::to_string(n) + " is not equivariant");
    return rep;
}

enum class ApproxStage { comonad_stage, cyclic_stage };

// eta[n] embeds the stage's degree-n space into the input module's one; the
// restricted family lives in T, with rho carried along when available.
template <class F>
struct ApproximationResult {
    ApproxStage stage;
    std::vector<Matrix<F>> eta;
    ParaCyclicModule<F> T;
    std::optional<ComonadSpec<F>> comonad;
    std::vector<Matrix<F>> rho;
};

namespace detail {

// Restricts every operator of T to the given subspaces and re-derives dims.
template <class F>
ParaCyclicModule<F> restrict_family(const ParaCyclicModule<F>& T, const std::vector<Matrix<F>>& eta,
                                    const std::string& stage) {
    ParaCyclicModule<F> R;
    R.orientation = T.orientation;
    R.kind = T.kind;
    R.truncation = T.truncation;
    R.provenance = T.provenance + ", " + stage;
    for (std::size_t n = 0; n <= T.truncation; ++n) R.dims.push_back(eta[n].cols());
    bool cocyclic = T.orientation == Orientation::cocyclic;
    for (std::size_t n = 0; n + 1 <= T.truncation; ++n) {
        const auto& src = cocyclic ? eta[n] : eta[n + 1];
        const auto& tgt = cocyclic ? eta[n + 1] : eta[n];
        R.face.emplace_back();
        for (std::size_t i = 0; i <= n + 1; ++i)
            R.face.back().push_back(restrict_map(T.face[n][i], src, tgt,
                                                 "d" + std::to_string(n) + "_" + std::to_string(i)));
        R.degen.emplace_back();
        for (std::size_t j = 0; j <= n; ++j)
            R.degen.back().push_back(restrict_map(T.degen[n][j], tgt, src,
                                                  "s" + std::to_string(n) + "_" + std::to_string(j)));
    }
    for (std::size_t n = 0; n <= T.truncation; ++n)
        R.tau.push_back(restrict_map(T.tau[n], eta[n], eta[n], "t" + std::to_string(n)));
    return R;
}

template <class F>
std::vector<Matrix<F>> restrict_rho(const ComonadSpec<F>& c, const std::vector<Matrix<F>>& rho,
                                    const std::vector<Matrix<F>>& eta) {
    auto idb = Matrix<F>::identity(c.B.field, c.B.dim);
    std::vector<Matrix<F>> out;
    out.reserve(rho.size());
    for (std::size_t n = 0; n < rho.size(); ++n) {
        auto r = c.mode == ComonadMode::module_side
                     ? solve(eta[n], rho[n] * kronecker(idb, eta[n]))
                     : solve(kronecker(idb, eta[n]), rho[n] * eta[n]);
        if (!r)
            throw CertificationError("degree " + std::to_string(n) +
                                     " structure map does not restrict to the subspace");
        out.push_back(std::move(*r));
    }
    return out;
}

}  // namespace detail

template <class F>
ApproximationResult<F> comonad_approximation(const EquivariantParaCyclic<F>& E) {
    auto pre = detect_pseudo_para(E);
    if (!pre.ok()) throw CertificationError("input is not pseudo-para-(co)cyclic:\n" + pre.text());
    const auto& T = E.T;
    const auto& B = E.comonad.B;
    const F& K = B.field;
    auto idb = Matrix<F>::identity(K, B.dim);
    bool module_side = E.comonad.mode == ComonadMode::module_side;
    bool cocyclic = T.orientation == Orientation::cocyclic;

    // E_1 at each degree: the twist pair, plus the top-face pair in the
    // cocyclic orientation; the remaining exponents come from the invariant
    // subspace fixpoint under the twist itself.
    std::vector<Matrix<F>> eta;
    for (std::size_t n = 0; n <= T.truncation; ++n) {
        Subspace<F> e(T.dims[n], Matrix<F>::identity(K, T.dims[n]));
        if (module_side) {
            auto acts = detail::action_slices(K, B.dim, E.rho[n]);
            std::vector<Matrix<F>> lhs, rhs;
            for (const auto& a : acts) {
                lhs.push_back(T.tau[n] * a);
                rhs.push_back(a * T.tau[n]);
            }
            e = detail::commutant_space(K, lhs, rhs);
            if (cocyclic && n + 1 <= T.truncation) {
                auto up = detail::action_slices(K, B.dim, E.rho[n + 1]);
                for (std::size_t i = 0; i < acts.size(); ++i)
                    e = intersect(e, equalizer(T.face[n][n + 1] * acts[i],
                                               up[i] * T.face[n][n + 1]));
            }
        } else {
            e = equalizer(E.rho[n] * T.tau[n], kronecker(idb, T.tau[n]) * E.rho[n]);
            if (cocyclic && n + 1 <= T.truncation)
                e = intersect(e, equalizer(E.rho[n + 1] * T.face[n][n + 1],
                                           kronecker(idb, T.face[n][n + 1]) * E.rho[n]));
        }
        eta.push_back(largest_invariant_subspace(e, {T.tau[n]}).basis);
    }

    auto R = detail::restrict_family(T, eta, "comonad approximation");
    auto rho_r = detail::restrict_rho(E.comonad, E.rho, eta);
    EquivariantParaCyclic<F> restricted{std::move(R), E.comonad, std::move(rho_r)};
    auto post = detect_pseudo_para(restricted);
    if (!post.fully_equivariant())
        throw CertificationError("restricted family is not equivariant:\n" + post.text());
    certify_relations(restricted.T).require_ok("comonad approximation output");
    return ApproximationResult<F>{ApproxStage::comonad_stage, std::move(eta),
                                  std::move(restricted.T), E.comonad, std::move(restricted.rho)};
}

template <class F>
ApproximationResult<F> cyclic_approximation(const ParaCyclicModule<F>& T,
                                            const std::optional<ComonadSpec<F>>& comonad = {},
                                            const std::vector<Matrix<F>>& rho = {}) {
    const F& K = T.tau.front().field();
    certify_relations(T).require_ok("cyclic approximation input");

    std::vector<Matrix<F>> omega;
    for (std::size_t n = 0; n <= T.truncation; ++n)
        omega.push_back(detail::matrix_power(T.tau[n], n + 1));
    bool cocyclic = T.orientation == Orientation::cocyclic;
    for (std::size_t n = 0; n + 1 <= T.truncation; ++n) {
        const auto& lo = omega[n];
        const auto& hi = omega[n + 1];
        for (std::size_t i = 0; i <= n + 1; ++i) {
            const auto& f = T.face[n][i];
            if (!(cocyclic ? f * lo == hi * f : f * hi == lo * f))
                throw CertificationError("canonical endomorphism does not commute with d" +
                                         std::to_string(n) + "_" + std::to_string(i));
        }
        for (std::size_t j = 0; j <= n; ++j) {
            const auto& s = T.degen[n][j];
            if (!(cocyclic ? s * hi == lo * s : s * lo == hi * s))
                throw CertificationError("canonical endomorphism does not commute with s" +
                                         std::to_string(n) + "_" + std::to_string(j));
        }
    }

    std::vector<Matrix<F>> eta;
    for (std::size_t n = 0; n <= T.truncation; ++n)
        eta.push_back(equalizer(omega[n], Matrix<F>::identity(K, T.dims[n])).basis);

    auto R = detail::restrict_family(T, eta, "cyclic approximation");
    std::vector<Matrix<F>> rho_r;
    if (!rho.empty()) {
        rho_r = detail::restrict_rho(*comonad, rho, eta);
        EquivariantParaCyclic<F> restricted{R, *comonad, rho_r};
        auto post = detect_pseudo_para(restricted);
        if (!post.fully_equivariant())
            throw CertificationError("restricted family is not equivariant:\n" + post.text());
        R = std::move(restricted.T);
    }
    certify_relations(R, CategoryFlavor::Lambda).require_ok("cyclic approximation output");
    return ApproximationResult<F>{ApproxStage::cyclic_stage, std::move(eta), std::move(R), comonad,
                                  std::move(rho_r)};
}

template <class F>
ApproximationResult<F> cyclic_approximation(const ApproximationResult<F>& prev) {
    return cyclic_approximation(prev.T, prev.comonad, prev.rho);
}

// build_T -> comonad approximation -> cyclic approximation; eta in the result
// embeds into the ambient T_n directly.
template <class F>
ApproximationResult<F> full_pipeline(const BialgebraSpec<F>& B, const SymmetryDatum<F>& X,
                                     const CoefficientDatum<F>& M, std::size_t N) {
    auto v = validate_symmetry(B, X, M);
    if (!v.ok()) throw ValidationError(v.text());
    auto w = build_transposition(X.kind, B, M, X);
    auto T = algebra_kind(X.kind) ? build_T_algebra(X, M, w, N) : build_T_coalgebra(X, M, w, N);
    auto stage1 = comonad_approximation(equip_diagonal(std::move(T), B, X, M));
    auto stage2 = cyclic_approximation(stage1);
    for (std::size_t n = 0; n <= N; ++n) stage2.eta[n] = stage1.eta[n] * stage2.eta[n];
    return stage2;
}

// Unique psi with eta * psi = phi, when phi lands in the included subspace.
template <class F>
std::optional<Matrix<F>> factor_through_inclusion(const Matrix<F>& eta, const Matrix<F>& phi) {
    if (eta.rows() != phi.rows())
        throw DimensionError("factorization ambient mismatch: " + eta.shape_str() + " vs " +
                             phi.shape_str());
    return solve(eta, phi);
}

}  // namespace hopfcyclic

#endif
