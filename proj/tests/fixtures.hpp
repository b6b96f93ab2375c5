#ifndef HOPFCYCLIC_TEST_FIXTURES_HPP
#define HOPFCYCLIC_TEST_FIXTURES_HPP

#include <vector>

#include "hopfcyclic/hopf_data.hpp"

namespace fixtures {

using namespace hopfcyclic;

template <class F>
BialgebraSpec<F> bialgebra_k(const F& K) {
    auto one = Matrix<F>::identity(K, 1);
    return BialgebraSpec<F>{K, 1, one, one, one, one, one};
}

// Group algebra k[Z/m]: basis e_i = g^i, all generators group-like.
template <class F>
BialgebraSpec<F> group_algebra(const F& K, std::size_t m) {
    Matrix<F> mult(K, m, m * m);
    Matrix<F> comult(K, m * m, m);
    Matrix<F> counit(K, 1, m);
    Matrix<F> unit(K, m, 1);
    Matrix<F> antipode(K, m, m);
    unit.set(0, 0, K.one());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) mult.set((i + j) % m, i * m + j, K.one());
        comult.set(i * m + i, i, K.one());
        counit.set(0, i, K.one());
        antipode.set((m - i) % m, i, K.one());
    }
    return BialgebraSpec<F>{K, m, mult, unit, comult, counit, antipode};
}

template <class F>
BialgebraSpec<F> group_algebra_z2(const F& K) { return group_algebra(K, 2); }

template <class F>
BialgebraSpec<F> group_algebra_z3(const F& K) { return group_algebra(K, 3); }

// Basis (1, g, x, gx) with g^2 = 1, x^2 = 0, x g = -g x, x primitive over g.
template <class F>
BialgebraSpec<F> sweedler_h4(const F& K) {
    Matrix<F> mult(K, 4, 16);
    auto prod = [&](std::size_t i, std::size_t j, long c, std::size_t k) {
        if (c != 0) mult.set(k, i * 4 + j, K.from_long(c));
    };
    for (std::size_t j = 0; j < 4; ++j) prod(0, j, 1, j);
    for (std::size_t i = 1; i < 4; ++i) prod(i, 0, 1, i);
    prod(1, 1, 1, 0);
    prod(1, 2, 1, 3);
    prod(1, 3, 1, 2);
    prod(2, 1, -1, 3);
    prod(3, 1, -1, 2);

    Matrix<F> unit(K, 4, 1);
    unit.set(0, 0, K.one());

    Matrix<F> comult(K, 16, 4);
    comult.set(0 * 4 + 0, 0, K.one());
    comult.set(1 * 4 + 1, 1, K.one());
    comult.set(2 * 4 + 0, 2, K.one());
    comult.set(1 * 4 + 2, 2, K.one());
    comult.set(3 * 4 + 1, 3, K.one());
    comult.set(0 * 4 + 3, 3, K.one());

    Matrix<F> counit(K, 1, 4);
    counit.set(0, 0, K.one());
    counit.set(0, 1, K.one());

    Matrix<F> antipode(K, 4, 4);
    antipode.set(0, 0, K.one());
    antipode.set(1, 1, K.one());
    antipode.set(3, 2, K.from_long(-1));
    antipode.set(2, 3, K.one());

    return BialgebraSpec<F>{K, 4, mult, unit, comult, counit, antipode};
}

template <class F>
CoefficientDatum<F> trivial_comodule(const BialgebraSpec<F>& B) {
    return CoefficientDatum<F>{1, std::nullopt, B.unit};
}

template <class F>
CoefficientDatum<F> trivial_module(const BialgebraSpec<F>& B) {
    return CoefficientDatum<F>{1, B.counit, std::nullopt};
}

// One-dimensional comodule m -> e_idx (x) m; e_idx must be group-like.
template <class F>
CoefficientDatum<F> grouplike_comodule(const BialgebraSpec<F>& B, std::size_t idx) {
    Matrix<F> coact(B.field, B.dim, 1);
    coact.set(idx, 0, B.field.one());
    return CoefficientDatum<F>{1, std::nullopt, coact};
}

// One-dimensional module along an algebra character given by its value row.
template <class F>
CoefficientDatum<F> character_module(const BialgebraSpec<F>& B, const std::vector<long>& values) {
    Matrix<F> act(B.field, 1, B.dim);
    for (std::size_t j = 0; j < B.dim; ++j) act.set(0, j, B.field.from_long(values[j]));
    return CoefficientDatum<F>{1, act, std::nullopt};
}

// Sign character of k[Z/2].
template <class F>
CoefficientDatum<F> sign_module(const BialgebraSpec<F>& B) {
    return character_module(B, {1, -1});
}

// Character of Sweedler H4 with chi(g) = -1, chi(x) = chi(gx) = 0.
template <class F>
CoefficientDatum<F> h4_minus_module(const BialgebraSpec<F>& B) {
    return character_module(B, {1, -1, 0, 0});
}

// B as a coalgebra with the left regular action on itself.
template <class F>
SymmetryDatum<F> regular_mc(const BialgebraSpec<F>& B) {
    return SymmetryDatum<F>{SymmetryKind::MC, B.dim, std::nullopt, std::nullopt,
                            B.comult, B.counit, B.mult, std::nullopt};
}

// B as an algebra with the left regular action; not a module algebra in
// general (g . 1 = g but eps(g) 1 = 1), kept for negative tests.
template <class F>
SymmetryDatum<F> regular_ma(const BialgebraSpec<F>& B) {
    return SymmetryDatum<F>{SymmetryKind::MA, B.dim, B.mult, B.unit,
                            std::nullopt, std::nullopt, B.mult, std::nullopt};
}

// B as an algebra with the adjoint action b . x = b_(1) x S(b_(2)).
template <class F>
SymmetryDatum<F> adjoint_ma(const BialgebraSpec<F>& B) {
    const F& K = B.field;
    std::size_t d = B.dim;
    auto id1 = Matrix<F>::identity(K, d);
    auto id2 = Matrix<F>::identity(K, d * d);
    auto act = B.mult * kronecker(B.mult, id1) * kronecker(id2, *B.antipode) *
               kronecker(id1, tensor_permutation(K, {d, d}, {1, 0})) * kronecker(B.comult, id1);
    return SymmetryDatum<F>{SymmetryKind::MA, d, B.mult, B.unit,
                            std::nullopt, std::nullopt, act, std::nullopt};
}

// k[Z/2] acting on itself through the algebra automorphism g . y = -y.
template <class F>
SymmetryDatum<F> galois_ma(const BialgebraSpec<F>& B) {
    const F& K = B.field;
    Matrix<F> act(K, 2, 4);
    act.set(0, 0, K.one());
    act.set(1, 1, K.one());
    act.set(0, 2, K.one());
    act.set(1, 3, K.from_long(-1));
    return SymmetryDatum<F>{SymmetryKind::MA, 2, B.mult, B.unit,
                            std::nullopt, std::nullopt, act, std::nullopt};
}

// B as an algebra coacting on itself by comultiplication.
template <class F>
SymmetryDatum<F> regular_ca(const BialgebraSpec<F>& B) {
    return SymmetryDatum<F>{SymmetryKind::CA, B.dim, B.mult, B.unit,
                            std::nullopt, std::nullopt, std::nullopt, B.comult};
}

// Any algebra as an MA carrier with the trivial action through the counit.
template <class F>
SymmetryDatum<F> trivial_action_ma(const BialgebraSpec<F>& B, const Matrix<F>& mult,
                                   const Matrix<F>& unit) {
    std::size_t dx = mult.rows();
    auto act = kronecker(B.counit, Matrix<F>::identity(B.field, dx));
    return SymmetryDatum<F>{SymmetryKind::MA, dx, mult, unit, std::nullopt, std::nullopt, act, std::nullopt};
}

// Any algebra as a CA carrier with the trivial coaction through the unit.
template <class F>
SymmetryDatum<F> trivial_coaction_ca(const BialgebraSpec<F>& B, const Matrix<F>& mult,
                                     const Matrix<F>& unit) {
    std::size_t dx = mult.rows();
    auto coact = kronecker(B.unit, Matrix<F>::identity(B.field, dx));
    return SymmetryDatum<F>{SymmetryKind::CA, dx, mult, unit, std::nullopt, std::nullopt, std::nullopt, coact};
}

// Any coalgebra as a CC carrier with the trivial coaction.
template <class F>
SymmetryDatum<F> trivial_coaction_cc(const BialgebraSpec<F>& B, const Matrix<F>& comult,
                                     const Matrix<F>& counit) {
    std::size_t dx = comult.cols();
    auto coact = kronecker(B.unit, Matrix<F>::identity(B.field, dx));
    return SymmetryDatum<F>{SymmetryKind::CC, dx, std::nullopt, std::nullopt, comult, counit, std::nullopt, coact};
}

// k[x]/(x^2) as an algebra: basis (1, x).
template <class F>
std::pair<Matrix<F>, Matrix<F>> dual_numbers_algebra(const F& K) {
    Matrix<F> mult(K, 2, 4);
    mult.set(0, 0, K.one());
    mult.set(1, 1, K.one());
    mult.set(1, 2, K.one());
    Matrix<F> unit(K, 2, 1);
    unit.set(0, 0, K.one());
    return {mult, unit};
}

// k[x]/(x^2) as a coalgebra with x primitive: basis (1, x).
template <class F>
std::pair<Matrix<F>, Matrix<F>> dual_numbers_coalgebra(const F& K) {
    Matrix<F> comult(K, 4, 2);
    comult.set(0, 0, K.one());  // 1 -> 1 (x) 1
    comult.set(1, 1, K.one());  // x -> x (x) 1 + 1 (x) x
    comult.set(2, 1, K.one());
    Matrix<F> counit(K, 1, 2);
    counit.set(0, 0, K.one());
    return {comult, counit};
}

// Dual-numbers coalgebra over k[Z/2] with coaction 1 -> 1(x)1, x -> g(x)x.
template <class F>
SymmetryDatum<F> dualnum_cc(const BialgebraSpec<F>& B) {
    auto [comult, counit] = dual_numbers_coalgebra(B.field);
    Matrix<F> coact(B.field, B.dim * 2, 2);
    coact.set(0, 0, B.field.one());          // 1 -> e0 (x) 1
    coact.set(1 * 2 + 1, 1, B.field.one());  // x -> e1 (x) x
    return SymmetryDatum<F>{SymmetryKind::CC, 2, std::nullopt, std::nullopt, comult, counit, std::nullopt, coact};
}

// k[Z/2] with the involution g . y = 1 - y; a module structure, but not by
// algebra maps, so the diagonal compatibility fails.
template <class F>
SymmetryDatum<F> perturbed_ma(const BialgebraSpec<F>& B) {
    const F& K = B.field;
    Matrix<F> act(K, 2, 4);
    act.set(0, 0, K.one());
    act.set(1, 1, K.one());
    act.set(0, 2, K.one());
    act.set(0, 3, K.one());
    act.set(1, 3, K.from_long(-1));
    return SymmetryDatum<F>{SymmetryKind::MA, 2, B.mult, B.unit,
                            std::nullopt, std::nullopt, act, std::nullopt};
}

// k[Z/2] regular CA carrier with a coaction that satisfies the comodule
// axioms but is not an algebra map: rho(g) = 1(x)1 - g(x)1 + g(x)g.
template <class F>
SymmetryDatum<F> nonmultiplicative_ca(const BialgebraSpec<F>& B) {
    auto D = regular_ca(B);
    Matrix<F> coact(B.field, 4, 2);
    coact.set(0, 0, B.field.one());
    coact.set(0, 1, B.field.one());
    coact.set(2, 1, B.field.from_long(-1));
    coact.set(3, 1, B.field.one());
    D.coaction = coact;
    return D;
}

// k[Z/2] with comultiplication corrupted to Delta(g) = g (x) 1.
template <class F>
BialgebraSpec<F> corrupted_z2(const F& K) {
    auto B = group_algebra_z2(K);
    Matrix<F> comult(K, 4, 2);
    comult.set(0, 0, K.one());
    comult.set(1 * 2 + 0, 1, K.one());
    B.comult = comult;
    return B;
}

} // namespace fixtures

#endif
