#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hopfcyclic/field.hpp"
#include "hopfcyclic/matrix.hpp"
#include "hopfcyclic/subspace.hpp"

using namespace hopfcyclic;

namespace {

using MQ = Matrix<Rationals>;
using SQ = Subspace<Rationals>;

const Rationals QQ;

MQ mq(const std::vector<std::vector<long>>& rows) { return MQ::from_rows(QQ, rows); }

MQ random_mq(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> d(-3, 3);
    MQ m(QQ, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, QQ.from_long(d(rng)));
    return m;
}

SQ random_subspace(std::mt19937& rng, std::size_t ambient) {
    std::uniform_int_distribution<std::size_t> k(0, ambient);
    return image(random_mq(rng, ambient, k(rng)));
}

} // namespace

TEST_CASE("kernel basics") {
    REQUIRE(kernel(MQ(QQ, 2, 2)).dim() == 2);
    REQUIRE(kernel(MQ::identity(QQ, 3)).dim() == 0);

    SQ k = kernel(mq({{1, 1}, {1, 1}}));
    REQUIRE(k.dim() == 1);
    REQUIRE(k == SQ(2, mq({{1}, {-1}})));
}

TEST_CASE("kernel of degenerate shapes") {
    REQUIRE(kernel(MQ(QQ, 0, 3)).dim() == 3);
    REQUIRE(kernel(MQ(QQ, 3, 0)).dim() == 0);
}

TEST_CASE("equalizer basics") {
    MQ f = mq({{1, 2}, {3, 4}});
    REQUIRE(equalizer(f, f) == SQ::full(QQ, 2));

    REQUIRE(equalizer(mq({{1, 0}, {0, 0}}), MQ::identity(QQ, 2)) == SQ(2, mq({{1}, {0}})));

    SQ diag = equalizer(mq({{0, 1}, {1, 0}}), MQ::identity(QQ, 2));
    REQUIRE(diag.dim() == 1);
    REQUIRE(diag == SQ(2, mq({{1}, {1}})));

    REQUIRE_THROWS_AS(equalizer(MQ(QQ, 2, 2), MQ(QQ, 2, 3)), DimensionError);
}

TEST_CASE("equalizer is symmetric and both maps agree on it") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        MQ f = random_mq(rng, 4, 5);
        MQ g = random_mq(rng, 4, 5);
        SQ e = equalizer(f, g);
        REQUIRE(e == equalizer(g, f));
        REQUIRE((f * e.basis) == (g * e.basis));
    }
}

TEST_CASE("intersect basics") {
    SQ e0(2, mq({{1}, {0}}));
    SQ e1(2, mq({{0}, {1}}));
    REQUIRE(intersect(e0, e1).dim() == 0);

    SQ u(3, mq({{1, 0}, {0, 1}, {1, 0}}));
    SQ v(3, mq({{1}, {1}, {1}}));
    REQUIRE(intersect(u, v) == v);

    REQUIRE_THROWS_AS(intersect(e0, v), DimensionError);
}

TEST_CASE("intersect is commutative, associative, idempotent") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        SQ u = random_subspace(rng, 5);
        SQ v = random_subspace(rng, 5);
        SQ w = random_subspace(rng, 5);
        REQUIRE(intersect(u, u) == u);
        REQUIRE(intersect(u, v) == intersect(v, u));
        REQUIRE(intersect(u, intersect(v, w)) == intersect(intersect(u, v), w));
        REQUIRE(intersect(u, v).dim() <= std::min(u.dim(), v.dim()));
    }
}

TEST_CASE("subspace equality is independent of the spanning set") {
    SQ a(2, mq({{1, 0}, {0, 1}}));
    SQ b(2, mq({{1, 1}, {1, -1}}));
    REQUIRE(a == b);
    REQUIRE(a == SQ::full(QQ, 2));
}

TEST_CASE("preimage basics") {
    MQ f = mq({{1, 0}, {0, 0}});
    REQUIRE(preimage(f, SQ::full(QQ, 2)) == SQ::full(QQ, 2));
    REQUIRE(preimage(MQ::identity(QQ, 2), SQ(2, mq({{0}, {1}}))) == SQ(2, mq({{0}, {1}})));
    REQUIRE(preimage(f, SQ(2, mq({{0}, {1}}))) == SQ(2, mq({{0}, {1}})));
    REQUIRE_THROWS_AS(preimage(MQ(QQ, 3, 2), SQ::full(QQ, 2)), DimensionError);
}

TEST_CASE("preimage properties on random data") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        MQ f = random_mq(rng, 4, 4);
        SQ v = random_subspace(rng, 4);
        SQ pre = preimage(f, v);
        REQUIRE(v.contains(f * pre.basis));
        REQUIRE(pre.contains(kernel(f)));
    }
}

TEST_CASE("kronecker identities") {
    REQUIRE(kronecker(MQ::identity(QQ, 2), MQ::identity(QQ, 3)) == MQ::identity(QQ, 6));
    MQ f = mq({{1, 2}, {3, 4}, {5, 6}});
    REQUIRE(kronecker(f, MQ::identity(QQ, 1)) == f);
    REQUIRE(kronecker(MQ::identity(QQ, 1), f) == f);
}

TEST_CASE("kronecker functoriality over F5") {
    PrimeField F5(5);
    std::mt19937 rng(14);
    std::uniform_int_distribution<long> d(0, 4);
    auto rand2 = [&]() {
        Matrix<PrimeField> m(F5, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m.set(i, j, F5.from_long(d(rng)));
        return m;
    };
    for (int trial = 0; trial < 25; ++trial) {
        auto f = rand2(), g = rand2(), h = rand2(), k = rand2();
        REQUIRE((kronecker(f, g) * kronecker(h, k)) == kronecker(f * h, g * k));
    }
}

TEST_CASE("rank plus nullity equals column count") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(0, 6);
        MQ m = random_mq(rng, sz(rng), sz(rng));
        REQUIRE(rank(m) + kernel(m).dim() == m.cols());
        REQUIRE(image(m).dim() == rank(m));
    }
}

TEST_CASE("solve finds solutions and reports inconsistency") {
    MQ a = mq({{1, 0}, {0, 0}});
    REQUIRE_FALSE(solve(a, mq({{0}, {1}})).has_value());
    auto x = solve(a, mq({{3}, {0}}));
    REQUIRE(x.has_value());
    REQUIRE((a * *x) == mq({{3}, {0}}));

    std::mt19937 rng(16);
    for (int trial = 0; trial < 10; ++trial) {
        MQ m = random_mq(rng, 4, 3);
        MQ b = m * random_mq(rng, 3, 2);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        REQUIRE((m * *sol) == b);
    }
}

TEST_CASE("largest invariant subspace basics") {
    SQ seed(2, mq({{1}, {0}}));
    REQUIRE(largest_invariant_subspace(seed, {MQ::identity(QQ, 2)}) == seed);
    REQUIRE(largest_invariant_subspace(seed, {mq({{0, 1}, {1, 0}})}).dim() == 0);
    REQUIRE(largest_invariant_subspace(SQ(2, mq({{1}, {1}})), {mq({{1, 0}, {0, 2}})}).dim() == 0);
    REQUIRE_THROWS_AS(largest_invariant_subspace(seed, {MQ(QQ, 3, 2)}), DimensionError);
}

TEST_CASE("largest invariant subspace output is invariant and inside the seed") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        SQ seed = random_subspace(rng, 4);
        std::vector<MQ> ops{random_mq(rng, 4, 4), random_mq(rng, 4, 4)};
        SQ v = largest_invariant_subspace(seed, ops);
        REQUIRE(seed.contains(v));
        for (const auto& t : ops) REQUIRE(v.contains(t * v.basis));
    }
}

namespace {

using MF2 = Matrix<PrimeField>;

std::set<std::uint32_t> span_f2(const std::vector<std::uint32_t>& gens) {
    std::set<std::uint32_t> s{0};
    for (auto g : gens) {
        std::set<std::uint32_t> next = s;
        for (auto v : s) next.insert(v ^ g);
        s = next;
    }
    return s;
}

std::uint32_t apply_f2(const MF2& op, std::uint32_t v) {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < op.cols(); ++j) {
        if (!(v & (1u << j))) continue;
        for (const auto& [r, val] : op.column(j)) out ^= (1u << r);
    }
    return out;
}

std::set<std::uint32_t> subspace_elements_f2(const Subspace<PrimeField>& s) {
    std::vector<std::uint32_t> gens;
    for (std::size_t j = 0; j < s.basis.cols(); ++j) {
        std::uint32_t g = 0;
        for (const auto& [r, val] : s.basis.column(j)) g |= (1u << r);
        gens.push_back(g);
    }
    return span_f2(gens);
}

} // namespace

TEST_CASE("largest invariant subspace agrees with brute force over F2") {
    PrimeField F2(2);
    const unsigned n = 3;

    std::vector<MF2> op_pool{
        MF2::from_rows(F2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
        MF2::from_rows(F2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}),
        MF2::from_rows(F2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
        MF2::from_rows(F2, {{1, 0, 0}, {0, 0, 0}, {1, 0, 1}}),
    };

    // every subspace of F2^3 as a set of bitmask vectors, keyed by that set
    std::vector<std::set<std::uint32_t>> all_subspaces;
    {
        std::set<std::set<std::uint32_t>> seen;
        for (std::uint32_t mask = 0; mask < (1u << ((1u << n) - 1)); ++mask) {
            std::vector<std::uint32_t> gens;
            for (std::uint32_t v = 1; v < (1u << n); ++v)
                if (mask & (1u << (v - 1))) gens.push_back(v);
            auto sp = span_f2(gens);
            if (seen.insert(sp).second) all_subspaces.push_back(sp);
        }
    }

    auto subspace_from_elements = [&](const std::set<std::uint32_t>& elems) {
        MF2 basis(F2, n, elems.size());
        std::size_t j = 0;
        for (auto v : elems) {
            for (unsigned r = 0; r < n; ++r)
                if (v & (1u << r)) basis.set(r, j, F2.one());
            ++j;
        }
        return Subspace<PrimeField>(n, basis);
    };

    std::mt19937 rng(18);
    std::uniform_int_distribution<std::size_t> pick_space(0, all_subspaces.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_op(0, op_pool.size() - 1);

    for (int trial = 0; trial < 40; ++trial) {
        const auto& seed_set = all_subspaces[pick_space(rng)];
        std::vector<MF2> ops{op_pool[pick_op(rng)], op_pool[pick_op(rng)]};

        std::set<std::uint32_t> best{0};
        for (const auto& cand : all_subspaces) {
            bool inside = true;
            for (auto v : cand)
                if (!seed_set.count(v)) { inside = false; break; }
            if (!inside) continue;
            bool invariant = true;
            for (const auto& op : ops) {
                for (auto v : cand)
                    if (!cand.count(apply_f2(op, v))) { invariant = false; break; }
                if (!invariant) break;
            }
            if (invariant && cand.size() > best.size()) best = cand;
        }

        auto got = largest_invariant_subspace(subspace_from_elements(seed_set), ops);
        REQUIRE(subspace_elements_f2(got) == best);
    }
}

TEST_CASE("inverse detects singularity") {
    auto a = mq({{2, 1}, {5, 3}});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    REQUIRE(*inv * a == MQ::identity(QQ, 2));
    REQUIRE(a * *inv == MQ::identity(QQ, 2));

    REQUIRE_FALSE(inverse(mq({{1, 2}, {2, 4}})).has_value());
    REQUIRE_FALSE(inverse(MQ(QQ, 1, 1)).has_value());
    REQUIRE_FALSE(inverse(MQ(QQ, 3, 3)).has_value());
    REQUIRE(inverse(MQ(QQ, 0, 0)).has_value());
    REQUIRE_THROWS_AS(inverse(MQ(QQ, 2, 3)), DimensionError);

    PrimeField F2(2);
    Matrix<PrimeField> b(F2, 2, 2);
    b.set(0, 0, 1);
    b.set(0, 1, 1);
    b.set(1, 0, 1);
    b.set(1, 1, 1);
    REQUIRE_FALSE(inverse(b).has_value());
    b.set(1, 1, 0);
    auto binv = inverse(b);
    REQUIRE(binv.has_value());
    REQUIRE(*binv * b == Matrix<PrimeField>::identity(F2, 2));
}

TEST_CASE("tensor permutation swaps factors") {
    std::mt19937 rng(19);
    MQ u = random_mq(rng, 2, 1);
    MQ v = random_mq(rng, 3, 1);
    MQ s = tensor_permutation(QQ, {2, 3}, {1, 0});
    REQUIRE((s * kronecker(u, v)) == kronecker(v, u));

    MQ r = tensor_permutation(QQ, {2, 2, 2}, {2, 0, 1});
    REQUIRE((r * r * r) == MQ::identity(QQ, 8));

    MQ w = random_mq(rng, 2, 1);
    REQUIRE((r * kronecker(kronecker(u, w), MQ(QQ, 2, 1) + w)) ==
            kronecker(kronecker(MQ(QQ, 2, 1) + w, u), w));

    REQUIRE_THROWS_AS(tensor_permutation(QQ, {2, 2}, {0, 0}), RangeError);
}

TEST_CASE("prime field arithmetic and validation") {
    REQUIRE_THROWS_AS(PrimeField(4), ConfigurationError);
    REQUIRE_THROWS_AS(PrimeField(1), ConfigurationError);
    REQUIRE_THROWS_AS(PrimeField(1ull << 61), ConfigurationError);

    PrimeField F7(7);
    for (std::uint64_t a = 1; a < 7; ++a) REQUIRE(F7.mul(a, F7.inv(a)) == 1);
    REQUIRE(F7.parse("3/4") == 6);
    REQUIRE(F7.parse("-1") == 6);
    REQUIRE(F7.from_long(-9) == 5);
    REQUIRE_THROWS_AS(F7.parse("3/7"), FormatError);
}

TEST_CASE("rational parsing") {
    REQUIRE(QQ.eq(QQ.parse("2/4"), mpq_class(1, 2)));
    REQUIRE(QQ.eq(QQ.parse("-6/3"), mpq_class(-2)));
    REQUIRE_THROWS_AS(QQ.parse("1/0"), FormatError);
    REQUIRE_THROWS_AS(QQ.parse("x"), FormatError);
    REQUIRE_THROWS_AS(QQ.parse("1.5"), FormatError);
    REQUIRE_THROWS_AS(QQ.parse(""), FormatError);
}
