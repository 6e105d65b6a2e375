#include <gtest/gtest.h>

#include <random>

#include "cutbell/cut.hpp"
#include "cutbell/linalg.hpp"

using namespace cutbell;

namespace {

// Plain rational Gaussian elimination, used as an oracle.
std::size_t naive_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t p = rank;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(rank, j));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(rank, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t true_rank) {
    std::uniform_int_distribution<int> d(-4, 4);
    RationalMatrix basis(true_rank, c), mix(r, true_rank), out(r, c);
    for (auto& e : basis.entries) e = Rational(d(rng), 1 + std::abs(d(rng)));
    for (auto& e : mix.entries) e = d(rng);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t t = 0; t < true_rank; ++t) out.at(i, j) += mix.at(i, t) * basis.at(t, j);
    return out;
}

} // namespace

TEST(Kernel, RankExamples) {
    RationalMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    EXPECT_EQ(rational_rank(id), 3u);

    RationalMatrix p(2, 2);
    p.at(0, 0) = 1; p.at(0, 1) = 2; p.at(1, 0) = 2; p.at(1, 1) = 4;
    EXPECT_EQ(rational_rank(p), 1u);

    auto g = make_graph(complete_tripartite_1mm(2).first);
    std::vector<RationalVector> rows;
    for (const auto& c : enumerate_cut_vectors(g)) {
        auto x = c.to_rational();
        x.push_back(1);
        rows.push_back(x);
    }
    EXPECT_EQ(rational_rank(RationalMatrix::from_rows(rows, 9)), 9u);
}

TEST(Kernel, RankMatchesOracleOnRandomMatrices) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
        std::size_t tr = rng() % (std::min(r, c) + 1);
        auto m = random_matrix(rng, r, c, tr);
        const auto expect = naive_rank(m);
        EXPECT_EQ(rational_rank(m), expect);
        // transposition and permutation invariance
        RationalMatrix t(c, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) t.at(j, i) = m.at(i, j);
        EXPECT_EQ(rational_rank(t), expect);
        std::vector<std::size_t> perm(r);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        RationalMatrix pm(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) pm.at(i, j) = m.at(perm[i], j);
        EXPECT_EQ(rational_rank(pm), expect);
    }
}

TEST(Kernel, ModularCollisionIsCertified) {
    // Rows independent over Q but dependent modulo 2^31 - 1.
    const std::int64_t p = 2147483647;
    std::vector<std::vector<std::int64_t>> rows = {{1, 0, 0}, {0, 1, 0}, {p, p, 0}, {1, 1, p}};
    EXPECT_EQ(integer_rank(rows, 3), 3u);
    std::vector<std::vector<BigInt>> brows = {{BigInt(1), BigInt(p)}, {BigInt(p), BigInt(1)}};
    EXPECT_EQ(integer_rank(brows, 2), 2u);
}

TEST(Kernel, NullSpaceIsExact) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
        std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(c));
        for (auto& row : m)
            for (auto& x : row) x = d(rng);
        if (trial % 3 == 0 && r > 1) m[r - 1] = m[0];
        auto ns = detail::integer_null_space(m, c);
        RationalMatrix rm(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) rm.at(i, j) = Rational(m[i][j]);
        EXPECT_EQ(ns.size(), c - naive_rank(rm));
        for (const auto& v : ns)
            for (const auto& row : m) {
                BigInt s = 0;
                for (std::size_t j = 0; j < c; ++j) s += row[j] * v[j];
                EXPECT_EQ(s, 0);
            }
    }
}

TEST(Kernel, AffineRank) {
    EXPECT_EQ(affine_rank(std::vector<RationalVector>{}), -1);
    EXPECT_EQ(affine_rank(std::vector<RationalVector>{{0, 0}}), 0);
    EXPECT_EQ(affine_rank(std::vector<RationalVector>{{0, 0}, {1, 0}, {0, 1}}), 2);
    std::vector<RationalVector> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(affine_rank(pts), 3);
    pts.push_back({Rational(1, 4), Rational(1, 4), Rational(1, 4)});
    EXPECT_EQ(affine_rank(pts), 3);
}

TEST(Kernel, PrimitiveNormalize) {
    auto g = make_graph(complete_graph(3));
    auto f = primitive_normalize(make_inequality(g, {{0, 1, 2}, {0, 2, -2}}, 4));
    EXPECT_EQ(format_inequality(f), "2 | 0-1:1 0-2:-1");
    f = primitive_normalize(make_inequality(g, {{0, 1, Rational(1, 2)}}, 0));
    EXPECT_EQ(format_inequality(f), "0 | 0-1:1");
    f = primitive_normalize(make_inequality(g, {{0, 1, 3}, {1, 2, -6}}, 0));
    EXPECT_EQ(format_inequality(f), "0 | 0-1:1 1-2:-2");
    EXPECT_EQ(primitive_normalize(f), f);
    auto scaled = f;
    for (auto& c : scaled.coeffs) c *= Rational(7, 3);
    scaled.rhs *= Rational(7, 3);
    EXPECT_EQ(primitive_normalize(scaled), f);
    EXPECT_THROW(primitive_normalize(LinearInequality(g)), Error);
}

TEST(Kernel, RationalText) {
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rational("5")), "5");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
}
