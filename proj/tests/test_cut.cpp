#include <gtest/gtest.h>

#include "cutbell/cut.hpp"

using namespace cutbell;

namespace {

GraphPtr kn(int n) { return make_graph(complete_graph(n)); }
GraphPtr k1mm(int m) { return make_graph(complete_tripartite_1mm(m).first); }

std::string bits(const CutVector& c) {
    std::string s;
    for (std::size_t e = 0; e < c.graph->edge_count(); ++e) s += c.bit(e) ? '1' : '0';
    return s;
}

} // namespace

TEST(Cut, CutVector) {
    EXPECT_EQ(bits(cut_vector(kn(3), {1})), "101");
    EXPECT_EQ(bits(cut_vector(kn(4), {})), "000000");
    EXPECT_EQ(bits(cut_vector(k1mm(2), {1})), "10001100");
}

TEST(Cut, Enumerate) {
    auto cuts = enumerate_cut_vectors(kn(3));
    ASSERT_EQ(cuts.size(), 4u);
    EXPECT_EQ(bits(cuts[0]), "000");
    EXPECT_EQ(bits(cuts[1]), "101");
    EXPECT_EQ(bits(cuts[2]), "011");
    EXPECT_EQ(bits(cuts[3]), "110");
    EXPECT_EQ(enumerate_cut_vectors(k1mm(2)).size(), 16u);
    EXPECT_EQ(enumerate_cut_vectors(kn(1)).size(), 1u);
}

TEST(Cut, ComplementSymmetry) {
    for (int n = 1; n <= 10; ++n) {
        auto g = kn(n);
        const std::uint64_t full = (std::uint64_t(1) << n) - 1;
        for (std::uint64_t s = 0; s <= full; s += (n > 8 ? 7 : 1))
            EXPECT_EQ(cut_vector_from_mask(g, s), cut_vector_from_mask(g, full ^ s));
    }
}

TEST(Cut, EnumerationLimit) {
    setenv("CUTBELL_LIMIT", "5", 1);
    EXPECT_THROW(enumerate_cut_vectors(kn(6)), Error);
    unsetenv("CUTBELL_LIMIT");
    EXPECT_NO_THROW(enumerate_cut_vectors(kn(6)));
}

TEST(Cut, Evaluate) {
    auto g = kn(3);
    auto tri = make_inequality(g, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}}, 0);
    EXPECT_EQ(evaluate(tri, cut_vector(g, {0})), 0);
    EXPECT_EQ(evaluate(tri, cut_vector(g, {1})), 0);
    EXPECT_EQ(evaluate(tri, RationalVector{0, 0, 0}), 0);
    EXPECT_THROW(evaluate(tri, RationalVector{0, 0}), Error);
}

TEST(Cut, FacetStatusExamples) {
    auto g = k1mm(2);
    auto chsh = make_inequality(g, {{1, 4, 1}, {1, 3, -1}, {2, 3, -1}, {2, 4, -1}}, 0);
    auto r = facet_status(chsh);
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.is_facet);
    EXPECT_EQ(r.affine_root_rank, 7);

    auto nf = make_inequality(g, {{0, 1, 1}, {0, 2, -1}, {1, 4, -1}, {2, 4, -1}}, 0);
    r = facet_status(nf);
    EXPECT_TRUE(r.valid);
    EXPECT_FALSE(r.is_facet);

    auto bad = make_inequality(g, {{0, 1, 1}}, 0);
    r = facet_status(bad);
    EXPECT_FALSE(r.valid);
    EXPECT_FALSE(r.is_facet);
}

TEST(Cut, ConeValidity) {
    auto g = kn(3);
    EXPECT_TRUE(cone_validity(make_inequality(g, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}}, 0)));
    auto per = make_inequality(g, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, 2);
    EXPECT_FALSE(cone_validity(per));
    EXPECT_TRUE(facet_status(per).valid);
    EXPECT_FALSE(facet_status(per).homogeneous_valid);
    EXPECT_FALSE(cone_validity(make_inequality(kn(2), {{0, 1, 1}}, 0)));
}

TEST(Cut, FullDimensional) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::vector<std::int64_t>> pts;
        auto g = kn(n);
        for (const auto& c : enumerate_cut_vectors(g)) pts.push_back(c.to_int());
        EXPECT_EQ(affine_rank(pts), static_cast<long>(g->edge_count()));
    }
    for (int m = 1; m <= 4; ++m) {
        std::vector<std::vector<std::int64_t>> pts;
        auto g = k1mm(m);
        for (const auto& c : enumerate_cut_vectors(g)) pts.push_back(c.to_int());
        EXPECT_EQ(affine_rank(pts), static_cast<long>(g->edge_count()));
    }
}

TEST(Cut, RationalCoefficientsAndHugeCoefficients) {
    auto g = kn(3);
    auto half = make_inequality(g, {{0, 1, Rational(1, 2)}, {0, 2, Rational(-1, 2)}, {1, 2, Rational(-1, 2)}}, 0);
    EXPECT_TRUE(facet_status(half).is_facet);
    BigInt huge = BigInt(1) << 80;
    auto big = make_inequality(g, {{0, 1, Rational(huge)}, {0, 2, Rational(-huge)}, {1, 2, Rational(-huge)}}, 0);
    EXPECT_TRUE(facet_status(big).is_facet);
    auto big2 = make_inequality(g, {{0, 1, Rational(huge)}, {0, 2, Rational(-huge + 1)}, {1, 2, Rational(-huge)}}, 0);
    EXPECT_FALSE(facet_status(big2).valid);
}

TEST(Cut, TextRoundTrip) {
    auto g = k1mm(2);
    auto f = make_inequality(g, {{1, 4, Rational(3, 2)}, {1, 3, -1}}, Rational(-1, 3));
    EXPECT_EQ(format_inequality(f), "-1/3 | 1-3:-1 1-4:3/2");
    EXPECT_EQ(parse_inequality(g, format_inequality(f)), f);
    EXPECT_THROW(parse_inequality(g, "0 | 1-2:1"), Error);
    EXPECT_THROW(parse_inequality(g, "0 1-3:1"), Error);
}
