#include <gtest/gtest.h>

#include <set>

#include "cutbell/hull.hpp"
#include "cutbell/transforms.hpp"

using namespace cutbell;

namespace {

std::vector<std::vector<std::int64_t>> cut_points(const GraphPtr& g) {
    std::vector<std::vector<std::int64_t>> pts;
    for (const auto& c : enumerate_cut_vectors(g)) pts.push_back(c.to_int());
    return pts;
}

LinearInequality as_inequality(const GraphPtr& g, const HRow& row) { return LinearInequality(g, row.coeffs, row.rhs); }

} // namespace

TEST(Hull, Triangle) {
    auto g = make_graph(complete_graph(3));
    auto h = facet_enumeration(cut_points(g));
    EXPECT_EQ(h.affine_dimension, 3);
    EXPECT_TRUE(h.equalities.empty());
    ASSERT_EQ(h.facets.size(), 4u);
    std::set<std::string> got;
    for (const auto& f : h.facets) got.insert(format_inequality(as_inequality(g, f)));
    std::set<std::string> expect = {"0 | 0-1:-1 0-2:-1 1-2:1", "0 | 0-1:-1 0-2:1 1-2:-1", "0 | 0-1:1 0-2:-1 1-2:-1",
                                    "2 | 0-1:1 0-2:1 1-2:1"};
    EXPECT_EQ(got, expect);
}

TEST(Hull, CutPolytopeCounts) {
    const std::size_t expect[] = {0, 0, 2, 4, 16, 56, 368};
    for (int n = 2; n <= 6; ++n) {
        auto g = make_graph(complete_graph(n));
        auto h = facet_enumeration(cut_points(g));
        EXPECT_EQ(h.facets.size(), expect[n]) << n;
        for (const auto& f : h.facets) {
            auto r = facet_status(as_inequality(g, f));
            EXPECT_TRUE(r.is_facet);
            EXPECT_GE(r.root_count, g->edge_count());
        }
    }
}

TEST(Hull, Cut5MatchesSymmetryOrbits) {
    // Independent count: orbits of the triangle and pentagon under switching and S_5.
    auto g = make_graph(complete_graph(5));
    std::set<std::pair<RationalVector, Rational>> orbit;
    std::vector<LinearInequality> reps = {
        make_inequality(g, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}}, 0),
        make_inequality(g, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {0, 3, -1}, {1, 3, -1}, {2, 3, -1}, {0, 4, -1},
                            {1, 4, -1}, {2, 4, -1}},
                        0)};
    auto perm = Permutation::identity(5);
    do {
        for (const auto& r : reps) {
            auto p = permute(r, perm);
            for (std::uint64_t s = 0; s < 16; ++s) {
                std::vector<int> set;
                for (int v = 1; v < 5; ++v)
                    if ((s >> (v - 1)) & 1) set.push_back(v);
                auto f = switching(p, set);
                orbit.insert({f.coeffs, f.rhs});
            }
        }
    } while (std::next_permutation(perm.image.begin(), perm.image.end()));
    auto h = facet_enumeration(cut_points(g));
    std::set<std::pair<RationalVector, Rational>> hull;
    for (const auto& f : h.facets) hull.insert({f.coeffs, f.rhs});
    EXPECT_EQ(orbit, hull);
}

TEST(Hull, TextRoundTrip) {
    auto g = make_graph(complete_graph(4));
    auto h = facet_enumeration(cut_points(g));
    std::vector<std::string> labels;
    for (auto [u, v] : g->edges()) labels.push_back(std::to_string(u) + "-" + std::to_string(v));
    auto back = parse_hrep(format_hrep(h, labels));
    EXPECT_EQ(back.facets, h.facets);
    EXPECT_EQ(back.equalities, h.equalities);
}

TEST(Hull, LowerDimensionalAndRational) {
    // square in the plane z = 1/2 inside R^3
    std::vector<RationalVector> pts = {{0, 0, Rational(1, 2)}, {1, 0, Rational(1, 2)}, {0, 1, Rational(1, 2)},
                                       {1, 1, Rational(1, 2)}, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
    auto h = facet_enumeration(pts);
    EXPECT_EQ(h.affine_dimension, 2);
    ASSERT_EQ(h.equalities.size(), 1u);
    EXPECT_EQ(h.equalities[0].coeffs, (RationalVector{0, 0, 2}));
    EXPECT_EQ(h.equalities[0].rhs, 1);
    EXPECT_EQ(h.facets.size(), 4u);
    for (const auto& f : h.facets)
        for (const auto& p : pts) {
            Rational s = 0;
            for (std::size_t j = 0; j < 3; ++j) s += f.coeffs[j] * p[j];
            EXPECT_LE(s, f.rhs);
        }
    EXPECT_EQ(facet_enumeration(std::vector<RationalVector>{{1, 2}}).facets.size(), 0u);
    EXPECT_EQ(facet_enumeration(std::vector<RationalVector>{{1, 2}, {3, 4}}).facets.size(), 2u);
}

TEST(Hull, ResourceLimit) {
    auto g = make_graph(complete_graph(6));
    HullOptions opt;
    opt.max_rays = 50;
    try {
        facet_enumeration(cut_points(g), opt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
    }
}
