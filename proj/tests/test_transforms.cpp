#include <gtest/gtest.h>

#include <random>

#include "cutbell/transforms.hpp"

using namespace cutbell;

namespace {

GraphPtr kn(int n) { return make_graph(complete_graph(n)); }
GraphPtr k1mm(int m) { return make_graph(complete_tripartite_1mm(m).first); }

LinearInequality random_inequality(std::mt19937& rng, const GraphPtr& g) {
    std::uniform_int_distribution<int> d(-3, 3);
    LinearInequality f(g);
    for (auto& c : f.coeffs) c = d(rng);
    f.rhs = d(rng) + 2;
    return f;
}

Permutation random_permutation(std::mt19937& rng, int n) {
    auto p = Permutation::identity(n);
    std::shuffle(p.image.begin(), p.image.end(), rng);
    return p;
}

} // namespace

TEST(Transforms, SwitchExamples) {
    auto g = kn(3);
    auto f = make_inequality(g, {{1, 2, 1}, {0, 1, -1}, {0, 2, -1}}, 0);
    EXPECT_EQ(format_inequality(switching(f, {0})), "2 | 0-1:1 0-2:1 1-2:1");
    EXPECT_EQ(switching(f, {}), f);
    EXPECT_EQ(switching(switching(f, {0, 2}), {0, 2}), f);
    EXPECT_THROW(switching(f, kn(4), {0}), Error);
}

TEST(Transforms, PermuteExamples) {
    auto g = kn(3);
    auto f = make_inequality(g, {{0, 1, 1}}, 0);
    Permutation t{{0, 2, 1}};
    EXPECT_EQ(format_inequality(permute(f, t)), "0 | 0-2:1");
    EXPECT_EQ(permute(f, Permutation::identity(3)), f);
    auto h = k1mm(2);
    try {
        permute(LinearInequality(h), Permutation{{1, 0, 2, 3, 4}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAutomorphism);
    }
}

TEST(Transforms, GroupActionLaws) {
    std::mt19937 rng(3);
    for (int n = 3; n <= 6; ++n) {
        auto g = kn(n);
        for (int trial = 0; trial < 50; ++trial) {
            auto f = random_inequality(rng, g);
            auto s = random_permutation(rng, n), t = random_permutation(rng, n);
            EXPECT_EQ(permute(permute(f, t), s), permute(f, t * s));
            EXPECT_EQ(permute(permute(f, s), s.inverse()), f);
            std::vector<int> set;
            for (int v = 0; v < n; ++v)
                if (rng() & 1) set.push_back(v);
            EXPECT_EQ(switching(switching(f, set), set), f);
            // switching by S and by its complement agree
            std::vector<int> comp;
            for (int v = 0; v < n; ++v)
                if (std::find(set.begin(), set.end(), v) == set.end()) comp.push_back(v);
            EXPECT_EQ(switching(f, set), switching(f, comp));
        }
    }
}

TEST(Transforms, ZeroLift) {
    auto tri = make_inequality(kn(3), {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}}, 0);
    auto lifted = zero_lift(tri, kn(4));
    EXPECT_TRUE(facet_status(lifted).is_facet);
    auto chsh = make_inequality(k1mm(2), {{1, 4, 1}, {1, 3, -1}, {2, 3, -1}, {2, 4, -1}}, 0);
    // K_{1,2,2} ids 3,4 are B1,B2; in K_{1,3,3} they are 4,5.
    auto g3 = k1mm(3);
    auto chsh3 = make_inequality(g3, {{1, 5, 1}, {1, 4, -1}, {2, 4, -1}, {2, 5, -1}}, 0);
    EXPECT_TRUE(facet_status(chsh3).is_facet);
    EXPECT_EQ(zero_lift(chsh, k1mm(2)), chsh);
    try {
        zero_lift(tri, make_graph(Graph(4, {{0, 1}, {0, 2}})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSubgraph);
    }
}

TEST(Transforms, ZeroLiftPreservesFacets) {
    // all triangle-type facets of CUT(K_n) via switchings of the homogeneous triangles
    for (int n = 3; n <= 4; ++n) {
        auto g = kn(n), big = kn(n + 1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); s += 1) {
                        auto f = make_inequality(g, {{a, b, 1}, {a, c, -1}, {b, c, -1}}, 0);
                        std::vector<int> set;
                        for (int v = 0; v < n; ++v)
                            if ((s >> v) & 1) set.push_back(v);
                        f = switching(f, set);
                        EXPECT_EQ(facet_status(f).is_facet, facet_status(zero_lift(f, big)).is_facet);
                    }
    }
}

TEST(Transforms, StepExamples) {
    auto g = kn(4);
    DetourStep st{{1, 2}, 4, {}};
    auto f1 = make_inequality(g, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}}, 0);
    auto r1 = triangular_eliminate_step(f1, st, false);
    EXPECT_EQ(format_inequality(r1), "0 | 0-1:1 0-2:-1 1-4:-1 2-4:-1");
    auto f2 = make_inequality(g, {{1, 2, 1}, {1, 3, -1}, {2, 3, -1}}, 0);
    auto r2 = triangular_eliminate_step(f2, st, false);
    EXPECT_EQ(format_inequality(r2), "0 | 1-3:-1 1-4:1 2-3:-1 2-4:-1");

    const auto f3 = make_inequality(g, {{0, 1, 1}, {0, 2, -1}, {1, 3, -1}}, 0);
    auto r3 = triangular_eliminate_step(f3, st, false);
    for (auto [u, v] : r3.graph->edges()) EXPECT_EQ(r3.coef(u, v), f3.coef(u, v));
    EXPECT_EQ(r3.rhs, f3.rhs);

    try {
        triangular_eliminate_step(f1, {{1, 2}, 7, {}}, false);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::StepMismatch);
    }
}

TEST(Transforms, SwitchedFormConsistency) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = kn(4 + trial % 2);
        auto f = random_inequality(rng, g);
        f.coef(1, 2) = -(1 + static_cast<int>(rng() % 3));
        DetourStep st{{1, 2}, g->vertex_count(), {0}};
        auto def = triangular_eliminate_step(f, st, false);
        auto sw = triangular_eliminate_step(f, st, true);
        EXPECT_EQ(sw, switching(def, {g->vertex_count()}));
    }
}

TEST(Transforms, SingleStepValidityEquivalence) {
    std::mt19937 rng(17);
    int valid_count = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        const int n = 4 + trial % 2;
        auto g = kn(n);
        auto f = random_inequality(rng, g);
        // push roughly half the corpus to validity
        if (trial % 2 == 0) f.rhs = max_cut_value(f).first;
        const int u = 1 + rng() % (n - 1);
        int w = 1 + rng() % (n - 1);
        if (w == u) w = (u % (n - 1)) + 1;
        std::vector<int> a;
        for (int x = 0; x < n; ++x)
            if (x != u && x != w && (rng() & 1)) a.push_back(x);
        auto r = triangular_eliminate_step(f, {{u, w}, n, a}, false);
        const bool vf = is_valid(f);
        valid_count += vf;
        EXPECT_EQ(vf, is_valid(r));
    }
    EXPECT_GT(valid_count, 500);
}

TEST(Transforms, PentagonEliminatesToI3322Form) {
    auto g = kn(5);
    auto pent = make_inequality(g,
                                {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {0, 3, -1}, {1, 3, -1}, {2, 3, -1},
                                 {0, 4, -1}, {1, 4, -1}, {2, 4, -1}},
                                0);
    auto t = eliminate_to_tripartite(pent);
    EXPECT_EQ(t.m, 3);
    auto expect = make_inequality(k1mm(3),
                                  {{0, 1, 1}, {0, 2, 1}, {1, 6, 1}, {3, 4, 1}, {0, 4, -1}, {1, 4, -1}, {2, 4, -1},
                                   {0, 5, -1}, {1, 5, -1}, {2, 5, -1}, {2, 6, -1}, {3, 5, -1}},
                                  0);
    EXPECT_EQ(t.result, expect);
    EXPECT_TRUE(facet_status(t.result).is_facet);
    EXPECT_EQ(format_trace(t),
              "remove 1-2 add 6 coef 1 form default\n"
              "remove 4-5 add 3 coef 1 form default\n" +
                  format_inequality(expect) + "\n");
    for (const auto& s : t.steps) {
        EXPECT_EQ(s.intermediate.coef(s.step.removed_edge.first, s.step.removed_edge.second), 0);
        EXPECT_FALSE(s.intermediate.graph->has_edge(s.step.removed_edge.first, s.step.removed_edge.second));
    }
}

TEST(Transforms, K6TriangleEliminatesToNonFacet) {
    auto tri = make_inequality(kn(6), {{1, 3, 1}, {1, 2, -1}, {2, 3, -1}}, 0);
    auto t = eliminate_to_tripartite(tri);
    EXPECT_EQ(t.m, 5);
    auto expect = make_inequality(k1mm(5), {{1, 9, 1}, {3, 9, -1}, {1, 8, -1}, {2, 8, -1}, {2, 10, -1}, {3, 10, -1}}, 0);
    EXPECT_EQ(t.result, expect);
    auto r = facet_status(t.result);
    EXPECT_TRUE(r.valid);
    EXPECT_FALSE(r.is_facet);
}

TEST(Transforms, EliminationKeepsValidityOnCut5Switchings) {
    auto g = kn(5);
    auto pent = make_inequality(g,
                                {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {0, 3, -1}, {1, 3, -1}, {2, 3, -1},
                                 {0, 4, -1}, {1, 4, -1}, {2, 4, -1}},
                                0);
    for (std::uint64_t s = 0; s < 32; ++s) {
        std::vector<int> set;
        for (int v = 0; v < 5; ++v)
            if ((s >> v) & 1) set.push_back(v);
        auto f = switching(pent, set);
        EXPECT_TRUE(is_valid(eliminate_to_tripartite(f).result));
        EXPECT_TRUE(is_valid(eliminate_to_tripartite(f, EliminationMode::strict, true).result));
        EXPECT_TRUE(is_valid(eliminate_to_tripartite(f, EliminationMode::compact).result));
    }
}

TEST(Transforms, CompactMode) {
    for (int n = 3; n <= 8; ++n) {
        auto g = kn(n);
        LinearInequality f(g);
        for (auto& c : f.coeffs) c = 1;
        auto t = eliminate_to_tripartite(f, EliminationMode::compact);
        EXPECT_EQ(t.m, n - 2);
        EXPECT_EQ(*t.result.graph, complete_tripartite_1mm(n - 2).first);
    }
}

TEST(Transforms, EvenNUsesPadding) {
    auto f = make_inequality(kn(4), {{1, 2, 1}, {1, 3, -1}, {2, 3, -1}}, 0);
    auto t = eliminate_to_tripartite(f);
    EXPECT_EQ(format_inequality(t.result), "0 | 1-3:-1 1-4:1 2-3:-1 2-4:-1");
    EXPECT_TRUE(facet_status(t.result).is_facet);
}
