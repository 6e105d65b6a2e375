#include <gtest/gtest.h>

#include <random>

#include "cutbell/equivalence.hpp"
#include "cutbell/families.hpp"
#include "cutbell/hull.hpp"

using namespace cutbell;

namespace {

std::vector<LinearInequality> hull_facets(const GraphPtr& g) {
    std::vector<std::vector<std::int64_t>> pts;
    for (const auto& c : enumerate_cut_vectors(g)) pts.push_back(c.to_int());
    std::vector<LinearInequality> out;
    for (const auto& r : facet_enumeration(pts).facets) out.emplace_back(g, r.coeffs, r.rhs);
    return out;
}

std::vector<LinearInequality> eliminated_nontriangle(int n) {
    std::vector<LinearInequality> out;
    for (const auto& f : hull_facets(make_graph(complete_graph(n))))
        if (!is_triangle_type(f)) out.push_back(eliminate_to_tripartite(f).result);
    return out;
}

// random element of the group and random switching applied to f
LinearInequality random_image(const LinearInequality& f, const GroupSpec& spec, std::mt19937& rng) {
    const int n = f.graph->vertex_count();
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    if (spec.kind == GroupKind::full_Kn) {
        std::shuffle(img.begin(), img.end(), rng);
    } else {
        const int s = spec.param;
        std::vector<int> a(s), b(s);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), s + 1);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        if (rng() % 2) std::swap(a, b);
        for (int i = 0; i < s; ++i) {
            img[1 + i] = a[i];
            img[1 + s + i] = b[i];
        }
    }
    std::vector<int> S;
    for (int u = 0; u < n; ++u)
        if (rng() % 2) S.push_back(u);
    auto r = switching(permute(f, Permutation{img}), S);
    for (auto& c : r.coeffs) c *= 3;
    r.rhs *= 3;
    return r;
}

} // namespace

TEST(Equivalence, KnownPairs) {
    auto k3 = make_graph(complete_graph(3));
    auto t1 = make_inequality(k3, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}}, 0);
    auto t2 = make_inequality(k3, {{0, 2, 1}, {0, 1, -1}, {1, 2, -1}}, 0);
    EXPECT_TRUE(are_equivalent(t1, t2, {GroupKind::full_Kn, 3}));
    auto el = eliminate_to_tripartite(fixture("pentagon").cut()).result;
    EXPECT_TRUE(are_equivalent(el, fixture("i3322").cut(), {GroupKind::tripartite_H, 3}));
    EXPECT_FALSE(are_equivalent(fixture("trivial").cut(), fixture("chsh").cut(), {GroupKind::tripartite_H, 2}));
    EXPECT_THROW(are_equivalent(t1, fixture("chsh").cut(), {GroupKind::full_Kn, 3}), Error);
    EXPECT_THROW(are_equivalent(t1, t2, {GroupKind::tripartite_H, 2}), Error);
}

TEST(Equivalence, RhsMatters) {
    auto k3 = make_graph(complete_graph(3));
    auto a = make_inequality(k3, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}}, 0);
    auto b = a;
    b.rhs = 1;
    EXPECT_FALSE(are_equivalent(a, b, {GroupKind::full_Kn, 3}));
    auto scaled = a;
    for (auto& c : scaled.coeffs) c *= Rational(5, 2);
    EXPECT_TRUE(are_equivalent(a, scaled, {GroupKind::full_Kn, 3}));
}

TEST(Equivalence, SwitchCanonical) {
    auto k3 = make_graph(complete_graph(3));
    auto perimeter = make_inequality(k3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, 2);
    auto c = switch_canonical(perimeter);
    EXPECT_EQ(c.rhs, 0);
    EXPECT_EQ(format_inequality(c), "0 | 0-1:-1 0-2:-1 1-2:1");
    EXPECT_EQ(switch_canonical(c), c);
    auto chsh = fixture("chsh").cut();
    EXPECT_EQ(switch_canonical(chsh), switch_canonical(switching(chsh, {1})));
    auto bad = perimeter;
    bad.rhs = 1;
    try {
        switch_canonical(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotValid);
    }
    // exhaustive oracle: least over all switchings
    for (const auto& f : hull_facets(make_graph(complete_graph(5)))) {
        const auto got = switch_canonical(f);
        LinearInequality best;
        bool have = false;
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<int> S;
            for (int u = 1; u < 5; ++u)
                if (mask >> (u - 1) & 1) S.push_back(u);
            auto s = switching(f, S);
            if (!have || s.coeffs < best.coeffs) best = s, have = true;
        }
        EXPECT_EQ(got, primitive_normalize(best));
    }
}

TEST(Equivalence, Cut5Classes) {
    auto facets = hull_facets(make_graph(complete_graph(5)));
    auto r = classify(facets, {GroupKind::full_Kn, 5});
    EXPECT_EQ(r.class_count, 2u);
    EXPECT_EQ(r.class_sizes[0] + r.class_sizes[1], 56u);
    auto el = eliminated_nontriangle(5);
    EXPECT_EQ(el.size(), 16u);
    EXPECT_EQ(classify(el, {GroupKind::tripartite_H, 3}).class_count, 1u);
}

TEST(Equivalence, Cut6Classes) {
    auto el = eliminated_nontriangle(6);
    auto r = classify(el, {GroupKind::tripartite_H, 5});
    EXPECT_EQ(r.class_count, 6u);
    auto par = classify(el, {GroupKind::tripartite_H, 5}, 4);
    EXPECT_EQ(par.class_count, 6u);
    EXPECT_EQ(par.class_of, r.class_of);
    EXPECT_EQ(par.representatives, r.representatives);
    std::set<std::vector<BigInt>> keys;
    for (const auto& f : el) keys.insert(canonical_form(f, {GroupKind::tripartite_H, 5}).key);
    EXPECT_EQ(keys.size(), 6u);
    const auto text = format_classification(r);
    EXPECT_NE(text.find("classes 6\n"), std::string::npos);
    EXPECT_EQ(text.rfind("class 0 size ", 0), 0u);
}

TEST(Equivalence, FingerprintSoundAndRelationLaws) {
    auto facets = hull_facets(make_graph(complete_graph(5)));
    GroupSpec full{GroupKind::full_Kn, 5};
    const std::size_t n = facets.size();
    std::vector<std::vector<char>> eq(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            eq[i][j] = are_equivalent(facets[i], facets[j], full);
            if (eq[i][j]) EXPECT_EQ(fingerprint(facets[i], full), fingerprint(facets[j], full));
        }
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(eq[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(eq[i][j], eq[j][i]);
            for (std::size_t k = 0; k < n; k += 7)
                if (eq[i][j] && eq[j][k]) EXPECT_TRUE(eq[i][k]);
        }
    }
}

TEST(Equivalence, CanonicalKeyInvariance) {
    std::mt19937 rng(17);
    GroupSpec full{GroupKind::full_Kn, 5};
    for (const auto& f : hull_facets(make_graph(complete_graph(5)))) {
        const auto key = canonical_form(f, full).key;
        for (int t = 0; t < 20; ++t) {
            auto g = random_image(f, full, rng);
            EXPECT_EQ(canonical_form(g, full).key, key);
            EXPECT_TRUE(are_equivalent(f, g, full));
        }
    }
    GroupSpec h{GroupKind::tripartite_H, 5};
    auto el = eliminated_nontriangle(6);
    for (std::size_t i = 0; i < el.size(); i += 9) {
        const auto key = canonical_form(el[i], h).key;
        for (int t = 0; t < 100; ++t) {
            auto g = random_image(el[i], h, rng);
            EXPECT_EQ(canonical_form(g, h).key, key);
            if (t % 10 == 0) EXPECT_TRUE(are_equivalent(g, el[i], h));
        }
    }
}

TEST(Equivalence, SourceTargetConsistency) {
    for (int n : {5, 6}) {
        auto src = hull_facets(make_graph(complete_graph(n)));
        std::vector<LinearInequality> lifted, el;
        GroupSpec gs, ht;
        for (const auto& f : src) {
            if (is_triangle_type(f)) continue;
            auto [l, spec] = restricted_source(f);
            lifted.push_back(l);
            gs = spec;
            el.push_back(eliminate_to_tripartite(f).result);
        }
        ht = default_group(*el[0].graph);
        std::size_t checked = 0;
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = i; j < el.size(); ++j) {
                EXPECT_EQ(are_equivalent(lifted[i], lifted[j], gs), are_equivalent(el[i], el[j], ht)) << n << " " << i << " " << j;
                ++checked;
            }
        EXPECT_GT(checked, 100u);
        std::size_t non_triangle = 0;
        for (const auto& f : src)
            if (!is_triangle_type(f) && non_triangle++ < 4) EXPECT_TRUE(source_target_consistency(f, f));
    }
}

TEST(Equivalence, TriangleTypes) {
    // K_7: X = 0, A = 1..3, B = 4..6
    auto k7 = make_graph(complete_graph(7));
    auto tri = [&](int x, int y, int z) { return make_inequality(k7, {{x, y, 1}, {x, z, -1}, {y, z, -1}}, 0); };
    auto status = [](const LinearInequality& f) { return facet_status(eliminate_to_tripartite(f).result).is_facet; };
    EXPECT_TRUE(status(tri(0, 1, 4)));  // X-A-B: stays a triangle of K_{1,m,m}
    EXPECT_TRUE(status(tri(1, 2, 4)));  // A-A-B
    EXPECT_TRUE(status(tri(4, 1, 2)));
    EXPECT_FALSE(status(tri(0, 1, 2))); // X-A-A
    EXPECT_FALSE(status(tri(1, 2, 3))); // A-A-A
}

TEST(Equivalence, Importer) {
    auto facets = hull_facets(make_graph(complete_graph(4)));
    std::string lex = "# K4 facets\nn 4\norder lex\nrhs last\n", colex = "n 4\norder colex\nrhs first\n";
    std::string expl = "n 4\norder 2-3 1-3 0-3 1-2 0-2 0-1\nrhs last\n";
    for (const auto& f : facets) {
        auto c = [&](int u, int v) { return to_string(f.coef(u, v)); };
        lex += c(0, 1) + " " + c(0, 2) + " " + c(0, 3) + " " + c(1, 2) + " " + c(1, 3) + " " + c(2, 3) + " " + to_string(f.rhs) + "\n";
        colex += to_string(f.rhs) + " " + c(0, 1) + " " + c(0, 2) + " " + c(1, 2) + " " + c(0, 3) + " " + c(1, 3) + " " + c(2, 3) + "\n";
        expl += c(2, 3) + " " + c(1, 3) + " " + c(0, 3) + " " + c(1, 2) + " " + c(0, 2) + " " + c(0, 1) + " " + to_string(f.rhs) + "\n";
    }
    EXPECT_EQ(import_facets(lex), facets);
    EXPECT_EQ(import_facets(colex), facets);
    EXPECT_EQ(import_facets(expl), facets);
    EXPECT_EQ(import_facets("n 3\nrhs none\n1 -1 -1\n")[0].rhs, 0);
    EXPECT_THROW(import_facets("n 3\n1 2\n"), Error);
    EXPECT_THROW(import_facets("1 2 3 4\n"), Error);
    EXPECT_THROW(import_facets("n 3\norder 0-1 0-1 1-2\n1 1 1 0\n"), Error);
}
