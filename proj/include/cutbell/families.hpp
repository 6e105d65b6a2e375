#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cutbell/bell.hpp"

#ifndef CUTBELL_FIXTURE_DIR
#define CUTBELL_FIXTURE_DIR "fixtures"
#endif

namespace cutbell {

struct HypermetricWeights {
    int k = 0;
    std::vector<long> a;
    std::vector<long> b;
    long c = 0;

    bool operator==(const HypermetricWeights& o) const { return k == o.k && a == o.a && b == o.b && c == o.c; }
};

inline void check_weights(const HypermetricWeights& w) {
    if (w.k < 1 || static_cast<int>(w.a.size()) != w.k || static_cast<int>(w.b.size()) != w.k)
        throw Error(ErrorCode::DimensionMismatch, "weight vectors must have length k >= 1");
    long s = w.c;
    for (long x : w.a) s += x;
    for (long x : w.b) s += x;
    if (s != 1) throw Error(ErrorCode::WeightSumInvalid, "c + sum(a) + sum(b) = " + std::to_string(s) + ", expected 1");
}

// a and b nonincreasing, and (a,b) >= (b,a) lexicographically.
inline HypermetricWeights normalize_weights(HypermetricWeights w) {
    std::sort(w.a.begin(), w.a.end(), std::greater<>());
    std::sort(w.b.begin(), w.b.end(), std::greater<>());
    if (w.b > w.a) std::swap(w.a, w.b);
    return w;
}

inline std::string format_weights(const HypermetricWeights& w) {
    auto vec = [](const std::vector<long>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    return "k=" + std::to_string(w.k) + " a=" + vec(w.a) + " b=" + vec(w.b) + " c=" + std::to_string(w.c);
}

// Σ w_u w_v x_uv <= 0 on K_{2k+1}; X = 0, A_j = j, B_j = k + j.
inline LinearInequality hypermetric_cut(const HypermetricWeights& w) {
    check_weights(w);
    const int n = 2 * w.k + 1;
    std::vector<long> wt(n);
    wt[0] = w.c;
    for (int j = 0; j < w.k; ++j) {
        wt[1 + j] = w.a[j];
        wt[1 + w.k + j] = w.b[j];
    }
    LinearInequality f(make_graph(complete_graph(n)));
    for (std::size_t e = 0; e < f.graph->edge_count(); ++e) {
        auto [u, v] = f.graph->edges()[e];
        f.coeffs[e] = wt[u] * wt[v];
    }
    f.rhs = 0;
    return f;
}

namespace detail {

inline CGTable hypermetric_cg(const HypermetricWeights& w, bool literal) {
    check_weights(w);
    const int k = w.k;
    const int pairs = k * (k - 1) / 2;
    const int m = k + pairs;
    CGTable t(m, m);
    long sa = 0, sb = 0;
    for (long x : w.a) sa += x;
    for (long x : w.b) sb += x;
    auto own = [&](const std::vector<long>& a, long other_sum, int j) -> Rational {
        if (literal) {
            long prefix = 0;
            for (int u = 0; u < j; ++u) prefix += a[u];
            return Rational((1 - a[j] - 2 * prefix) * a[j]);
        }
        long r = w.c * a[j] + a[j] * other_sum;
        for (int u = j + 1; u < k; ++u) r += a[j] * a[u];
        for (int u = 0; u < j; ++u) r -= std::labs(a[u] * a[j]);
        return Rational(r);
    };
    for (int j = 0; j < k; ++j) {
        t.a_marg[j] = own(w.a, sb, j);
        t.b_marg[j] = own(w.b, sa, j);
        for (int jp = 0; jp < k; ++jp) t.joint[j][jp] = -2 * w.a[j] * w.b[jp];
    }
    for (int up = 1; up < k; ++up)
        for (int u = 0; u < up; ++u) {
            const int p = k - 1 + pair_index(u + 1, up + 1);
            const long al = w.a[u] * w.a[up], be = w.b[u] * w.b[up];
            t.joint[u][p] = -2 * al;
            t.joint[up][p] = literal ? 2 * al : 2 * std::labs(al);
            t.joint[p][u] = -2 * be;
            t.joint[p][up] = literal ? 2 * be : 2 * std::labs(be);
            if (!literal) {
                t.b_marg[p] = al - std::labs(al);
                t.a_marg[p] = be - std::labs(be);
            }
        }
    t.rhs = 0;
    return t;
}

} // namespace detail

// Eliminated hypermetric inequality on (2, k + C(k,2), 2); A'/B' observables
// k+1.. follow the colex order of pairs.
inline BellInequality hypermetric_bell_direct(const HypermetricWeights& w) {
    return from_cg_table(detail::hypermetric_cg(w, false));
}

inline CGTable hypermetric_cg_direct(const HypermetricWeights& w) { return detail::hypermetric_cg(w, false); }

// Term-by-term evaluation of the displayed closed formula; only agrees with the
// direct form when all same-side weight products are nonnegative.
inline CGTable hypermetric_cg_literal(const HypermetricWeights& w) { return detail::hypermetric_cg(w, true); }

inline bool hypermetric_facet_condition(const HypermetricWeights& w) {
    check_weights(w);
    std::vector<long> all(w.a);
    all.insert(all.end(), w.b.begin(), w.b.end());
    all.push_back(w.c);
    // a single nonzero weight gives the zero inequality, which is excluded
    const bool pure = std::all_of(all.begin(), all.end(), [](long x) { return x >= -1 && x <= 1; }) &&
                      std::any_of(all.begin(), all.end(), [](long x) { return x < 0; });
    const long positives = std::count_if(all.begin(), all.end(), [](long x) { return x > 0; });
    const long n = 2 * w.k + 1;
    const bool second = positives >= 3 && positives <= n - 3 &&
                        std::all_of(all.begin(), all.end(), [](long x) { return x >= -1; });
    return pure || second;
}

inline CGTable imm22(int m) {
    if (m < 2) throw Error(ErrorCode::DimensionMismatch, "imm22 needs m >= 2");
    CGTable t(m, m);
    t.b_marg[0] = -1;
    for (int i = 0; i < m; ++i) {
        t.a_marg[i] = -(m - 1 - i);
        const int ones = i == 0 ? m : m - i;
        for (int j = 0; j < ones; ++j) t.joint[i][j] = 1;
        if (i > 0) t.joint[i][m - i] = -1;
    }
    return t;
}

// ---- fixtures ----

struct Fixture {
    std::string name;
    std::string provenance;
    std::variant<LinearInequality, CGTable> payload;

    bool is_cg() const { return std::holds_alternative<CGTable>(payload); }
    const CGTable& cg() const { return std::get<CGTable>(payload); }

    // Cut form on the payload graph; CG payloads go to K_{1,m,m}, m = max(m_a, m_b).
    LinearInequality cut() const { return is_cg() ? cg_to_cut(cg()) : std::get<LinearInequality>(payload); }
};

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"chsh",     "i3322",        "i3422_1",          "i3422_2", "i3422_3",
                                                   "grishukhin", "cliqueweb_m8", "b242_counterexample", "pentagon", "trivial"};
    return names;
}

inline std::string fixture_dir() {
    if (const char* env = std::getenv("CUTBELL_FIXTURES"); env && *env) return env;
    return CUTBELL_FIXTURE_DIR;
}

inline Fixture parse_fixture(const std::string& name, const std::string& text) {
    std::istringstream is(text);
    std::string line, provenance, body, graph;
    while (std::getline(is, line)) {
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos) continue;
        if (line[p] == '#') {
            if (provenance.empty()) provenance = line.substr(line.find_first_not_of("# \t", p));
            continue;
        }
        if (line.compare(p, 6, "graph ") == 0) {
            graph = line.substr(p + 6);
            continue;
        }
        body += line + "\n";
    }
    if (!graph.empty()) {
        std::istringstream bs(body);
        std::string ineq;
        std::getline(bs, ineq);
        return Fixture{name, provenance, parse_inequality(graph_from_spec(graph), ineq)};
    }
    return Fixture{name, provenance, parse_cg(body)};
}

inline Fixture fixture(const std::string& name) {
    if (std::find(fixture_names().begin(), fixture_names().end(), name) == fixture_names().end())
        throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
    const std::string path = fixture_dir() + "/" + name + ".txt";
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::UnknownFixture, "fixture file not found: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(name, ss.str());
}

} // namespace cutbell
