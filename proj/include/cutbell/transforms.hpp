#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cutbell/cut.hpp"

namespace cutbell {

inline LinearInequality switching(const LinearInequality& f, const std::vector<int>& s) {
    const Graph& g = *f.graph;
    const std::uint64_t mask = vertex_mask(g, s);
    LinearInequality r = f;
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (((mask >> edges[e].first) ^ (mask >> edges[e].second)) & 1) {
            r.rhs -= f.coeffs[e];
            r.coeffs[e] = -f.coeffs[e];
        }
    }
    return r;
}

inline LinearInequality switching(const LinearInequality& f, const GraphPtr& g, const std::vector<int>& s) {
    require_same_graph(*f.graph, *g);
    return switching(f, s);
}

// Coefficient of uv in the result is the input coefficient of σ(u)σ(v).
// Composition: permute(permute(f, t), s) == permute(f, t * s).
inline LinearInequality permute(const LinearInequality& f, const Permutation& sigma) {
    const Graph& g = *f.graph;
    if (!sigma.preserves(g)) throw Error(ErrorCode::NotAutomorphism, "permutation does not preserve the edge set");
    LinearInequality r(f.graph);
    r.rhs = f.rhs;
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        r.coeffs[e] = f.coeffs[g.edge_index(sigma(edges[e].first), sigma(edges[e].second))];
    return r;
}

inline LinearInequality zero_lift(const LinearInequality& f, const GraphPtr& target) {
    const Graph& g = *f.graph;
    if (target->vertex_count() < g.vertex_count()) throw Error(ErrorCode::NotSubgraph, "target has fewer vertices");
    LinearInequality r(target);
    r.rhs = f.rhs;
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const int idx = target->edge_index(edges[e].first, edges[e].second);
        if (idx < 0)
            throw Error(ErrorCode::NotSubgraph, "edge " + std::to_string(edges[e].first) + "-" +
                                                    std::to_string(edges[e].second) + " missing in target");
        r.coeffs[idx] = f.coeffs[e];
    }
    return r;
}

inline LinearInequality triangular_eliminate_step(const LinearInequality& f, const DetourStep& step, bool switched_form) {
    Graph next;
    try {
        next = detour_extend(*f.graph, step, false);
    } catch (const Error& e) {
        throw Error(ErrorCode::StepMismatch, e.what());
    }
    auto gp = make_graph(std::move(next));
    const auto [u, w] = step.removed_edge;
    const int v = step.new_vertex;
    const Rational a = f.coef(u, w);
    LinearInequality r(gp);
    r.rhs = f.rhs;
    const auto& edges = f.graph->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e] == Edge(std::min(u, w), std::max(u, w))) continue;
        r.coef(edges[e].first, edges[e].second) = f.coeffs[e];
    }
    if (switched_form && a < 0) {
        const Rational c = -a;
        r.coef(u, v) += c;
        r.coef(w, v) += c;
        r.rhs += 2 * c;
    } else {
        r.coef(u, v) += a;
        r.coef(w, v) -= abs(a);
    }
    return r;
}

enum class EliminationMode { strict, compact };

struct TraceStep {
    DetourStep step;         // working ids (strict) or target ids (compact)
    Edge removed_target;     // removed edge in target labels
    int added_target = 0;
    Rational coef;
    bool switched = false;
    LinearInequality intermediate;
};

struct EliminationTrace {
    LinearInequality source;
    EliminationMode mode = EliminationMode::strict;
    int n = 0;
    int m = 0;
    std::vector<TraceStep> steps;
    LinearInequality result;
};

inline bool is_complete_graph(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    return g.edge_count() == n * (n - 1) / 2;
}

namespace detail {

inline EliminationTrace eliminate_strict(const LinearInequality& f, bool switched) {
    const int n = f.graph->vertex_count();
    const auto sched = elimination_schedule(n);
    EliminationTrace t;
    t.source = f;
    t.mode = EliminationMode::strict;
    t.n = n;
    t.m = sched.m;
    LinearInequality cur = f;
    for (const auto& st : sched.steps) {
        TraceStep ts;
        ts.step = st;
        ts.removed_target = {sched.target_of[st.removed_edge.first], sched.target_of[st.removed_edge.second]};
        ts.added_target = sched.target_of[st.new_vertex];
        ts.coef = cur.coef(st.removed_edge.first, st.removed_edge.second);
        ts.switched = switched && ts.coef < 0;
        cur = triangular_eliminate_step(cur, st, switched);
        ts.intermediate = cur;
        t.steps.push_back(std::move(ts));
    }
    auto target = make_graph(complete_tripartite_1mm(sched.m).first);
    LinearInequality r(target);
    r.rhs = cur.rhs;
    const auto& edges = cur.graph->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const int a = sched.target_of[edges[e].first], b = sched.target_of[edges[e].second];
        const int idx = target->edge_index(a, b);
        if (idx < 0) {
            if (cur.coeffs[e] != 0)
                throw Error(ErrorCode::VerificationFailed, "eliminated inequality has a term off K_{1,m,m}");
            continue;
        }
        r.coeffs[idx] = cur.coeffs[e];
    }
    t.result = std::move(r);
    return t;
}

inline EliminationTrace eliminate_compact(const LinearInequality& f) {
    const int n = f.graph->vertex_count();
    const int k = n / 2;
    const int kb = (n % 2 == 1) ? k : k - 1;
    const int s = n - 2;
    EliminationTrace t;
    t.source = f;
    t.mode = EliminationMode::compact;
    t.n = n;
    t.m = s;
    const int total = 2 * s + 1;
    auto big = make_graph(complete_graph(total));
    std::vector<int> map(n);
    map[0] = 0;
    for (int i = 1; i <= k; ++i) map[i] = i;
    for (int j = 1; j <= kb; ++j) map[k + j] = s + j;
    LinearInequality cur(big);
    cur.rhs = f.rhs;
    for (auto [u, v] : f.graph->edges()) cur.coef(map[u], map[v]) = f.coef(u, v);

    auto step = [&](int u, int w, int v) {
        TraceStep ts;
        ts.step.removed_edge = {u, w};
        ts.step.new_vertex = v;
        ts.removed_target = {u, w};
        ts.added_target = v;
        ts.coef = cur.coef(u, w);
        const Rational a = ts.coef;
        cur.coef(u, w) = 0;
        cur.coef(u, v) += a;
        cur.coef(w, v) -= abs(a);
        ts.intermediate = cur;
        t.steps.push_back(std::move(ts));
    };
    for (int p = 1; p <= k * (k - 1) / 2; ++p) {
        auto [i, j] = pair_from_index(p);
        step(i, j, s + kb + (j - 1));
    }
    for (int p = 1; p <= kb * (kb - 1) / 2; ++p) {
        auto [i, j] = pair_from_index(p);
        step(s + i, s + j, k + (j - 1));
    }
    auto target = make_graph(complete_tripartite_1mm(s).first);
    LinearInequality r(target);
    r.rhs = cur.rhs;
    for (auto [u, v] : big->edges()) {
        const Rational& c = cur.coef(u, v);
        if (target->has_edge(u, v)) r.coef(u, v) = c;
        else if (c != 0) throw Error(ErrorCode::VerificationFailed, "compact elimination left an intra-side term");
    }
    t.result = std::move(r);
    return t;
}

} // namespace detail

inline EliminationTrace eliminate_to_tripartite(const LinearInequality& f, EliminationMode mode = EliminationMode::strict,
                                                bool switched_form = false) {
    const Graph& g = *f.graph;
    if (!is_complete_graph(g) || g.vertex_count() < 3)
        throw Error(ErrorCode::GraphMismatch, "elimination input must live on K_n, n >= 3");
    if (mode == EliminationMode::compact) return detail::eliminate_compact(f);
    return detail::eliminate_strict(f, switched_form);
}

inline std::string format_trace(const EliminationTrace& t) {
    std::ostringstream os;
    for (const auto& s : t.steps) {
        os << "remove " << s.removed_target.first << "-" << s.removed_target.second << " add " << s.added_target << " coef "
           << to_string(s.coef) << " form " << (s.switched ? "switched" : "default") << "\n";
    }
    os << format_inequality(t.result) << "\n";
    return os.str();
}

} // namespace cutbell
