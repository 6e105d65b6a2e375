#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cutbell/error.hpp"

namespace cutbell {

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw Error(ErrorCode::DimensionMismatch, "negative vertex count");
        for (auto& e : edges_) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first == e.second) throw Error(ErrorCode::DimensionMismatch, "self-loop");
            if (e.first < 0 || e.second >= n_) throw Error(ErrorCode::DimensionMismatch, "edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw Error(ErrorCode::DimensionMismatch, "duplicate edge");
        index_.assign(static_cast<std::size_t>(n_) * n_, -1);
        adj_.assign(n_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            index_[u * n_ + v] = index_[v * n_ + u] = static_cast<int>(i);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int edge_index(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
        return index_[u * n_ + v];
    }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> index_;
    std::vector<std::vector<int>> adj_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr make_graph(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

struct TripartiteLabeling {
    int k = 0;
    int m = 0;
    int apex = 0;
    std::vector<int> a_side;
    std::vector<int> b_side;
};

struct DetourStep {
    Edge removed_edge;
    int new_vertex = 0;
    std::vector<int> adjacent_set;
};

struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n) {
        Permutation p;
        p.image.resize(n);
        for (int i = 0; i < n; ++i) p.image[i] = i;
        return p;
    }
    int operator()(int v) const { return image[v]; }
    int size() const { return static_cast<int>(image.size()); }

    // (*this * t)(v) = this(t(v)): apply t first.
    Permutation operator*(const Permutation& t) const {
        Permutation r;
        r.image.resize(t.image.size());
        for (std::size_t v = 0; v < t.image.size(); ++v) r.image[v] = image[t.image[v]];
        return r;
    }
    Permutation inverse() const {
        Permutation r;
        r.image.resize(image.size());
        for (std::size_t v = 0; v < image.size(); ++v) r.image[image[v]] = static_cast<int>(v);
        return r;
    }
    bool is_bijection() const {
        std::vector<char> seen(image.size(), 0);
        for (int x : image) {
            if (x < 0 || x >= size() || seen[x]) return false;
            seen[x] = 1;
        }
        return true;
    }
    bool preserves(const Graph& g) const {
        if (size() != g.vertex_count() || !is_bijection()) return false;
        for (auto [u, v] : g.edges())
            if (!g.has_edge(image[u], image[v])) return false;
        return true;
    }
    bool operator==(const Permutation& o) const { return image == o.image; }
    bool operator<(const Permutation& o) const { return image < o.image; }
};

inline Graph complete_graph(int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "complete_graph needs n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

inline TripartiteLabeling tripartite_labeling(int m, int k = 0) {
    TripartiteLabeling t;
    t.k = k;
    t.m = m;
    for (int i = 1; i <= m; ++i) t.a_side.push_back(i);
    for (int i = 1; i <= m; ++i) t.b_side.push_back(m + i);
    return t;
}

inline std::pair<Graph, TripartiteLabeling> complete_tripartite_1mm(int m) {
    if (m < 1) throw Error(ErrorCode::DimensionMismatch, "complete_tripartite_1mm needs m >= 1");
    std::vector<Edge> e;
    for (int v = 1; v <= 2 * m; ++v) e.emplace_back(0, v);
    for (int a = 1; a <= m; ++a)
        for (int b = m + 1; b <= 2 * m; ++b) e.emplace_back(a, b);
    return {Graph(2 * m + 1, std::move(e)), tripartite_labeling(m)};
}

inline Graph detour_extend(const Graph& g, const DetourStep& step, bool strict) {
    auto [u, w] = step.removed_edge;
    if (!g.has_edge(u, w))
        throw Error(ErrorCode::EdgeAbsent, "edge " + std::to_string(u) + "-" + std::to_string(w) + " not in graph");
    const int v = step.new_vertex;
    if (v != g.vertex_count())
        throw Error(ErrorCode::StepMismatch, "new vertex must be the next fresh id " + std::to_string(g.vertex_count()));
    for (int a : step.adjacent_set) {
        if (a < 0 || a >= g.vertex_count() || a == u || a == w)
            throw Error(ErrorCode::AdjacencyViolation, "adjacent vertex " + std::to_string(a) + " out of range");
        if (strict && !(g.has_edge(a, u) && g.has_edge(a, w)))
            throw Error(ErrorCode::AdjacencyViolation,
                        "vertex " + std::to_string(a) + " is not a common neighbor of " + std::to_string(u) + " and " +
                            std::to_string(w));
    }
    std::vector<Edge> e;
    for (auto ed : g.edges())
        if (ed != Edge(std::min(u, w), std::max(u, w))) e.push_back(ed);
    e.emplace_back(u, v);
    e.emplace_back(w, v);
    for (int a : step.adjacent_set) e.emplace_back(a, v);
    return Graph(g.vertex_count() + 1, std::move(e));
}

// Colex index <i,j> = C(j-1,2) + i for 1 <= i < j.
inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return (j - 1) * (j - 2) / 2 + i;
}

inline std::pair<int, int> pair_from_index(int p) {
    int j = 2;
    while ((j) * (j - 1) / 2 < p) ++j;
    return {p - (j - 1) * (j - 2) / 2, j};
}

inline int tripartite_size(int n) {
    return ((n - 2) / 2) * ((n - 4) / 2) / 2 + n - 2;
}

struct EliminationSchedule {
    int n = 0;
    int k = 0;
    int m = 0;
    std::vector<DetourStep> steps;      // working ids: step i adds vertex n + i
    TripartiteLabeling labeling;        // target K_{1,m,m}
    std::vector<int> target_of;         // working id -> target id
    std::vector<int> padding;           // target ids carrying only zero coefficients
};

namespace detail {

inline std::vector<int> common_target_neighbors(const Graph& g, int u, int w, bool new_on_b_side,
                                                const std::vector<int>& target_of, int m) {
    std::vector<int> out;
    for (int a : g.neighbors(u)) {
        if (a == w || !g.has_edge(a, w)) continue;
        const int t = target_of[a];
        const bool ok = t == 0 || (new_on_b_side ? (t >= 1 && t <= m) : (t > m));
        if (ok) out.push_back(a);
    }
    return out;
}

} // namespace detail

// Odd n = 2k+1: X=0, A_i=i, B_j=k+j. Even n = 2k: B has k-1 vertices and
// the A side is padded by zero-lifted vertices.
inline EliminationSchedule elimination_schedule(int n) {
    if (n < 3) throw Error(ErrorCode::DimensionMismatch, "elimination_schedule needs n >= 3");
    EliminationSchedule s;
    s.n = n;
    const int k = n / 2;
    const int kb = (n % 2 == 1) ? k : k - 1;
    s.k = k;
    const int pa = k * (k - 1) / 2;   // A-pairs -> B' vertices
    const int pb = kb * (kb - 1) / 2; // B-pairs -> A' vertices
    const int m = tripartite_size(n);
    s.m = m;
    if (k + pb > m || kb + pa != m) throw Error(ErrorCode::VerificationFailed, "inconsistent schedule sizes");
    s.labeling = tripartite_labeling(m, k);

    s.target_of.assign(n, 0);
    for (int i = 1; i <= k; ++i) s.target_of[i] = i;
    for (int j = 1; j <= kb; ++j) s.target_of[k + j] = m + j;

    Graph g = complete_graph(n);
    auto run = [&](int u, int w, int target) {
        const bool on_b = target > m;
        DetourStep st;
        st.removed_edge = {u, w};
        st.new_vertex = g.vertex_count();
        st.adjacent_set = detail::common_target_neighbors(g, u, w, on_b, s.target_of, m);
        g = detour_extend(g, st, true);
        s.target_of.push_back(target);
        s.steps.push_back(std::move(st));
    };
    for (int p = 1; p <= pa; ++p) {
        auto [i, j] = pair_from_index(p);
        run(i, j, m + kb + p);
    }
    for (int p = 1; p <= pb; ++p) {
        auto [i, j] = pair_from_index(p);
        run(k + i, k + j, k + p);
    }
    for (int t = k + pb + 1; t <= m; ++t) s.padding.push_back(t);
    return s;
}

enum class AutGroup { K_n_full, K_n_restricted_G, K1mm_full_H };

// K_n_full: param = n. K_n_restricted_G: param = k (n = 2k+1). K1mm_full_H: param = m.
inline std::vector<Permutation> automorphism_generators(AutGroup which, int param) {
    std::vector<Permutation> gens;
    auto transposition = [](int n, int a, int b) {
        Permutation p = Permutation::identity(n);
        std::swap(p.image[a], p.image[b]);
        return p;
    };
    if (which == AutGroup::K_n_full) {
        for (int i = 0; i + 1 < param; ++i) gens.push_back(transposition(param, i, i + 1));
        return gens;
    }
    const int side = param;
    const int n = 2 * side + 1;
    for (int i = 1; i < side; ++i) gens.push_back(transposition(n, i, i + 1));
    for (int i = 1; i < side; ++i) gens.push_back(transposition(n, side + i, side + i + 1));
    Permutation swap = Permutation::identity(n);
    for (int i = 1; i <= side; ++i) {
        swap.image[i] = side + i;
        swap.image[side + i] = i;
    }
    gens.push_back(swap);
    return gens;
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
    return os.str();
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1, lineno = 0;
    std::vector<Edge> edges;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "n") {
            if (!(ls >> n)) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad vertex count");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad edge");
            edges.emplace_back(u, v);
        } else {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (n < 0) throw Error(ErrorCode::ParseError, "missing 'n' line");
    return Graph(n, std::move(edges));
}

// "kn:N" or "k1mm:M"
inline GraphPtr graph_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "graph spec '" + spec + "' needs kind:size");
    const std::string kind = spec.substr(0, colon);
    int size = 0;
    try {
        std::size_t used = 0;
        size = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad size in graph spec '" + spec + "'");
    }
    if (kind == "kn" && size >= 1) return make_graph(complete_graph(size));
    if (kind == "k1mm" && size >= 1) return make_graph(complete_tripartite_1mm(size).first);
    throw Error(ErrorCode::ParseError, "unknown graph spec '" + spec + "'");
}

inline std::string graph_spec(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return "kn:" + std::to_string(n);
    if (n % 2 == 1 && n >= 3 && g == complete_tripartite_1mm((n - 1) / 2).first) return "k1mm:" + std::to_string((n - 1) / 2);
    return "";
}

} // namespace cutbell
