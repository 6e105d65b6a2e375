#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cutbell/transforms.hpp"

namespace cutbell {

enum class GroupKind { full_Kn, restricted_G, tripartite_H };

// full_Kn: param = n. restricted_G: param = k on K_{2k+1}. tripartite_H: param = m on K_{1,m,m}.
struct GroupSpec {
    GroupKind kind = GroupKind::full_Kn;
    int param = 0;
};

inline std::string group_name(const GroupSpec& g) {
    switch (g.kind) {
    case GroupKind::full_Kn: return "full_Kn:" + std::to_string(g.param);
    case GroupKind::restricted_G: return "restricted_G:" + std::to_string(g.param);
    case GroupKind::tripartite_H: return "tripartite_H:" + std::to_string(g.param);
    }
    return "";
}

inline GroupSpec default_group(const Graph& g) {
    if (is_complete_graph(g)) return {GroupKind::full_Kn, g.vertex_count()};
    const int m = (g.vertex_count() - 1) / 2;
    if (m >= 1 && g.vertex_count() == 2 * m + 1 && g == complete_tripartite_1mm(m).first) return {GroupKind::tripartite_H, m};
    throw Error(ErrorCode::GraphMismatch, "no default symmetry group for this graph");
}

namespace detail {

// block 0: fixed apex; blocks 1, 2: the two sides (exchangeable when swap is set).
struct Blocks {
    std::vector<int> block;
    bool swap = false;
};

inline Blocks group_blocks(const GroupSpec& spec, const Graph& g) {
    Blocks b;
    const int n = g.vertex_count();
    if (spec.kind == GroupKind::full_Kn) {
        if (spec.param != n || !is_complete_graph(g)) throw Error(ErrorCode::GraphMismatch, "full_Kn group needs K_n with n = param");
        b.block.assign(n, 1);
        return b;
    }
    const int side = spec.param;
    if (n != 2 * side + 1) throw Error(ErrorCode::GraphMismatch, group_name(spec) + " does not match a graph on " + std::to_string(n) + " vertices");
    if (spec.kind == GroupKind::restricted_G && !is_complete_graph(g))
        throw Error(ErrorCode::GraphMismatch, "restricted_G needs a complete graph");
    if (spec.kind == GroupKind::tripartite_H && g != complete_tripartite_1mm(side).first)
        throw Error(ErrorCode::GraphMismatch, "tripartite_H needs K_{1,m,m}");
    b.block.assign(n, 1);
    b.block[0] = 0;
    for (int i = side + 1; i < n; ++i) b.block[i] = 2;
    b.swap = true;
    return b;
}

inline int mapped_block(int blk, bool swapped) { return (swapped && blk > 0) ? 3 - blk : blk; }

// Coefficients scaled to coprime integers (positive factor), rhs scaled alongside.
struct Scaled {
    std::vector<BigInt> coeffs;
    Rational rhs;
};

inline Scaled coefficient_primitive(const LinearInequality& f) {
    BigInt l = 1;
    for (const auto& c : f.coeffs) l = lcm_big(l, boost::multiprecision::denominator(c));
    Scaled s;
    s.coeffs.reserve(f.coeffs.size());
    BigInt g = 0;
    for (const auto& c : f.coeffs) {
        s.coeffs.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
        g = gcd_big(g, s.coeffs.back());
    }
    if (g == 0) throw Error(ErrorCode::ZeroInequality, "inequality has no nonzero coefficient");
    for (auto& c : s.coeffs) c /= g;
    s.rhs = f.rhs * Rational(l) / Rational(g);
    return s;
}

// Dense symmetric matrix of order-preserving small codes for coefficient values.
struct CodedMatrix {
    int n = 0;
    std::vector<int> w;
    int at(int u, int v) const { return w[u * n + v]; }
};

inline std::pair<CodedMatrix, CodedMatrix> code_pair(const Graph& g, const Scaled& a, const Scaled& b,
                                                     std::vector<BigInt>* values = nullptr) {
    std::vector<BigInt> abs_vals;
    for (const auto* s : {&a, &b})
        for (const auto& c : s->coeffs)
            if (c != 0) abs_vals.push_back(abs_big(c));
    std::sort(abs_vals.begin(), abs_vals.end());
    abs_vals.erase(std::unique(abs_vals.begin(), abs_vals.end()), abs_vals.end());
    auto code = [&](const BigInt& c) -> int {
        if (c == 0) return 0;
        const int r = static_cast<int>(std::lower_bound(abs_vals.begin(), abs_vals.end(), abs_big(c)) - abs_vals.begin()) + 1;
        return c > 0 ? r : -r;
    };
    const int n = g.vertex_count();
    CodedMatrix ma{n, std::vector<int>(n * n, 0)}, mb{n, std::vector<int>(n * n, 0)};
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        ma.w[u * n + v] = ma.w[v * n + u] = code(a.coeffs[e]);
        mb.w[u * n + v] = mb.w[v * n + u] = code(b.coeffs[e]);
    }
    if (values) *values = abs_vals;
    return {ma, mb};
}

inline std::vector<int> star(const CodedMatrix& m, int u) {
    std::vector<int> s;
    for (int v = 0; v < m.n; ++v)
        if (v != u && m.at(u, v) != 0) s.push_back(std::abs(m.at(u, v)));
    std::sort(s.begin(), s.end());
    return s;
}

inline int sgn(int x) { return (x > 0) - (x < 0); }

} // namespace detail

// Invariant of the equivalence class: global |coefficient| multiset, apex star and
// the per-side multisets of vertex stars (unordered pair when the sides may swap).
inline std::string fingerprint(const LinearInequality& f, const GroupSpec& spec) {
    const Graph& g = *f.graph;
    const auto blocks = detail::group_blocks(spec, g);
    const auto s = detail::coefficient_primitive(f);
    const int n = g.vertex_count();
    std::vector<std::vector<BigInt>> stars(n);
    std::vector<BigInt> global;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (s.coeffs[e] == 0) continue;
        auto [u, v] = g.edges()[e];
        const BigInt a = abs_big(s.coeffs[e]);
        stars[u].push_back(a);
        stars[v].push_back(a);
        global.push_back(a);
    }
    auto text = [](std::vector<BigInt> v) {
        std::sort(v.begin(), v.end());
        std::string t = "[";
        for (const auto& x : v) t += x.str() + ",";
        return t + "]";
    };
    std::vector<std::string> side[3];
    for (int u = 0; u < n; ++u) side[blocks.block[u]].push_back(text(stars[u]));
    for (auto& sd : side) std::sort(sd.begin(), sd.end());
    auto join = [](const std::vector<std::string>& v) {
        std::string t;
        for (const auto& x : v) t += x + ";";
        return t;
    };
    std::string a = join(side[1]), b = join(side[2]);
    if (blocks.swap && b < a) std::swap(a, b);
    return text(global) + "|" + join(side[0]) + "|" + a + "|" + b;
}

namespace detail {

struct EquivalenceSearch {
    const Graph& g;
    const Blocks& blocks;
    CodedMatrix src;  // f
    CodedMatrix dst;  // f'
    const LinearInequality* f;
    Scaled fs, ds;
    std::vector<int> order;
    std::vector<std::vector<int>> src_star, dst_star;
    bool swapped = false;
    std::vector<int> sigma, sign;
    std::vector<char> used;

    bool rhs_matches() const {
        // rhs' = rhs - sum over cut edges of the permuted coefficients
        Rational r = fs.rhs;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[e];
            if (sign[u] != sign[v]) r -= Rational(fs.coeffs[g.edge_index(sigma[u], sigma[v])]);
        }
        return r == ds.rhs;
    }

    bool extend(std::size_t i) {
        if (i == order.size()) return rhs_matches();
        const int t = order[i];
        const int want_block = mapped_block(blocks.block[t], swapped);
        for (int c = 0; c < g.vertex_count(); ++c) {
            if (used[c] || blocks.block[c] != want_block) continue;
            if (dst_star[t] != src_star[c]) continue;
            int s = 0;
            for (std::size_t j = 0; j < i && s == 0; ++j) {
                const int u = order[j];
                const int b = dst.at(u, t);
                if (b == 0) continue;
                const int a = src.at(sigma[u], c);
                if (a == 0) break;
                s = sgn(b) * sign[u] * sgn(a);
            }
            if (s == 0) s = 1;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                const int u = order[j];
                ok = dst.at(u, t) == sign[u] * s * src.at(sigma[u], c);
            }
            if (!ok) continue;
            sigma[t] = c;
            sign[t] = s;
            used[c] = 1;
            if (extend(i + 1)) return true;
            used[c] = 0;
        }
        return false;
    }
};

// Breadth-first order over the support of m, starting from the apex when fixed.
inline std::vector<int> support_order(const CodedMatrix& m, const Blocks& blocks) {
    const int n = m.n;
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    auto bfs = [&](int root) {
        std::vector<int> queue{root};
        seen[root] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int u = queue[h];
            order.push_back(u);
            for (int v = 0; v < n; ++v)
                if (!seen[v] && m.at(u, v) != 0) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
        }
    };
    for (int u = 0; u < n; ++u)
        if (blocks.block[u] == 0 && !seen[u]) bfs(u);
    // larger stars first: they constrain the search most
    std::vector<int> rest;
    for (int u = 0; u < n; ++u)
        if (!seen[u]) rest.push_back(u);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return star(m, a).size() > star(m, b).size(); });
    for (int u : rest)
        if (!seen[u]) bfs(u);
    return order;
}

} // namespace detail

// True iff f2 = λ · switching(permute(f1, σ), S) for some σ in the group, some S and λ > 0.
inline bool are_equivalent(const LinearInequality& f1, const LinearInequality& f2, const GroupSpec& spec) {
    require_same_graph(*f1.graph, *f2.graph);
    const Graph& g = *f1.graph;
    const auto blocks = detail::group_blocks(spec, g);
    auto a = detail::coefficient_primitive(f1);
    auto b = detail::coefficient_primitive(f2);
    auto [ma, mb] = detail::code_pair(g, a, b);
    detail::EquivalenceSearch s{g, blocks, ma, mb, &f1, a, b};
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        s.src_star.push_back(detail::star(ma, u));
        s.dst_star.push_back(detail::star(mb, u));
    }
    {
        auto x = s.src_star, y = s.dst_star;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    s.order = detail::support_order(mb, blocks);
    for (bool sw : {false, true}) {
        if (sw && !blocks.swap) break;
        s.swapped = sw;
        s.sigma.assign(n, -1);
        s.sign.assign(n, 0);
        s.used.assign(n, 0);
        if (s.extend(0)) return true;
    }
    return false;
}

// Among all switchings, the lexicographically least coefficient vector (graph edge
// order), then primitive-normalized.
inline LinearInequality switch_canonical(const LinearInequality& f) {
    if (!is_valid(f)) throw Error(ErrorCode::NotValid, "switch_canonical needs a valid inequality");
    const Graph& g = *f.graph;
    const int n = g.vertex_count();
    std::vector<int> s(n, 0);
    s[0] = 1;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& c = f.coeffs[e];
        if (c == 0) continue;
        auto [u, v] = g.edges()[e];
        const int cs = c > 0 ? 1 : -1;
        if (s[u] == 0 && s[v] == 0) s[u] = 1;
        if (s[v] == 0) s[v] = -s[u] * cs;
        else if (s[u] == 0) s[u] = -s[v] * cs;
    }
    std::vector<int> S;
    for (int u = 0; u < n; ++u)
        if (s[u] < 0) S.push_back(u);
    return primitive_normalize(switching(f, S));
}

struct CanonicalForm {
    std::vector<BigInt> key; // coefficients (graph edge order) then rhs numerator, rhs denominator
    LinearInequality representative;

    bool operator==(const CanonicalForm& o) const { return key == o.key; }
    bool operator<(const CanonicalForm& o) const { return key < o.key; }
};

namespace detail {

struct CanonicalSearch {
    const CodedMatrix& m;
    const Blocks& blocks;
    int n;
    bool swapped = false;
    std::vector<int> best;  // flattened colex rows
    std::vector<int> best_sigma, best_sign;
    bool have_best = false;
    std::size_t updates = 0;
    std::vector<int> sigma;
    std::vector<char> used;
    std::vector<int> cur;

    static std::size_t row_start(int t) { return static_cast<std::size_t>(t) * (t - 1) / 2; }

    // All sign completions of row t that are lexicographically minimal for this choice of σ(t).
    void rows(int t, std::size_t u, std::vector<int>& sign, std::vector<int>& row,
              std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
        for (; u < static_cast<std::size_t>(t); ++u) {
            const int a = m.at(sigma[u], sigma[t]);
            if (a == 0) {
                row.push_back(0);
                continue;
            }
            const int su = sign[u], st = sign[t];
            if (su != 0 && st != 0) {
                row.push_back(su * st * a);
                continue;
            }
            if (su == 0 && st == 0) {
                for (int choice : {1, -1}) {
                    auto s2 = sign;
                    auto r2 = row;
                    s2[u] = choice;
                    s2[t] = -choice * sgn(a);
                    r2.push_back(-std::abs(a));
                    rows(t, u + 1, s2, r2, out);
                }
                return;
            }
            if (st == 0) sign[t] = -su * sgn(a);
            else sign[u] = -st * sgn(a);
            row.push_back(-std::abs(a));
        }
        out.emplace_back(sign, row);
    }

    void run(int t, std::vector<int> sign, bool less) {
        if (t == n) {
            if (!have_best || less) {
                best = cur;
                best_sigma = sigma;
                best_sign = sign;
                have_best = true;
                ++updates;
            }
            return;
        }
        const int want = mapped_block(blocks.block[t], swapped);
        for (int c = 0; c < n; ++c) {
            if (used[c] || blocks.block[c] != want) continue;
            sigma[t] = c;
            used[c] = 1;
            std::vector<std::pair<std::vector<int>, std::vector<int>>> variants;
            std::vector<int> row;
            auto sg = sign;
            rows(t, 0, sg, row, variants);
            for (auto& [s2, r] : variants) {
                bool l2 = less;
                if (have_best && !less) {
                    const auto cmp = std::lexicographical_compare_three_way(
                        r.begin(), r.end(), best.begin() + row_start(t), best.begin() + row_start(t) + t);
                    if (cmp > 0) continue;
                    l2 = cmp < 0;
                }
                cur.resize(row_start(t));
                cur.insert(cur.end(), r.begin(), r.end());
                const std::size_t before = updates;
                run(t + 1, s2, l2);
                // a new best from this subtree shares the prefix of every open frame
                if (updates != before) less = false;
            }
            used[c] = 0;
        }
    }
};

} // namespace detail

// Least representative under the group and switching: coefficients scaled to coprime
// integers, lexicographically least in colex edge order.
inline CanonicalForm canonical_form(const LinearInequality& f, const GroupSpec& spec) {
    const Graph& g = *f.graph;
    const auto blocks = detail::group_blocks(spec, g);
    const auto sc = detail::coefficient_primitive(f);
    std::vector<BigInt> values;
    auto [m, unused] = detail::code_pair(g, sc, sc, &values);
    const int n = g.vertex_count();
    std::vector<int> best_rows, best_sigma, best_sign;
    bool have = false;
    for (bool sw : {false, true}) {
        if (sw && !blocks.swap) break;
        detail::CanonicalSearch s{m, blocks, n};
        s.swapped = sw;
        if (have) {
            s.best = best_rows;
            s.have_best = true;
        }
        s.sigma.assign(n, -1);
        s.used.assign(n, 0);
        std::vector<int> sign(n, 0);
        s.run(0, sign, false);
        if (!s.best_sigma.empty()) {
            best_rows = s.best;
            best_sigma = s.best_sigma;
            best_sign = s.best_sign;
            have = true;
        }
    }
    // rebuild the representative: coefficient uv = s_u s_v f_{σu σv}
    LinearInequality p(f.graph);
    p.rhs = sc.rhs;
    std::vector<int> S;
    for (int u = 0; u < n; ++u) {
        if (best_sign[u] == 0) best_sign[u] = 1;
        if (best_sign[u] < 0) S.push_back(u);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        p.coeffs[e] = Rational(sc.coeffs[g.edge_index(best_sigma[u], best_sigma[v])]);
    }
    CanonicalForm out;
    out.representative = switching(p, S);
    for (const auto& c : out.representative.coeffs) out.key.push_back(boost::multiprecision::numerator(c));
    out.key.push_back(boost::multiprecision::numerator(out.representative.rhs));
    out.key.push_back(boost::multiprecision::denominator(out.representative.rhs));
    return out;
}

struct ClassificationResult {
    std::size_t class_count = 0;
    std::vector<LinearInequality> representatives;
    std::vector<std::size_t> class_sizes;
    std::vector<std::size_t> class_of; // per input
};

// Fingerprint buckets, then pairwise search against class representatives within
// a bucket. Classes are reported ordered by canonical key.
inline ClassificationResult classify(const std::vector<LinearInequality>& ineqs, const GroupSpec& spec, unsigned jobs = 1) {
    ClassificationResult res;
    if (ineqs.empty()) return res;
    for (const auto& f : ineqs) require_same_graph(*ineqs[0].graph, *f.graph);
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < ineqs.size(); ++i) buckets[fingerprint(ineqs[i], spec)].push_back(i);
    std::vector<std::vector<std::size_t>*> work;
    for (auto& [k, v] : buckets) work.push_back(&v);

    struct Local {
        std::vector<std::size_t> reps;   // input index of each class's first member
        std::vector<std::size_t> sizes;
        std::vector<std::pair<std::size_t, std::size_t>> members; // (input, local class)
    };
    std::vector<Local> locals(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t w = next++;
            if (w >= work.size()) return;
            Local& L = locals[w];
            for (std::size_t i : *work[w]) {
                std::size_t cls = L.reps.size();
                for (std::size_t c = 0; c < L.reps.size(); ++c)
                    if (are_equivalent(ineqs[i], ineqs[L.reps[c]], spec)) {
                        cls = c;
                        break;
                    }
                if (cls == L.reps.size()) {
                    L.reps.push_back(i);
                    L.sizes.push_back(0);
                }
                ++L.sizes[cls];
                L.members.emplace_back(i, cls);
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    struct Entry {
        CanonicalForm form;
        std::size_t size;
        std::vector<std::size_t> members;
    };
    std::vector<Entry> entries;
    for (auto& L : locals) {
        std::vector<Entry> here(L.reps.size());
        for (std::size_t c = 0; c < L.reps.size(); ++c) {
            here[c].form = canonical_form(ineqs[L.reps[c]], spec);
            here[c].size = L.sizes[c];
        }
        for (auto [i, c] : L.members) here[c].members.push_back(i);
        for (auto& e : here) entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.form < b.form; });
    res.class_count = entries.size();
    res.class_of.assign(ineqs.size(), 0);
    for (std::size_t c = 0; c < entries.size(); ++c) {
        res.representatives.push_back(entries[c].form.representative);
        res.class_sizes.push_back(entries[c].size);
        for (auto i : entries[c].members) res.class_of[i] = c;
    }
    return res;
}

inline std::string format_classification(const ClassificationResult& r) {
    std::ostringstream os;
    for (std::size_t c = 0; c < r.class_count; ++c)
        os << "class " << c << " size " << r.class_sizes[c] << " rep " << format_inequality(r.representatives[c]) << "\n";
    os << "classes " << r.class_count << "\n";
    return os.str();
}

// Triangle pattern: exactly three nonzero coefficients forming a triangle.
inline bool is_triangle_type(const LinearInequality& f) {
    const auto& edges = f.graph->edges();
    std::vector<int> verts;
    int count = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (f.coeffs[e] == 0) continue;
        ++count;
        verts.push_back(edges[e].first);
        verts.push_back(edges[e].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return count == 3 && verts.size() == 3;
}

// Source-side group for the elimination of an inequality on K_n: restricted_G on
// K_n (odd n) or on the zero-lift to K_{n+1} (even n).
inline std::pair<LinearInequality, GroupSpec> restricted_source(const LinearInequality& f) {
    const int n = f.graph->vertex_count();
    if (n % 2 == 1) return {f, {GroupKind::restricted_G, (n - 1) / 2}};
    return {zero_lift(f, make_graph(complete_graph(n + 1))), {GroupKind::restricted_G, n / 2}};
}

inline bool source_target_consistency(const LinearInequality& f1, const LinearInequality& f2) {
    require_same_graph(*f1.graph, *f2.graph);
    auto [a, spec] = restricted_source(f1);
    auto b = restricted_source(f2).first;
    const bool source = are_equivalent(a, b, spec);
    const auto e1 = eliminate_to_tripartite(f1).result;
    const auto e2 = eliminate_to_tripartite(f2).result;
    const bool target = are_equivalent(e1, e2, default_group(*e1.graph));
    return source == target;
}

// External facet lists: header lines "n <N>", "order lex|colex|<u-v ...>",
// "rhs last|first|none", then one whitespace-separated integer row per inequality.
// Rows state a.x <= rhs.
inline std::vector<LinearInequality> import_facets(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::string order = "lex", rhs_mode = "last";
    std::vector<Edge> declared;
    std::vector<LinearInequality> out;
    GraphPtr g;
    std::vector<int> target_index;
    int lineno = 0;
    auto prepare = [&] {
        if (g) return;
        if (n < 1) throw Error(ErrorCode::ParseError, "missing 'n' header before data rows");
        g = make_graph(complete_graph(n));
        if (order == "lex") {
            declared = g->edges();
        } else if (order == "colex") {
            declared.clear();
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u) declared.emplace_back(u, v);
        }
        if (declared.size() != g->edge_count())
            throw Error(ErrorCode::ParseError, "edge order lists " + std::to_string(declared.size()) + " edges, K_n has " +
                                                   std::to_string(g->edge_count()));
        target_index.clear();
        std::vector<char> hit(g->edge_count(), 0);
        for (auto [u, v] : declared) {
            const int idx = g->edge_index(u, v);
            if (idx < 0 || hit[idx]) throw Error(ErrorCode::ParseError, "bad or repeated edge in order header");
            hit[idx] = 1;
            target_index.push_back(idx);
        }
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "n") {
            if (!(ls >> n)) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad n");
            continue;
        }
        if (tok == "order") {
            std::vector<std::string> parts;
            while (ls >> tok) parts.push_back(tok);
            if (parts.size() == 1 && (parts[0] == "lex" || parts[0] == "colex")) {
                order = parts[0];
            } else {
                order = "explicit";
                declared.clear();
                for (const auto& p : parts) {
                    const auto dash = p.find('-');
                    if (dash == std::string::npos) throw Error(ErrorCode::ParseError, "bad edge '" + p + "' in order header");
                    declared.emplace_back(std::stoi(p.substr(0, dash)), std::stoi(p.substr(dash + 1)));
                }
            }
            continue;
        }
        if (tok == "rhs") {
            if (!(ls >> rhs_mode) || (rhs_mode != "last" && rhs_mode != "first" && rhs_mode != "none"))
                throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": rhs must be last, first or none");
            continue;
        }
        prepare();
        std::vector<Rational> vals{parse_rational(tok)};
        while (ls >> tok) vals.push_back(parse_rational(tok));
        const std::size_t want = g->edge_count() + (rhs_mode == "none" ? 0 : 1);
        if (vals.size() != want)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(want) + " numbers");
        LinearInequality f(g);
        std::size_t off = 0;
        if (rhs_mode == "first") f.rhs = vals[off++];
        for (std::size_t i = 0; i < g->edge_count(); ++i) f.coeffs[target_index[i]] = vals[off + i];
        if (rhs_mode == "last") f.rhs = vals.back();
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace cutbell
