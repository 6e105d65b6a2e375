#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cutbell/cut.hpp"

namespace cutbell {

struct Setting {
    int n = 2; // parties
    int m = 2; // observables per party
    int v = 2; // values per observable

    std::size_t table_size() const {
        std::size_t s = 1;
        for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(m) * v;
        return s;
    }
    std::size_t vertex_count() const {
        std::size_t s = 1;
        for (int i = 0; i < n * m; ++i) s *= static_cast<std::size_t>(v);
        return s;
    }
    bool operator==(const Setting& o) const { return n == o.n && m == o.m && v == o.v; }
    bool operator!=(const Setting& o) const { return !(*this == o); }
};

inline std::string format_setting(const Setting& s) {
    return std::to_string(s.n) + "," + std::to_string(s.m) + "," + std::to_string(s.v);
}

// Joint observable-outcome tuple ((j1,k1),...,(jn,kn)), 1-based.
using Tuple = std::vector<std::pair<int, int>>;

inline std::size_t tuple_index(const Setting& s, const Tuple& t) {
    std::size_t idx = 0;
    for (int i = 0; i < s.n; ++i) idx = idx * (s.m * s.v) + (t[i].first - 1) * s.v + (t[i].second - 1);
    return idx;
}

inline Tuple index_tuple(const Setting& s, std::size_t idx) {
    Tuple t(s.n);
    const std::size_t base = static_cast<std::size_t>(s.m) * s.v;
    for (int i = s.n - 1; i >= 0; --i) {
        const std::size_t d = idx % base;
        idx /= base;
        t[i] = {static_cast<int>(d / s.v) + 1, static_cast<int>(d % s.v) + 1};
    }
    return t;
}

inline std::string format_tuple(const Tuple& t) {
    std::string out;
    for (auto [j, k] : t) out += "(" + std::to_string(j) + "," + std::to_string(k) + ")";
    return out;
}

struct CorrelationTable {
    Setting setting;
    RationalVector entries;

    Rational& at(const Tuple& t) { return entries[tuple_index(setting, t)]; }
    const Rational& at(const Tuple& t) const { return entries[tuple_index(setting, t)]; }
    bool operator==(const CorrelationTable& o) const { return setting == o.setting && entries == o.entries; }
};

struct BellInequality {
    Setting setting;
    RationalVector coeffs;
    Rational rhs = 0;

    BellInequality() = default;
    explicit BellInequality(Setting s) : setting(s), coeffs(s.table_size()), rhs(0) {}

    Rational& at(const Tuple& t) { return coeffs[tuple_index(setting, t)]; }
    const Rational& at(const Tuple& t) const { return coeffs[tuple_index(setting, t)]; }
    bool operator==(const BellInequality& o) const {
        return setting == o.setting && coeffs == o.coeffs && rhs == o.rhs;
    }
};

inline void check_vertex_budget(const Setting& s) {
    if (s.n < 1 || s.m < 1 || s.v < 1) throw Error(ErrorCode::SettingMismatch, "setting parameters must be >= 1");
    double bits = static_cast<double>(s.n) * s.m * std::log2(static_cast<double>(s.v));
    if (bits > enumeration_limit())
        throw Error(ErrorCode::TooLarge, "v^(nm) = " + std::to_string(s.v) + "^" + std::to_string(s.n * s.m) +
                                             " exceeds the enumeration limit");
}

// Calls cb(c, ones) for every deterministic strategy c (row-major n x m, values 1..v),
// ones = table indices where β(c) is 1. Order: lexicographic in c.
template <class Fn>
void for_each_bell_vertex(const Setting& s, Fn&& cb) {
    check_vertex_budget(s);
    const int cells = s.n * s.m;
    std::vector<int> c(cells, 1);
    std::size_t per = 1;
    for (int i = 0; i < s.n; ++i) per *= s.m;
    std::vector<std::size_t> ones(per);
    for (;;) {
        for (std::size_t t = 0; t < per; ++t) {
            std::size_t rest = t, idx = 0;
            std::vector<int> js(s.n);
            for (int i = s.n - 1; i >= 0; --i) {
                js[i] = static_cast<int>(rest % s.m);
                rest /= s.m;
            }
            for (int i = 0; i < s.n; ++i) idx = idx * (s.m * s.v) + js[i] * s.v + (c[i * s.m + js[i]] - 1);
            ones[t] = idx;
        }
        if (!cb(static_cast<const std::vector<int>&>(c), static_cast<const std::vector<std::size_t>&>(ones))) return;
        int pos = cells - 1;
        while (pos >= 0 && c[pos] == s.v) c[pos--] = 1;
        if (pos < 0) return;
        ++c[pos];
    }
}

inline std::vector<std::int64_t> bell_vertex_row(const Setting& s, const std::vector<std::size_t>& ones) {
    std::vector<std::int64_t> row(s.table_size(), 0);
    for (auto i : ones) row[i] = 1;
    return row;
}

inline std::vector<CorrelationTable> bell_vertices(const Setting& s) {
    std::vector<CorrelationTable> out;
    for_each_bell_vertex(s, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
        CorrelationTable t{s, RationalVector(s.table_size())};
        for (auto i : ones) t.entries[i] = 1;
        out.push_back(std::move(t));
        return true;
    });
    return out;
}

inline std::vector<std::vector<std::int64_t>> bell_vertex_rows(const Setting& s) {
    std::vector<std::vector<std::int64_t>> out;
    for_each_bell_vertex(s, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
        out.push_back(bell_vertex_row(s, ones));
        return true;
    });
    return out;
}

inline bool check_normalization(const CorrelationTable& q) {
    const Setting& s = q.setting;
    std::map<std::vector<int>, Rational> per_j;
    for (std::size_t i = 0; i < q.entries.size(); ++i) {
        auto t = index_tuple(s, i);
        std::vector<int> js;
        for (auto [j, k] : t) js.push_back(j);
        per_j[js] += q.entries[i];
    }
    for (const auto& [js, sum] : per_j)
        if (sum != 1) return false;
    return true;
}

// Marginal of party i's outcome summed out, keyed by the other parties' (j,k)
// and party i's observable; checks it does not depend on that observable.
inline bool check_no_signaling(const CorrelationTable& q) {
    const Setting& s = q.setting;
    for (int party = 0; party < s.n; ++party) {
        std::map<std::pair<Tuple, int>, Rational> marg;
        for (std::size_t i = 0; i < q.entries.size(); ++i) {
            auto t = index_tuple(s, i);
            const int j = t[party].first;
            t.erase(t.begin() + party);
            marg[{t, j}] += q.entries[i];
        }
        for (const auto& [key, val] : marg) {
            auto first = marg.find({key.first, 1});
            if (first->second != val) return false;
        }
    }
    return true;
}

inline long bell_dimension_formula(const Setting& s) {
    long base = static_cast<long>(s.m) * (s.v - 1) + 1, r = 1;
    for (int i = 0; i < s.n; ++i) r *= base;
    return r - 1;
}

inline long bell_dimension(const Setting& s, bool verify) {
    const long d = bell_dimension_formula(s);
    if (!verify) return d;
    std::vector<std::vector<std::int64_t>> rows;
    bool ok = true;
    for_each_bell_vertex(s, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
        CorrelationTable t{s, RationalVector(s.table_size())};
        for (auto i : ones) t.entries[i] = 1;
        if (!check_normalization(t) || !check_no_signaling(t)) ok = false;
        rows.push_back(bell_vertex_row(s, ones));
        return ok;
    });
    if (!ok) throw Error(ErrorCode::VerificationFailed, "a vertex violates normalization or no-signaling");
    const long r = affine_rank(rows);
    if (r != d)
        throw Error(ErrorCode::VerificationFailed,
                    "affine rank " + std::to_string(r) + " differs from formula " + std::to_string(d));
    return d;
}

inline Rational evaluate(const BellInequality& b, const CorrelationTable& q) {
    if (b.setting != q.setting) throw Error(ErrorCode::SettingMismatch, "setting mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < q.entries.size(); ++i)
        if (b.coeffs[i] != 0 && q.entries[i] != 0) s += b.coeffs[i] * q.entries[i];
    return s;
}

namespace detail {

template <class T>
FacetReport bell_facet_scan(const Setting& s, const std::vector<T>& a, const T& rhs) {
    FacetReport r;
    bool valid = true, hom = true;
    std::size_t roots = 0;
    auto value = [&](const std::vector<std::size_t>& ones) {
        T v = 0;
        for (auto i : ones) v += a[i];
        return v;
    };
    for_each_bell_vertex(s, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
        const T v = value(ones);
        if (v > rhs) valid = false;
        if (v > 0) hom = false;
        if (v == rhs) ++roots;
        return true;
    });
    r.valid = valid;
    r.homogeneous_valid = hom && rhs >= 0;
    r.root_count = roots;
    if (roots == 0) return r;
    const std::size_t d = s.table_size();
    const std::size_t rank = streamed_rank<std::int64_t>(d + 1, [&](auto&& emit) {
        for_each_bell_vertex(s, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
            if (value(ones) != rhs) return true;
            auto row = bell_vertex_row(s, ones);
            row.push_back(1);
            return static_cast<bool>(emit(row));
        });
    });
    r.affine_root_rank = static_cast<long>(rank) - 1;
    r.is_facet = r.valid && r.affine_root_rank == bell_dimension_formula(s) - 1;
    return r;
}

} // namespace detail

// Validity and facet test against B(n,m,v): facet iff the roots have affine
// rank dim - 1.
inline FacetReport bell_facet_status(const BellInequality& b) {
    const auto form = detail::integer_form(b.coeffs, b.rhs);
    if (form.small) return detail::bell_facet_scan<std::int64_t>(b.setting, form.c, form.rhs);
    return detail::bell_facet_scan<BigInt>(b.setting, form.cb, form.rhsb);
}

inline bool bell_is_valid(const BellInequality& b) {
    const auto form = detail::integer_form(b.coeffs, b.rhs);
    bool ok = true;
    if (form.small) {
        for_each_bell_vertex(b.setting, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
            std::int64_t v = 0;
            for (auto i : ones) v += form.c[i];
            return ok = (v <= form.rhs);
        });
    } else {
        for_each_bell_vertex(b.setting, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
            BigInt v = 0;
            for (auto i : ones) v += form.cb[i];
            return ok = (v <= form.rhsb);
        });
    }
    return ok;
}

// ---- (2,m,2): Collins-Gisin view and the cut isomorphism ----

struct CGTable {
    int m_a = 0;
    int m_b = 0;
    RationalVector a_marg;
    RationalVector b_marg;
    std::vector<RationalVector> joint; // m_a x m_b
    Rational rhs = 0;

    CGTable() = default;
    CGTable(int ma, int mb) : m_a(ma), m_b(mb), a_marg(ma), b_marg(mb), joint(ma, RationalVector(mb)), rhs(0) {}

    bool operator==(const CGTable& o) const {
        return m_a == o.m_a && m_b == o.m_b && a_marg == o.a_marg && b_marg == o.b_marg && joint == o.joint && rhs == o.rhs;
    }
};

inline CGTable pad_cg(const CGTable& t, int m) {
    if (m < t.m_a || m < t.m_b) throw Error(ErrorCode::SettingMismatch, "cannot pad to a smaller size");
    CGTable r(m, m);
    r.rhs = t.rhs;
    for (int j = 0; j < t.m_a; ++j) r.a_marg[j] = t.a_marg[j];
    for (int j = 0; j < t.m_b; ++j) r.b_marg[j] = t.b_marg[j];
    for (int i = 0; i < t.m_a; ++i)
        for (int j = 0; j < t.m_b; ++j) r.joint[i][j] = t.joint[i][j];
    return r;
}

inline void require_2m2(const Setting& s) {
    if (s.n != 2 || s.v != 2) throw Error(ErrorCode::SettingMismatch, "operation needs a (2,m,2) setting");
}

inline CGTable to_cg_table(const BellInequality& b) {
    require_2m2(b.setting);
    const int m = b.setting.m;
    CGTable t(m, m);
    Rational constant = 0;
    for (int j = 1; j <= m; ++j)
        for (int jp = 1; jp <= m; ++jp) {
            const Rational& c11 = b.at({{j, 1}, {jp, 1}});
            const Rational& c12 = b.at({{j, 1}, {jp, 2}});
            const Rational& c21 = b.at({{j, 2}, {jp, 1}});
            const Rational& c22 = b.at({{j, 2}, {jp, 2}});
            t.a_marg[j - 1] += c21 - c11;
            t.b_marg[jp - 1] += c12 - c11;
            t.joint[j - 1][jp - 1] += c22 - c21 - c12 + c11;
            constant += c11;
        }
    t.rhs = b.rhs - constant;
    return t;
}

inline BellInequality from_cg_table(const CGTable& t0) {
    const int m = std::max(t0.m_a, t0.m_b);
    const CGTable t = pad_cg(t0, m);
    BellInequality b(Setting{2, m, 2});
    for (int j = 1; j <= m; ++j) {
        b.at({{j, 2}, {1, 2}}) += t.a_marg[j - 1];
        b.at({{j, 2}, {1, 1}}) += t.a_marg[j - 1];
        b.at({{1, 2}, {j, 2}}) += t.b_marg[j - 1];
        b.at({{1, 1}, {j, 2}}) += t.b_marg[j - 1];
    }
    for (int j = 1; j <= m; ++j)
        for (int jp = 1; jp <= m; ++jp) b.at({{j, 2}, {jp, 2}}) += t.joint[j - 1][jp - 1];
    b.rhs = t.rhs;
    return b;
}

inline GraphPtr tripartite_graph(int m) {
    static thread_local std::map<int, GraphPtr> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto g = make_graph(complete_tripartite_1mm(m).first);
    cache.emplace(m, g);
    return g;
}

inline int graph_m(const Graph& g) {
    const int m = (g.vertex_count() - 1) / 2;
    if (m < 1 || g != *tripartite_graph(m)) throw Error(ErrorCode::GraphMismatch, "graph is not K_{1,m,m}");
    return m;
}

inline LinearInequality cg_to_cut(const CGTable& t0) {
    const int m = std::max(t0.m_a, t0.m_b);
    const CGTable t = pad_cg(t0, m);
    LinearInequality f(tripartite_graph(m));
    for (int j = 1; j <= m; ++j) {
        Rational row = 0, col = 0;
        for (int jp = 1; jp <= m; ++jp) row += t.joint[j - 1][jp - 1];
        for (int i = 1; i <= m; ++i) col += t.joint[i - 1][j - 1];
        f.coef(0, j) = t.a_marg[j - 1] + row / 2;
        f.coef(0, m + j) = t.b_marg[j - 1] + col / 2;
    }
    for (int j = 1; j <= m; ++j)
        for (int jp = 1; jp <= m; ++jp) f.coef(j, m + jp) = -t.joint[j - 1][jp - 1] / 2;
    f.rhs = t.rhs;
    return f;
}

inline CGTable cut_to_cg(const LinearInequality& f) {
    const int m = graph_m(*f.graph);
    CGTable t(m, m);
    for (int j = 1; j <= m; ++j) {
        t.a_marg[j - 1] = f.coef(0, j);
        t.b_marg[j - 1] = f.coef(0, m + j);
    }
    for (int j = 1; j <= m; ++j)
        for (int jp = 1; jp <= m; ++jp) {
            const Rational a = f.coef(j, m + jp);
            t.a_marg[j - 1] += a;
            t.b_marg[jp - 1] += a;
            t.joint[j - 1][jp - 1] = -2 * a;
        }
    t.rhs = f.rhs;
    return t;
}

inline BellInequality cut_ineq_to_bell(const LinearInequality& f) { return from_cg_table(cut_to_cg(f)); }

inline LinearInequality bell_ineq_to_cut(const BellInequality& b) { return cg_to_cut(to_cg_table(b)); }

inline RationalVector bell_point_to_cut(const CorrelationTable& q) {
    require_2m2(q.setting);
    const int m = q.setting.m;
    if (!check_normalization(q)) throw Error(ErrorCode::NotNoSignaling, "table is not normalized");
    if (!check_no_signaling(q)) throw Error(ErrorCode::NotNoSignaling, "marginals depend on the other party's observable");
    auto g = tripartite_graph(m);
    RationalVector x(g->edge_count());
    for (int j = 1; j <= m; ++j) {
        x[g->edge_index(0, j)] = q.at({{j, 2}, {1, 2}}) + q.at({{j, 2}, {1, 1}});
        x[g->edge_index(0, m + j)] = q.at({{1, 2}, {j, 2}}) + q.at({{1, 1}, {j, 2}});
    }
    for (int j = 1; j <= m; ++j)
        for (int jp = 1; jp <= m; ++jp)
            x[g->edge_index(j, m + jp)] = q.at({{j, 2}, {jp, 1}}) + q.at({{j, 1}, {jp, 2}});
    return x;
}

inline CorrelationTable cut_point_to_bell(const RationalVector& x, int m) {
    auto g = tripartite_graph(m);
    if (x.size() != g->edge_count()) throw Error(ErrorCode::DimensionMismatch, "vector does not match K_{1,m,m}");
    CorrelationTable q{Setting{2, m, 2}, RationalVector(Setting{2, m, 2}.table_size())};
    for (int j = 1; j <= m; ++j)
        for (int jp = 1; jp <= m; ++jp) {
            const Rational& xa = x[g->edge_index(0, j)];
            const Rational& xb = x[g->edge_index(0, m + jp)];
            const Rational& xab = x[g->edge_index(j, m + jp)];
            const Rational q22 = (xa + xb - xab) / 2;
            q.at({{j, 2}, {jp, 2}}) = q22;
            q.at({{j, 2}, {jp, 1}}) = xa - q22;
            q.at({{j, 1}, {jp, 2}}) = xb - q22;
            q.at({{j, 1}, {jp, 1}}) = 1 - xa - xb + q22;
        }
    return q;
}

// ---- correlation polytope and suspension ----

struct CorVector {
    GraphPtr graph;
    RationalVector entries; // vertices first, then edges in canonical order
};

inline std::vector<CorVector> cor_vertices(const GraphPtr& g) {
    const int n = g->vertex_count();
    if (n > enumeration_limit() || n > 62) throw Error(ErrorCode::TooLarge, "too many vertices for COR enumeration");
    std::vector<CorVector> out;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
        CorVector c{g, RationalVector(n + g->edge_count())};
        for (int u = 0; u < n; ++u) c.entries[u] = (s >> u) & 1;
        for (std::size_t e = 0; e < g->edge_count(); ++e) {
            auto [u, v] = g->edges()[e];
            c.entries[n + e] = ((s >> u) & (s >> v)) & 1;
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Suspension ∇G: apex 0, vertex u of G becomes u+1.
inline GraphPtr suspension(const Graph& g) {
    std::vector<Edge> e;
    for (int u = 0; u < g.vertex_count(); ++u) e.emplace_back(0, u + 1);
    for (auto [u, v] : g.edges()) e.emplace_back(u + 1, v + 1);
    return make_graph(Graph(g.vertex_count() + 1, std::move(e)));
}

inline RationalVector cor_point_to_cut(const CorVector& p) {
    const Graph& g = *p.graph;
    const int n = g.vertex_count();
    auto s = suspension(g);
    RationalVector x(s->edge_count());
    for (int u = 0; u < n; ++u) x[s->edge_index(0, u + 1)] = p.entries[u];
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        x[s->edge_index(u + 1, v + 1)] = p.entries[u] + p.entries[v] - 2 * p.entries[n + e];
    }
    return x;
}

// ---- text formats ----

inline std::string format_cg(const CGTable& t) {
    std::ostringstream os;
    os << "cg " << t.m_a << " " << t.m_b << " rhs " << to_string(t.rhs) << "\n";
    for (int j = 0; j < t.m_b; ++j) os << (j ? " " : "") << to_string(t.b_marg[j]);
    os << "\n";
    for (int i = 0; i < t.m_a; ++i) {
        os << to_string(t.a_marg[i]) << " |";
        for (int j = 0; j < t.m_b; ++j) os << " " << to_string(t.joint[i][j]);
        os << "\n";
    }
    return os.str();
}

inline CGTable parse_cg(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) {
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw Error(ErrorCode::ParseError, "empty CG table");
    std::istringstream hs(lines[0]);
    std::string tag, rhs_tag, rhs;
    int ma, mb;
    if (!(hs >> tag >> ma >> mb >> rhs_tag >> rhs) || tag != "cg" || rhs_tag != "rhs" || ma < 1 || mb < 1)
        throw Error(ErrorCode::ParseError, "bad CG header '" + lines[0] + "'");
    if (lines.size() != static_cast<std::size_t>(ma) + 2)
        throw Error(ErrorCode::ParseError, "CG table needs " + std::to_string(ma + 2) + " lines");
    CGTable t(ma, mb);
    t.rhs = parse_rational(rhs);
    std::istringstream bs(lines[1]);
    std::string tok;
    for (int j = 0; j < mb; ++j) {
        if (!(bs >> tok)) throw Error(ErrorCode::ParseError, "b_marg row too short");
        t.b_marg[j] = parse_rational(tok);
    }
    if (bs >> tok) throw Error(ErrorCode::ParseError, "b_marg row too long");
    for (int i = 0; i < ma; ++i) {
        const auto& l = lines[i + 2];
        const auto bar = l.find('|');
        if (bar == std::string::npos) throw Error(ErrorCode::ParseError, "CG row " + std::to_string(i + 1) + " missing '|'");
        std::istringstream as(l.substr(0, bar)), js(l.substr(bar + 1));
        if (!(as >> tok)) throw Error(ErrorCode::ParseError, "CG row missing marginal");
        t.a_marg[i] = parse_rational(tok);
        for (int j = 0; j < mb; ++j) {
            if (!(js >> tok)) throw Error(ErrorCode::ParseError, "CG row " + std::to_string(i + 1) + " too short");
            t.joint[i][j] = parse_rational(tok);
        }
        if (js >> tok) throw Error(ErrorCode::ParseError, "CG row " + std::to_string(i + 1) + " too long");
    }
    return t;
}

inline std::string format_bell(const BellInequality& b) {
    std::ostringstream os;
    os << to_string(b.rhs) << " |";
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        if (b.coeffs[i] != 0) os << " " << format_tuple(index_tuple(b.setting, i)) << ":" << to_string(b.coeffs[i]);
    return os.str();
}

inline BellInequality parse_bell(const Setting& s, const std::string& line) {
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw Error(ErrorCode::ParseError, "missing '|' in Bell inequality");
    BellInequality b(s);
    std::istringstream rs(line.substr(0, bar));
    std::string tok;
    if (!(rs >> tok)) throw Error(ErrorCode::ParseError, "missing rhs");
    b.rhs = parse_rational(tok);
    std::istringstream ts(line.substr(bar + 1));
    while (ts >> tok) {
        const auto colon = tok.rfind(':');
        if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "bad term '" + tok + "'");
        Tuple t;
        std::size_t p = 0;
        const std::string key = tok.substr(0, colon);
        while (p < key.size()) {
            int j, k;
            char c1, c2, c3;
            std::istringstream ks(key.substr(p));
            if (!(ks >> c1 >> j >> c2 >> k >> c3) || c1 != '(' || c2 != ',' || c3 != ')')
                throw Error(ErrorCode::ParseError, "bad tuple in '" + tok + "'");
            t.emplace_back(j, k);
            p = key.find(')', p) + 1;
        }
        if (static_cast<int>(t.size()) != s.n) throw Error(ErrorCode::ParseError, "tuple arity in '" + tok + "'");
        for (auto [j, k] : t)
            if (j < 1 || j > s.m || k < 1 || k > s.v) throw Error(ErrorCode::ParseError, "tuple out of range in '" + tok + "'");
        b.at(t) += parse_rational(tok.substr(colon + 1));
    }
    return b;
}

inline std::vector<std::string> bell_labels(const Setting& s) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < s.table_size(); ++i) l.push_back(format_tuple(index_tuple(s, i)));
    return l;
}

inline std::vector<std::string> edge_labels(const Graph& g) {
    std::vector<std::string> l;
    for (auto [u, v] : g.edges()) l.push_back(std::to_string(u) + "-" + std::to_string(v));
    return l;
}

} // namespace cutbell
