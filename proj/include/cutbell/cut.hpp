#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cutbell/graph.hpp"
#include "cutbell/linalg.hpp"

namespace cutbell {

inline int enumeration_limit() {
    if (const char* s = std::getenv("CUTBELL_LIMIT")) {
        const int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 24;
}

struct LinearInequality {
    GraphPtr graph;
    RationalVector coeffs;
    Rational rhs = 0;

    LinearInequality() = default;
    LinearInequality(GraphPtr g, RationalVector c, Rational r) : graph(std::move(g)), coeffs(std::move(c)), rhs(std::move(r)) {
        if (coeffs.size() != graph->edge_count())
            throw Error(ErrorCode::DimensionMismatch, "coefficient count does not match edge count");
    }
    explicit LinearInequality(GraphPtr g) : graph(std::move(g)), coeffs(graph->edge_count()), rhs(0) {}

    Rational& coef(int u, int v) {
        const int i = graph->edge_index(u, v);
        if (i < 0) throw Error(ErrorCode::EdgeAbsent, "edge " + std::to_string(u) + "-" + std::to_string(v));
        return coeffs[i];
    }
    Rational coef(int u, int v) const {
        const int i = graph->edge_index(u, v);
        return i < 0 ? Rational(0) : coeffs[i];
    }
    std::size_t support_size() const {
        std::size_t s = 0;
        for (const auto& c : coeffs) s += (c != 0);
        return s;
    }

    bool operator==(const LinearInequality& o) const {
        return *graph == *o.graph && coeffs == o.coeffs && rhs == o.rhs;
    }
    bool operator!=(const LinearInequality& o) const { return !(*this == o); }
};

struct Term {
    int u, v;
    Rational coef;
};

inline LinearInequality make_inequality(GraphPtr g, const std::vector<Term>& terms, Rational rhs) {
    LinearInequality f(std::move(g));
    for (const auto& t : terms) f.coef(t.u, t.v) += t.coef;
    f.rhs = std::move(rhs);
    return f;
}

inline LinearInequality primitive_normalize(LinearInequality f) {
    primitive_normalize(f.coeffs, f.rhs);
    return f;
}

inline void require_same_graph(const Graph& a, const Graph& b) {
    if (a != b) throw Error(ErrorCode::GraphMismatch, "inequalities live on different graphs");
}

struct CutVector {
    GraphPtr graph;
    std::vector<std::uint64_t> bits;  // packed, canonical edge order
    std::uint64_t generator_set = 0;  // bit v set iff v in S

    bool bit(std::size_t e) const { return (bits[e >> 6] >> (e & 63)) & 1; }

    RationalVector to_rational() const {
        RationalVector x(graph->edge_count());
        for (std::size_t e = 0; e < x.size(); ++e) x[e] = bit(e) ? 1 : 0;
        return x;
    }
    std::vector<std::int64_t> to_int() const {
        std::vector<std::int64_t> x(graph->edge_count());
        for (std::size_t e = 0; e < x.size(); ++e) x[e] = bit(e);
        return x;
    }
    bool operator==(const CutVector& o) const { return bits == o.bits; }
};

inline std::uint64_t vertex_mask(const Graph& g, const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw Error(ErrorCode::DimensionMismatch, "vertex out of range");
        mask |= std::uint64_t(1) << v;
    }
    return mask;
}

inline CutVector cut_vector_from_mask(const GraphPtr& g, std::uint64_t mask) {
    CutVector c;
    c.graph = g;
    c.generator_set = mask;
    c.bits.assign((g->edge_count() + 63) / 64, 0);
    const auto& edges = g->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (((mask >> u) ^ (mask >> v)) & 1) c.bits[e >> 6] |= std::uint64_t(1) << (e & 63);
    }
    return c;
}

inline CutVector cut_vector(const GraphPtr& g, const std::vector<int>& s) {
    if (g->vertex_count() > 64) throw Error(ErrorCode::TooLarge, "graphs above 64 vertices are not supported");
    return cut_vector_from_mask(g, vertex_mask(*g, s));
}

inline std::vector<std::int64_t> cut_row(const Graph& g, std::uint64_t mask) {
    std::vector<std::int64_t> x(g.edge_count());
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) x[e] = ((mask >> edges[e].first) ^ (mask >> edges[e].second)) & 1;
    return x;
}

inline void check_enumerable(const Graph& g) {
    if (g.vertex_count() > enumeration_limit() || g.vertex_count() > 63)
        throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count()) + " vertices exceed the enumeration limit " +
                                             std::to_string(enumeration_limit()));
}

// All 2^{|V|-1} cut vectors; S ranges over subsets of V \ {0} by bitmask.
inline std::vector<CutVector> enumerate_cut_vectors(const GraphPtr& g) {
    check_enumerable(*g);
    std::vector<CutVector> out;
    const int n = g->vertex_count();
    if (n == 0) return out;
    const std::uint64_t count = std::uint64_t(1) << (n - 1);
    out.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) out.push_back(cut_vector_from_mask(g, s << 1));
    return out;
}

inline Rational evaluate(const LinearInequality& f, const RationalVector& x) {
    if (x.size() != f.coeffs.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(x.size()) + " vs " + std::to_string(f.coeffs.size()) + " coefficients");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (f.coeffs[i] != 0 && x[i] != 0) s += f.coeffs[i] * x[i];
    return s;
}

inline Rational evaluate(const LinearInequality& f, const CutVector& x) {
    if (x.graph->edge_count() != f.coeffs.size()) throw Error(ErrorCode::DimensionMismatch, "cut vector length");
    Rational s = 0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        if (x.bit(i)) s += f.coeffs[i];
    return s;
}

namespace detail {

// Integer form of an inequality for fast scans (positive scaling only).
struct IntegerForm {
    bool small = true;
    std::vector<std::int64_t> c;
    std::int64_t rhs = 0;
    std::vector<BigInt> cb;
    BigInt rhsb;
};

inline IntegerForm integer_form(const RationalVector& coeffs, const Rational& rhs) {
    IntegerForm f;
    if (!primitive_integer_scale(coeffs, rhs, f.cb, f.rhsb)) {
        f.cb.assign(coeffs.size(), BigInt(0));
        f.rhsb = 0;
    }
    BigInt total = abs_big(f.rhsb);
    for (const auto& x : f.cb) total += abs_big(x);
    if (total < (BigInt(1) << 60)) {
        f.c.resize(f.cb.size());
        for (std::size_t i = 0; i < f.cb.size(); ++i) f.c[i] = f.cb[i].convert_to<std::int64_t>();
        f.rhs = f.rhsb.convert_to<std::int64_t>();
    } else {
        f.small = false;
    }
    return f;
}

// Gray-code walk over all S subset of V \ {0}; cb(mask, value) with value = aᵀδ(S).
template <class T, class Fn>
void scan_cuts(const Graph& g, const std::vector<T>& a, Fn&& cb) {
    const int n = g.vertex_count();
    if (n == 0) {
        cb(std::uint64_t(0), T(0));
        return;
    }
    std::vector<std::vector<std::pair<int, T>>> star(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (a[e] == 0) continue;
        auto [u, v] = g.edges()[e];
        star[u].emplace_back(v, a[e]);
        star[v].emplace_back(u, a[e]);
    }
    const std::uint64_t count = std::uint64_t(1) << (n - 1);
    std::uint64_t mask = 0;
    T value = 0;
    if (!cb(mask, value)) return;
    for (std::uint64_t i = 1; i < count; ++i) {
        const int w = __builtin_ctzll(i) + 1;
        const std::uint64_t side = (mask >> w) & 1;
        for (const auto& [u, c] : star[w]) {
            if (((mask >> u) & 1) == side) value += c;
            else value -= c;
        }
        mask ^= std::uint64_t(1) << w;
        if (!cb(mask, value)) return;
    }
}

} // namespace detail

struct FacetReport {
    bool valid = false;
    bool homogeneous_valid = false;
    std::size_t root_count = 0;
    long affine_root_rank = -1;
    bool is_facet = false;
};

namespace detail {

template <class T>
FacetReport facet_scan(const Graph& g, const std::vector<T>& a, const T& rhs, std::size_t target_rank) {
    FacetReport r;
    bool valid = true, hom = true;
    std::size_t roots = 0;
    scan_cuts<T>(g, a, [&](std::uint64_t, const T& val) {
        if (val > rhs) valid = false;
        if (val > 0) hom = false;
        if (val == rhs) ++roots;
        return true;
    });
    r.valid = valid;
    r.homogeneous_valid = hom && rhs >= 0;
    r.root_count = roots;
    if (roots == 0) return r;
    const std::size_t d = g.edge_count();
    const std::size_t rank = streamed_rank<std::int64_t>(d + 1, [&](auto&& emit) {
        scan_cuts<T>(g, a, [&](std::uint64_t mask, const T& val) {
            if (val != rhs) return true;
            auto row = cut_row(g, mask);
            row.push_back(1);
            return static_cast<bool>(emit(row));
        });
    });
    r.affine_root_rank = static_cast<long>(rank) - 1;
    r.is_facet = r.valid && r.affine_root_rank == static_cast<long>(target_rank);
    return r;
}

} // namespace detail

inline FacetReport facet_status(const LinearInequality& f) {
    const Graph& g = *f.graph;
    check_enumerable(g);
    const auto form = detail::integer_form(f.coeffs, f.rhs);
    const std::size_t target = g.edge_count() - 1;
    if (form.small) return detail::facet_scan<std::int64_t>(g, form.c, form.rhs, target);
    return detail::facet_scan<BigInt>(g, form.cb, form.rhsb, target);
}

inline bool is_valid(const LinearInequality& f) {
    const Graph& g = *f.graph;
    check_enumerable(g);
    const auto form = detail::integer_form(f.coeffs, f.rhs);
    bool ok = true;
    if (form.small) {
        detail::scan_cuts<std::int64_t>(g, form.c, [&](std::uint64_t, std::int64_t v) { return ok = (v <= form.rhs); });
    } else {
        detail::scan_cuts<BigInt>(g, form.cb, [&](std::uint64_t, const BigInt& v) { return ok = (v <= form.rhsb); });
    }
    return ok;
}

// Maximum of aᵀδ(S) over all cuts, with a maximizing S.
inline std::pair<Rational, std::uint64_t> max_cut_value(const LinearInequality& f) {
    const Graph& g = *f.graph;
    check_enumerable(g);
    Rational best;
    std::uint64_t arg = 0;
    bool first = true;
    std::vector<Rational> a = f.coeffs;
    detail::scan_cuts<Rational>(g, a, [&](std::uint64_t mask, const Rational& v) {
        if (first || v > best) {
            best = v;
            arg = mask;
            first = false;
        }
        return true;
    });
    return {best, arg};
}

inline bool cone_validity(const LinearInequality& f) {
    check_enumerable(*f.graph);
    if (f.rhs < 0) return false;
    const auto form = detail::integer_form(f.coeffs, Rational(0));
    bool ok = true;
    if (form.small) {
        detail::scan_cuts<std::int64_t>(*f.graph, form.c, [&](std::uint64_t, std::int64_t v) { return ok = (v <= 0); });
    } else {
        detail::scan_cuts<BigInt>(*f.graph, form.cb, [&](std::uint64_t, const BigInt& v) { return ok = (v <= 0); });
    }
    return ok;
}

inline std::string format_inequality(const LinearInequality& f) {
    std::ostringstream os;
    os << to_string(f.rhs) << " |";
    const auto& edges = f.graph->edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (f.coeffs[e] != 0) os << " " << edges[e].first << "-" << edges[e].second << ":" << to_string(f.coeffs[e]);
    return os.str();
}

inline LinearInequality parse_inequality(const GraphPtr& g, const std::string& line) {
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw Error(ErrorCode::ParseError, "missing '|' in inequality");
    std::istringstream rs(line.substr(0, bar));
    std::string rhs_text, extra;
    if (!(rs >> rhs_text) || (rs >> extra)) throw Error(ErrorCode::ParseError, "bad right-hand side");
    LinearInequality f(g);
    f.rhs = parse_rational(rhs_text);
    std::istringstream ts(line.substr(bar + 1));
    std::string tok;
    while (ts >> tok) {
        const auto dash = tok.find('-');
        const auto colon = tok.find(':');
        if (dash == std::string::npos || colon == std::string::npos || dash > colon)
            throw Error(ErrorCode::ParseError, "bad term '" + tok + "'");
        int u, v;
        try {
            u = std::stoi(tok.substr(0, dash));
            v = std::stoi(tok.substr(dash + 1, colon - dash - 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad edge in term '" + tok + "'");
        }
        const int idx = g->edge_index(u, v);
        if (idx < 0) throw Error(ErrorCode::ParseError, "edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
        f.coeffs[idx] += parse_rational(tok.substr(colon + 1));
    }
    return f;
}

} // namespace cutbell
