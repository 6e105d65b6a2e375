#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cutbell/linalg.hpp"

namespace cutbell {

// One row cᵀx <= rhs (facet) or cᵀx = rhs (equality) over ambient coordinates.
struct HRow {
    RationalVector coeffs;
    Rational rhs;

    bool operator==(const HRow& o) const { return coeffs == o.coeffs && rhs == o.rhs; }
    bool operator<(const HRow& o) const {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return rhs < o.rhs;
    }
};

struct HRepresentation {
    std::size_t ambient = 0;
    long affine_dimension = -1;
    std::vector<HRow> equalities;
    std::vector<HRow> facets;
};

struct HullOptions {
    std::size_t max_rays = 2'000'000;
    std::size_t max_pair_checks = 4'000'000'000ULL;
};

namespace detail {

struct HullOverflow {};

using Bits = std::vector<std::uint64_t>;

inline bool subset_of(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

inline std::size_t popcount(const Bits& a) {
    std::size_t c = 0;
    for (auto w : a) c += __builtin_popcountll(w);
    return c;
}

template <class T>
struct Ray {
    std::vector<T> v;
    Bits zero;
    std::size_t zcount = 0;
};

inline __int128 dot128(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    return s;
}

inline int sgn(__int128 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sgn(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline BigInt dot_big(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline __int128 abs128(__int128 x) { return x < 0 ? -x : x; }

inline __int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::vector<std::int64_t> combine(const std::vector<std::int64_t>& p, __int128 ap, const std::vector<std::int64_t>& n,
                                         __int128 an) {
    // ap > 0 > an; result = ap * n - an * p
    const std::size_t d = p.size();
    std::vector<__int128> w(d);
    __int128 g = 0;
    const __int128 lim = static_cast<__int128>(1) << 62;
    if (abs128(ap) >= lim || abs128(an) >= lim) throw HullOverflow{};
    for (std::size_t i = 0; i < d; ++i) {
        __int128 x, y;
        if (__builtin_mul_overflow(ap, static_cast<__int128>(n[i]), &x)) throw HullOverflow{};
        if (__builtin_mul_overflow(an, static_cast<__int128>(p[i]), &y)) throw HullOverflow{};
        if (__builtin_sub_overflow(x, y, &w[i])) throw HullOverflow{};
        g = gcd128(g, w[i]);
    }
    std::vector<std::int64_t> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        const __int128 q = g > 1 ? w[i] / g : w[i];
        if (abs128(q) >= lim) throw HullOverflow{};
        out[i] = static_cast<std::int64_t>(q);
    }
    return out;
}

inline std::vector<BigInt> combine(const std::vector<BigInt>& p, const BigInt& ap, const std::vector<BigInt>& n,
                                   const BigInt& an) {
    std::vector<BigInt> out(p.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = ap * n[i] - an * p[i];
        g = gcd_big(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

inline auto dot_any(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) { return dot128(a, b); }
inline BigInt dot_any(const std::vector<BigInt>& a, const std::vector<BigInt>& b) { return dot_big(a, b); }

// Extreme rays of {h : A h >= 0} for full-column-rank A (r columns),
// inserting rows in order after the initial basis rows.
template <class T>
std::vector<std::vector<T>> double_description(const std::vector<std::vector<T>>& rows,
                                               const std::vector<std::size_t>& basis, std::size_t r,
                                               const HullOptions& opt) {
    const std::size_t nrows = rows.size();
    const std::size_t words = (nrows + 63) / 64;
    auto set_bit = [](Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); };

    std::vector<Ray<T>> rays;
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<std::vector<BigInt>> sub;
        for (std::size_t t = 0; t < r; ++t) {
            if (t == k) continue;
            std::vector<BigInt> row(r);
            for (std::size_t j = 0; j < r; ++j) row[j] = to_big(rows[basis[t]][j]);
            sub.push_back(std::move(row));
        }
        auto ns = integer_null_space(std::move(sub), r);
        auto v = ns.at(0);
        std::vector<BigInt> bk(r);
        for (std::size_t j = 0; j < r; ++j) bk[j] = to_big(rows[basis[k]][j]);
        if (dot_big(bk, v) < 0)
            for (auto& x : v) x = -x;
        Ray<T> ray;
        ray.v.resize(r);
        for (std::size_t j = 0; j < r; ++j) {
            if constexpr (std::is_same_v<T, std::int64_t>) {
                if (abs_big(v[j]) >= (BigInt(1) << 62)) throw HullOverflow{};
                ray.v[j] = v[j].convert_to<std::int64_t>();
            } else {
                ray.v[j] = v[j];
            }
        }
        ray.zero.assign(words, 0);
        for (std::size_t t = 0; t < r; ++t)
            if (t != k) set_bit(ray.zero, basis[t]);
        ray.zcount = r - 1;
        rays.push_back(std::move(ray));
    }

    std::vector<char> in_basis(nrows, 0);
    for (auto b : basis) in_basis[b] = 1;
    std::size_t pair_checks = 0;

    for (std::size_t i = 0; i < nrows; ++i) {
        if (in_basis[i]) continue;
        const auto& a = rows[i];
        using D = decltype(dot_any(a, rays[0].v));
        std::vector<std::size_t> pos, neg, zer;
        std::vector<D> val(rays.size());
        for (std::size_t q = 0; q < rays.size(); ++q) {
            val[q] = dot_any(a, rays[q].v);
            const int s = sgn(val[q]);
            (s > 0 ? pos : (s < 0 ? neg : zer)).push_back(q);
        }
        if (neg.empty()) {
            for (auto q : zer) {
                set_bit(rays[q].zero, i);
                ++rays[q].zcount;
            }
            continue;
        }
        std::vector<Ray<T>> next;
        next.reserve(pos.size() + zer.size());
        for (auto p : pos) {
            for (auto n : neg) {
                if (++pair_checks > opt.max_pair_checks)
                    throw Error(ErrorCode::ResourceLimit, "double description pair budget exhausted");
                Bits common(words);
                for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[n].zero[w];
                const std::size_t cc = popcount(common);
                if (cc + 2 < r) continue;
                bool adjacent = true;
                for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
                    if (q == p || q == n || rays[q].zcount < cc) continue;
                    if (subset_of(common, rays[q].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray<T> nr;
                nr.v = combine(rays[p].v, val[p], rays[n].v, val[n]);
                nr.zero = std::move(common);
                set_bit(nr.zero, i);
                nr.zcount = cc + 1;
                next.push_back(std::move(nr));
                if (next.size() + pos.size() + zer.size() > opt.max_rays)
                    throw Error(ErrorCode::ResourceLimit, "double description ray budget exhausted");
            }
        }
        for (auto p : pos) next.push_back(std::move(rays[p]));
        for (auto z : zer) {
            set_bit(rays[z].zero, i);
            ++rays[z].zcount;
            next.push_back(std::move(rays[z]));
        }
        rays = std::move(next);
    }
    std::vector<std::vector<T>> out;
    out.reserve(rays.size());
    for (auto& r0 : rays) out.push_back(std::move(r0.v));
    return out;
}

// Pivot columns of a full-row-rank integer matrix, leftmost first.
inline std::vector<std::size_t> pivot_columns(std::vector<std::vector<BigInt>> m, std::size_t cols) {
    std::vector<std::size_t> piv;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[row][c] * m[i][j] - m[i][c] * m[row][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[row][c];
        piv.push_back(c);
        ++row;
    }
    return piv;
}

inline HRow primitive_row(RationalVector c, Rational rhs) {
    primitive_normalize(c, rhs);
    return {std::move(c), std::move(rhs)};
}

// Canonical basis of an equation system: RREF, then primitive rows with positive leading entry.
inline std::vector<HRow> canonical_equalities(const std::vector<std::vector<BigInt>>& null_vectors, std::size_t d) {
    // columns 0..d-1 are point coordinates, column d is the negated rhs
    std::vector<RationalVector> m;
    for (const auto& z : null_vectors) {
        RationalVector row(d + 1);
        for (std::size_t j = 0; j < d; ++j) row[j] = Rational(z[j + 1]);
        row[d] = Rational(z[0]);
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c <= d && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        const Rational inv = 1 / m[rank][c];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j <= d; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    std::vector<HRow> out;
    for (std::size_t i = 0; i < rank; ++i) {
        RationalVector c(m[i].begin(), m[i].begin() + d);
        out.push_back(primitive_row(std::move(c), -m[i][d]));
    }
    return out;
}

} // namespace detail

inline HRepresentation facet_enumeration(const std::vector<RationalVector>& points, const HullOptions& opt = {}) {
    HRepresentation h;
    if (points.empty()) return h;
    const std::size_t d = points[0].size();
    h.ambient = d;
    // homogenized integer rows: lambda * (1, p)
    std::vector<std::vector<BigInt>> y;
    y.reserve(points.size());
    bool small = true;
    for (const auto& p : points) {
        if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "points of unequal length");
        BigInt l = 1;
        for (const auto& x : p) l = lcm_big(l, boost::multiprecision::denominator(x));
        std::vector<BigInt> row(d + 1);
        row[0] = l;
        for (std::size_t j = 0; j < d; ++j)
            row[j + 1] = boost::multiprecision::numerator(p[j]) * (l / boost::multiprecision::denominator(p[j]));
        for (const auto& x : row)
            if (abs_big(x) >= (BigInt(1) << 30)) small = false;
        y.push_back(std::move(row));
    }
    const auto basis = independent_rows(y, d + 1);
    const std::size_t r = basis.rows.size();
    h.affine_dimension = static_cast<long>(r) - 1;
    h.equalities = detail::canonical_equalities(detail::integer_null_space(basis.rows, d + 1), d);
    std::sort(h.equalities.begin(), h.equalities.end());
    if (r <= 1) return h;

    const auto cols = detail::pivot_columns(basis.rows, d + 1);
    std::vector<std::vector<BigInt>> proj;
    proj.reserve(y.size());
    for (const auto& row : y) {
        std::vector<BigInt> pr(r);
        for (std::size_t j = 0; j < r; ++j) pr[j] = row[cols[j]];
        proj.push_back(std::move(pr));
    }

    std::vector<std::vector<BigInt>> rays;
    bool done = false;
    if (small) {
        std::vector<std::vector<std::int64_t>> p64;
        p64.reserve(proj.size());
        for (const auto& row : proj) {
            std::vector<std::int64_t> v(r);
            for (std::size_t j = 0; j < r; ++j) v[j] = row[j].convert_to<std::int64_t>();
            p64.push_back(std::move(v));
        }
        try {
            auto rs = detail::double_description<std::int64_t>(p64, basis.indices, r, opt);
            for (const auto& v : rs) {
                std::vector<BigInt> b(r);
                for (std::size_t j = 0; j < r; ++j) b[j] = v[j];
                rays.push_back(std::move(b));
            }
            done = true;
        } catch (const detail::HullOverflow&) {
        }
    }
    if (!done) rays = detail::double_description<BigInt>(proj, basis.indices, r, opt);

    for (const auto& v : rays) {
        RationalVector c(d);
        Rational rhs = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (cols[j] == 0) rhs = Rational(v[j]);
            else c[cols[j] - 1] = Rational(-v[j]);
        }
        h.facets.push_back(detail::primitive_row(std::move(c), std::move(rhs)));
    }
    std::sort(h.facets.begin(), h.facets.end());
    return h;
}

inline HRepresentation facet_enumeration(const std::vector<std::vector<std::int64_t>>& points, const HullOptions& opt = {}) {
    std::vector<RationalVector> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.emplace_back(p.begin(), p.end());
    return facet_enumeration(pts, opt);
}

inline std::vector<std::string> default_labels(std::size_t d) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < d; ++i) l.push_back("x" + std::to_string(i));
    return l;
}

inline std::string format_row(const HRow& row, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << to_string(row.rhs) << " |";
    for (std::size_t j = 0; j < row.coeffs.size(); ++j)
        if (row.coeffs[j] != 0) os << " " << labels[j] << ":" << to_string(row.coeffs[j]);
    return os.str();
}

inline std::string format_hrep(const HRepresentation& h, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "coords";
    for (const auto& l : labels) os << " " << l;
    os << "\n";
    for (const auto& e : h.equalities) os << "eq " << format_row(e, labels) << "\n";
    for (const auto& f : h.facets) os << "ineq " << format_row(f, labels) << "\n";
    return os.str();
}

inline HRepresentation parse_hrep(const std::string& text) {
    HRepresentation h;
    std::istringstream is(text);
    std::string line;
    std::map<std::string, std::size_t> index;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
        if (tag == "coords") {
            std::string l;
            while (ls >> l) index.emplace(l, index.size());
            h.ambient = index.size();
            continue;
        }
        if (tag != "eq" && tag != "ineq") throw Error(ErrorCode::ParseError, where() + "unknown tag '" + tag + "'");
        if (index.empty()) throw Error(ErrorCode::ParseError, where() + "row before coords header");
        std::string rest;
        std::getline(ls, rest);
        const auto bar = rest.find('|');
        if (bar == std::string::npos) throw Error(ErrorCode::ParseError, where() + "missing '|'");
        HRow row;
        row.coeffs.assign(h.ambient, 0);
        std::istringstream rs(rest.substr(0, bar));
        std::string rhs;
        if (!(rs >> rhs)) throw Error(ErrorCode::ParseError, where() + "missing rhs");
        row.rhs = parse_rational(rhs);
        std::istringstream ts(rest.substr(bar + 1));
        std::string tok;
        while (ts >> tok) {
            const auto colon = tok.rfind(':');
            if (colon == std::string::npos) throw Error(ErrorCode::ParseError, where() + "bad term '" + tok + "'");
            auto it = index.find(tok.substr(0, colon));
            if (it == index.end()) throw Error(ErrorCode::ParseError, where() + "unknown coordinate in '" + tok + "'");
            row.coeffs[it->second] += parse_rational(tok.substr(colon + 1));
        }
        (tag == "eq" ? h.equalities : h.facets).push_back(std::move(row));
    }
    return h;
}

} // namespace cutbell
