#pragma once

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "cutbell/rational.hpp"

namespace cutbell {

struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static RationalMatrix from_rows(const std::vector<RationalVector>& rs, std::size_t cols) {
        RationalMatrix m(rs.size(), cols);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rs[i][j];
        }
        return m;
    }
};

namespace detail {

constexpr std::uint64_t kPrime = 2147483647ULL; // 2^31 - 1

inline std::uint64_t residue(std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(kPrime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
}

inline std::uint64_t residue(const BigInt& x) {
    return mpz_fdiv_ui(x.backend().data(), kPrime);
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

// Incremental row echelon form modulo kPrime.
class ModEchelon {
public:
    explicit ModEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return basis_.size(); }

    // Inserts v if it is independent of the current basis mod p.
    bool insert(std::vector<std::uint64_t> v) {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const std::size_t c = pivots_[b];
            const std::uint64_t f = v[c];
            if (f == 0) continue;
            const auto& row = basis_[b];
            for (std::size_t j = c; j < cols_; ++j) {
                if (row[j] == 0) continue;
                v[j] = (v[j] + (kPrime - f) * row[j]) % kPrime;
            }
        }
        std::size_t c = 0;
        while (c < cols_ && v[c] == 0) ++c;
        if (c == cols_) return false;
        const std::uint64_t inv = mod_inv(v[c]);
        for (std::size_t j = c; j < cols_; ++j) v[j] = v[j] * inv % kPrime;
        basis_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::size_t> pivots_;
};

// Integer basis of {x : M x = 0} by fraction-free Gauss-Jordan elimination.
inline std::vector<std::vector<BigInt>> integer_null_space(std::vector<std::vector<BigInt>> m, std::size_t cols) {
    const std::size_t r = m.size();
    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < r; ++c) {
        std::size_t p = row;
        while (p < r && m[p][c] == 0) ++p;
        if (p == r) continue;
        std::swap(m[p], m[row]);
        const BigInt piv = m[row][c];
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row) continue;
            const BigInt f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                m[i][j] = (piv * m[i][j] - f * m[row][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = piv;
        pivot_cols.push_back(c);
        ++row;
    }
    // Every pivot entry now equals prev (the last pivot).
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_cols) is_pivot[c] = 1;
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigInt> v(cols, BigInt(0));
        v[f] = prev;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][f];
        BigInt g = 0;
        for (const auto& x : v) g = gcd_big(g, x);
        if (g > 1)
            for (auto& x : v) x /= g;
        basis.push_back(std::move(v));
    }
    return basis;
}

inline BigInt to_big(std::int64_t x) { return BigInt(x); }
inline const BigInt& to_big(const BigInt& x) { return x; }

template <class T>
bool orthogonal_to_all(const std::vector<T>& row, const std::vector<std::vector<BigInt>>& null_basis,
                       const std::vector<std::vector<std::int64_t>>& small_basis, bool use_small) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
        if (use_small) {
            for (const auto& n : small_basis) {
                __int128 acc = 0;
                for (std::size_t j = 0; j < row.size(); ++j)
                    if (row[j] != 0) acc += static_cast<__int128>(row[j]) * n[j];
                if (acc != 0) return false;
            }
            return true;
        }
    }
    for (const auto& n : null_basis) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) acc += to_big(row[j]) * n[j];
        if (acc != 0) return false;
    }
    return true;
}

} // namespace detail

template <class T>
struct RowBasis {
    std::vector<std::vector<T>> rows;
    std::vector<std::size_t> indices; // positions in stream order
};

// Maximal Q-independent subset of a streamed integer row set. A modular pass
// keeps rows that are independent mod p (hence over Q); further passes
// certify the rest against an exact integer null space of the kept rows.
// for_each_row(cb) must call cb(row) for every row, stopping when cb returns false.
template <class T, class Source>
RowBasis<T> streamed_basis(std::size_t cols, Source&& for_each_row) {
    detail::ModEchelon ech(cols);
    RowBasis<T> basis;
    std::size_t seen = 0;
    for_each_row([&](const std::vector<T>& row) {
        std::vector<std::uint64_t> v(cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = detail::residue(row[j]);
        if (ech.insert(std::move(v))) {
            basis.rows.push_back(row);
            basis.indices.push_back(seen);
        }
        ++seen;
        return ech.rank() < cols;
    });
    if (basis.rows.size() == cols || basis.rows.size() == seen) return basis;

    static const BigInt bound = BigInt(1) << 62;
    for (;;) {
        std::vector<std::vector<BigInt>> sub;
        sub.reserve(basis.rows.size());
        for (const auto& row : basis.rows) {
            std::vector<BigInt> r(cols);
            for (std::size_t j = 0; j < cols; ++j) r[j] = detail::to_big(row[j]);
            sub.push_back(std::move(r));
        }
        const auto null_basis = detail::integer_null_space(std::move(sub), cols);
        if (null_basis.empty()) return basis;
        std::vector<std::vector<std::int64_t>> small;
        bool use_small = true;
        for (const auto& n : null_basis) {
            std::vector<std::int64_t> s(cols);
            for (std::size_t j = 0; j < cols && use_small; ++j) {
                if (abs_big(n[j]) >= bound) use_small = false;
                else s[j] = n[j].template convert_to<std::int64_t>();
            }
            small.push_back(std::move(s));
        }
        bool grew = false;
        std::size_t pos = 0;
        for_each_row([&](const std::vector<T>& row) {
            const std::size_t here = pos++;
            if (detail::orthogonal_to_all(row, null_basis, small, use_small)) return true;
            basis.rows.push_back(row);
            basis.indices.push_back(here);
            grew = true;
            return false;
        });
        if (!grew) return basis;
    }
}

template <class T, class Source>
std::size_t streamed_rank(std::size_t cols, Source&& for_each_row) {
    return streamed_basis<T>(cols, std::forward<Source>(for_each_row)).rows.size();
}

template <class T>
RowBasis<T> independent_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    return streamed_basis<T>(cols, [&](auto&& cb) {
        for (const auto& r : rows)
            if (!cb(r)) return;
    });
}

template <class T>
std::size_t integer_rank(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    return streamed_rank<T>(cols, [&](auto&& cb) {
        for (const auto& r : rows)
            if (!cb(r)) return;
    });
}

inline std::size_t rational_rank(const RationalMatrix& m) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols; ++j) l = lcm_big(l, boost::multiprecision::denominator(m.at(i, j)));
        std::vector<BigInt> r(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j)
            r[j] = boost::multiprecision::numerator(m.at(i, j)) * (l / boost::multiprecision::denominator(m.at(i, j)));
        rows.push_back(std::move(r));
    }
    return integer_rank(rows, m.cols);
}

// Dimension of the affine hull; -1 for the empty set.
inline long affine_rank(const std::vector<RationalVector>& points) {
    if (points.empty()) return -1;
    const std::size_t d = points[0].size();
    RationalMatrix m(points.size(), d + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != d) throw Error(ErrorCode::DimensionMismatch, "points of unequal length");
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = points[i][j];
        m.at(i, d) = 1;
    }
    return static_cast<long>(rational_rank(m)) - 1;
}

inline long affine_rank(const std::vector<std::vector<std::int64_t>>& points) {
    if (points.empty()) return -1;
    const std::size_t d = points[0].size();
    std::vector<std::vector<std::int64_t>> h;
    h.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "points of unequal length");
        auto q = p;
        q.push_back(1);
        h.push_back(std::move(q));
    }
    return static_cast<long>(integer_rank(h, d + 1)) - 1;
}

} // namespace cutbell
