#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "ivi/errors.hpp"

namespace ivi {

// Dense integer matrix, row major.  Only ranks are ever needed.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

namespace detail {

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long narrow_or_throw(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        fail(errc::overflow, "integer overflow during exact elimination");
    return static_cast<long long>(v);
}

} // namespace detail

// Rank over the rationals by fraction-free elimination.  Rows are kept
// primitive (divided by their gcd) after every update, which keeps entries
// small for the incidence-style matrices this library produces; genuine
// overflow raises instead of wrapping.
inline int rank_exact(IntMatrix m) {
    int rank = 0;
    std::vector<int> live_cols(static_cast<std::size_t>(m.cols));
    std::iota(live_cols.begin(), live_cols.end(), 0);

    for (int row = 0; row < m.rows && rank < m.cols; ++row) {
        // pivot: smallest nonzero magnitude in the remaining submatrix
        int prow = -1, pcol = -1;
        long long pval = 0;
        for (int r = rank; r < m.rows; ++r) {
            for (int c = rank; c < m.cols; ++c) {
                long long v = m.at(r, c);
                if (v == 0) continue;
                long long a = v < 0 ? -v : v;
                if (prow == -1 || a < (pval < 0 ? -pval : pval)) {
                    prow = r;
                    pcol = c;
                    pval = v;
                }
            }
        }
        if (prow == -1) break;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(prow, c));
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, rank), m.at(r, pcol));
        pval = m.at(rank, rank);

        for (int r = rank + 1; r < m.rows; ++r) {
            long long e = m.at(r, rank);
            if (e == 0) continue;
            long long g = 0;
            std::vector<__int128> tmp(static_cast<std::size_t>(m.cols - rank), 0);
            for (int c = rank; c < m.cols; ++c) {
                __int128 v = static_cast<__int128>(pval) * m.at(r, c) - static_cast<__int128>(e) * m.at(rank, c);
                tmp[static_cast<std::size_t>(c - rank)] = v;
                long long nv = detail::narrow_or_throw(v < 0 ? -v : v);
                g = detail::gcd_ll(g, nv);
            }
            if (g == 0) g = 1;
            for (int c = rank; c < m.cols; ++c)
                m.at(r, c) = detail::narrow_or_throw(tmp[static_cast<std::size_t>(c - rank)] / g);
        }
        ++rank;
    }
    return rank;
}

// Rank over the prime field F_p.
inline int rank_mod_p(const IntMatrix& input, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(input.rows),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(input.cols)));
    for (int r = 0; r < input.rows; ++r)
        for (int c = 0; c < input.cols; ++c) {
            long long v = input.at(r, c) % static_cast<long long>(p);
            if (v < 0) v += static_cast<long long>(p);
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<std::uint64_t>(v);
        }

    auto pow_mod = [&](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t out = 1;
        base %= p;
        while (exp) {
            if (exp & 1) out = (__uint128_t(out) * base) % p;
            base = (__uint128_t(base) * base) % p;
            exp >>= 1;
        }
        return out;
    };

    int rank = 0;
    for (int col = 0; col < input.cols && rank < input.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < input.rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        const std::uint64_t inv = pow_mod(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p - 2);
        for (int r = rank + 1; r < input.rows; ++r) {
            std::uint64_t f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            std::uint64_t scale = (__uint128_t(f) * inv) % p;
            for (int c = col; c < input.cols; ++c) {
                __uint128_t sub = __uint128_t(scale) * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] % p;
                std::uint64_t cur = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (cur + p - static_cast<std::uint64_t>(sub)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace ivi
