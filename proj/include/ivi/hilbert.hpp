#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ivi/errors.hpp"
#include "ivi/invariants.hpp"
#include "ivi/monomial.hpp"
#include "ivi/seqpair.hpp"

namespace ivi {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in series arithmetic");
    return out;
}

inline long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in series arithmetic");
    return out;
}

inline void trim(std::vector<long long>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

} // namespace detail

// A rational function  numerator(t) / (1-t)^denom_pow  with integer
// coefficients.  reduced() divides out every (1-t) factor of the numerator,
// which makes equality of reduced forms the right notion of equality.
struct RationalSeries {
    std::vector<long long> num; // num[k] is the coefficient of t^k
    int denom_pow = 0;

    bool num_is_zero() const {
        for (long long c : num)
            if (c != 0) return false;
        return true;
    }

    long long num_at_one() const {
        long long s = 0;
        for (long long c : num) s = detail::checked_add(s, c);
        return s;
    }

    RationalSeries reduced() const {
        RationalSeries out = *this;
        detail::trim(out.num);
        if (out.num_is_zero()) {
            out.num.clear();
            out.denom_pow = 0;
            return out;
        }
        while (out.num_at_one() == 0) {
            // divide by (1-t): running prefix sums, dropping the top zero
            long long acc = 0;
            for (std::size_t k = 0; k < out.num.size(); ++k) {
                acc = detail::checked_add(acc, out.num[k]);
                out.num[k] = acc;
            }
            detail::trim(out.num);
            --out.denom_pow;
        }
        return out;
    }

    friend bool operator==(const RationalSeries& x, const RationalSeries& y) {
        RationalSeries a = x.reduced(), b = y.reduced();
        return a.num == b.num && a.denom_pow == b.denom_pow;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (std::size_t k = 0; k < num.size(); ++k) {
            if (num[k] == 0) continue;
            long long c = num[k];
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            long long a = c < 0 ? -c : c;
            if (a != 1 || k == 0) os << a;
            if (k >= 1) os << "t";
            if (k >= 2) os << "^" << k;
            first = false;
        }
        if (first) os << "0";
        os << ") / (1-t)^" << denom_pow;
        return os.str();
    }
};

namespace detail {

inline std::vector<long long> poly_add(const std::vector<long long>& x, const std::vector<long long>& y) {
    std::vector<long long> out(std::max(x.size(), y.size()), 0);
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k];
    for (std::size_t k = 0; k < y.size(); ++k) out[k] = checked_add(out[k], y[k]);
    return out;
}

// p(t) * (1 - t^d)
inline std::vector<long long> poly_mul_one_minus_power(const std::vector<long long>& p, int d) {
    std::vector<long long> out(p.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[k];
    for (std::size_t k = 0; k < p.size(); ++k)
        out[k + static_cast<std::size_t>(d)] = checked_sub(out[k + static_cast<std::size_t>(d)], p[k]);
    trim(out);
    return out;
}

// p(t) * t^e
inline std::vector<long long> poly_shift(const std::vector<long long>& p, int e) {
    std::vector<long long> out(p.size() + static_cast<std::size_t>(e), 0);
    for (std::size_t k = 0; k < p.size(); ++k) out[k + static_cast<std::size_t>(e)] = p[k];
    return out;
}

// Numerator of the quotient series over the common denominator (1-t)^nvars.
inline std::vector<long long> hilbert_numerator(const SequencePair& sp,
                                                std::map<PairKey, std::vector<long long>>& memo) {
    if (sp.empty()) return {1};
    const PairKey key = memo_key(sp);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<long long> out;
    const int j = head_size(sp);
    const int head_deg = sp.ends[0] - sp.starts[0] + 1;
    if (sp.count() == 1) {
        out = poly_mul_one_minus_power({1}, head_deg);
    } else if (j == 1) {
        out = poly_mul_one_minus_power(hilbert_numerator(drop_head(sp), memo), head_deg);
    } else {
        // split along the overlap v = x_{starts[1]} ... x_{ends[0]}: the
        // colon part collapses the head behind a regular leading stub, the
        // residue part is the clipped pair with v adjoined.  (The residue
        // only simplifies further to drop_head when the head has size 2.)
        const int overlap_deg = sp.ends[0] - sp.starts[1] + 1;  // deg v
        const int stub_deg = sp.starts[1] - sp.starts[0];
        auto collapsed = poly_mul_one_minus_power(hilbert_numerator(collapse_head(sp), memo), stub_deg);
        auto residue = hilbert_numerator(adjoin_overlap(sp), memo);
        out = poly_add(poly_shift(collapsed, overlap_deg), residue);
    }
    memo.emplace(key, out);
    return out;
}

} // namespace detail

// Hilbert series of the quotient by the block recursion, reduced.
inline RationalSeries hilbert_series(const SequencePair& sp) {
    std::map<detail::PairKey, std::vector<long long>> memo;
    RationalSeries rs{detail::hilbert_numerator(sp, memo), sp.nvars};
    return rs.reduced();
}

// Same series before reduction, over (1-t)^nvars.
inline RationalSeries hilbert_series_raw(const SequencePair& sp) {
    std::map<detail::PairKey, std::vector<long long>> memo;
    return RationalSeries{detail::hilbert_numerator(sp, memo), sp.nvars};
}

// Raw (unreduced) inclusion-exclusion numerator over (1-t)^nvars: the
// alternating sum of t^{deg lcm(T)} over all subsets T of the generators.
inline std::vector<long long> inclusion_exclusion_numerator(const MonomialIdeal& I) {
    const int s = I.gen_count();
    if (s > 22) fail(errc::too_many_generators, "inclusion-exclusion walk supports at most 22 generators");
    std::vector<long long> num(1, 0);
    auto bump = [&](int deg, int sign) {
        if (static_cast<std::size_t>(deg) >= num.size()) num.resize(static_cast<std::size_t>(deg) + 1, 0);
        num[static_cast<std::size_t>(deg)] = detail::checked_add(num[static_cast<std::size_t>(deg)], sign);
    };
    std::function<void(int, const Monomial&, int)> walk = [&](int idx, const Monomial& cur, int sign) {
        if (idx == s) {
            bump(cur.degree(), sign);
            return;
        }
        walk(idx + 1, cur, sign);
        walk(idx + 1, lcm(cur, I.gens()[static_cast<std::size_t>(idx)]), -sign);
    };
    walk(0, Monomial(I.nvars()), 1);
    detail::trim(num);
    return num;
}

// Independent oracle for the quotient's Hilbert series, reduced.
inline RationalSeries hilbert_by_inclusion_exclusion(const MonomialIdeal& I) {
    return RationalSeries{inclusion_exclusion_numerator(I), I.nvars()}.reduced();
}

// Taylor coefficients of the series at 0, through degree k inclusive.
// Expansion by repeated prefix summation (one pass per denominator factor).
inline std::vector<long long> series_coefficients(const RationalSeries& rs, int k) {
    if (k < 0) fail(errc::out_of_range, "negative truncation degree");
    RationalSeries r = rs.reduced();
    std::vector<long long> coeffs(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t i = 0; i < r.num.size() && i <= static_cast<std::size_t>(k); ++i) coeffs[i] = r.num[i];
    if (r.denom_pow < 0) {
        // genuinely polynomial input with leftover (1-t) factors
        std::vector<long long> poly = r.num;
        for (int d = 0; d < -r.denom_pow; ++d) poly = detail::poly_mul_one_minus_power(poly, 1);
        coeffs.assign(static_cast<std::size_t>(k) + 1, 0);
        for (std::size_t i = 0; i < poly.size() && i <= static_cast<std::size_t>(k); ++i) coeffs[i] = poly[i];
        return coeffs;
    }
    for (int d = 0; d < r.denom_pow; ++d) {
        long long acc = 0;
        for (auto& c : coeffs) {
            acc = detail::checked_add(acc, c);
            c = acc;
        }
    }
    return coeffs;
}

} // namespace ivi
