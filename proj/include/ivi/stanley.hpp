#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ivi/errors.hpp"
#include "ivi/monomial.hpp"

namespace ivi {

enum class PosetMode { Quotient, Ideal };

// The finite lattice of exponent vectors below the generator-lcm bound,
// filtered by membership: Quotient keeps the monomials outside the ideal,
// Ideal the ones inside.  Variables missing from every generator do not
// enlarge the lattice; they raise every rho value uniformly.
struct CharacteristicPoset {
    int nvars = 0;
    PosetMode mode = PosetMode::Quotient;
    std::vector<int> bound;            // lcm exponents, full length
    std::vector<int> support;          // 0-based variables with bound > 0
    std::vector<long long> radix_mul;  // mixed-radix place values over support
    long long box_size = 1;
    std::vector<char> member;              // indexed by code, size box_size
    std::vector<std::uint32_t> elements;   // member codes, ascending
    int free_rho = 0;                      // variables with bound == 0

    std::vector<int> decode(std::uint32_t code) const {
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        long long rem = code;
        for (std::size_t i = 0; i < support.size(); ++i) {
            const int r = bound[static_cast<std::size_t>(support[i])] + 1;
            exps[static_cast<std::size_t>(support[i])] = static_cast<int>(rem % r);
            rem /= r;
        }
        return exps;
    }

    std::uint32_t encode(const std::vector<int>& exps) const {
        long long code = 0;
        for (std::size_t i = support.size(); i-- > 0;) {
            const int r = bound[static_cast<std::size_t>(support[i])] + 1;
            code = code * r + exps[static_cast<std::size_t>(support[i])];
        }
        return static_cast<std::uint32_t>(code);
    }

    // #{variables v : exps[v] == bound[v]} including the free ones.
    int rho(std::uint32_t code) const {
        int out = free_rho;
        long long rem = code;
        for (std::size_t i = 0; i < support.size(); ++i) {
            const int r = bound[static_cast<std::size_t>(support[i])] + 1;
            if (static_cast<int>(rem % r) == r - 1) ++out;
            rem /= r;
        }
        return out;
    }

    int max_rho() const {
        int out = 0;
        for (std::uint32_t e : elements) out = std::max(out, rho(e));
        return out;
    }
};

inline CharacteristicPoset build_poset(const MonomialIdeal& I, PosetMode mode) {
    CharacteristicPoset poset;
    poset.nvars = I.nvars();
    poset.mode = mode;
    const Monomial top = I.lcm_of_gens();
    poset.bound = top.exponents();
    for (int v = 0; v < I.nvars(); ++v)
        if (poset.bound[static_cast<std::size_t>(v)] > 0) poset.support.push_back(v);
    poset.free_rho = I.nvars() - static_cast<int>(poset.support.size());
    for (int v : poset.support) {
        poset.box_size *= poset.bound[static_cast<std::size_t>(v)] + 1;
        if (poset.box_size > (1 << 20)) fail(errc::too_large, "poset exceeds 2^20 cells");
    }
    poset.member.assign(static_cast<std::size_t>(poset.box_size), 0);
    for (long long code = 0; code < poset.box_size; ++code) {
        const bool inside = I.contains(Monomial::from_exponents(poset.decode(static_cast<std::uint32_t>(code))));
        const bool keep = (mode == PosetMode::Ideal) ? inside : !inside;
        if (keep) {
            poset.member[static_cast<std::size_t>(code)] = 1;
            poset.elements.push_back(static_cast<std::uint32_t>(code));
        }
    }
    return poset;
}

struct PosetInterval {
    std::vector<int> lower;
    std::vector<int> upper;
};

struct IntervalPartition {
    std::vector<PosetInterval> intervals;
    int value = 0; // min rho over upper ends; nvars for the empty poset
};

namespace detail {

struct CoverInterval {
    std::uint32_t lo = 0, hi = 0;
    std::vector<int> members; // element ids
};

// Enumerates every lattice point of [lo_exps, hi_exps] (over the support
// coordinates) and reports its code.
template <typename Fn>
inline void walk_box(const CharacteristicPoset& poset, const std::vector<int>& lo_exps,
                     const std::vector<int>& hi_exps, Fn&& fn) {
    std::vector<int> cur(lo_exps);
    while (true) {
        fn(poset.encode(cur));
        std::size_t i = 0;
        for (; i < poset.support.size(); ++i) {
            const std::size_t v = static_cast<std::size_t>(poset.support[i]);
            if (cur[v] < hi_exps[v]) {
                ++cur[v];
                break;
            }
            cur[v] = lo_exps[v];
        }
        if (i == poset.support.size()) break;
    }
}

struct CoverSearch {
    const CharacteristicPoset& poset;
    std::vector<CoverInterval> intervals;
    std::vector<std::vector<int>> intervals_of; // element id -> interval ids
    std::vector<int> elem_id;                   // code -> element id (or -1)
    std::vector<char> covered, live;
    std::vector<int> count;
    int n_covered = 0;

    enum class Op : std::uint8_t { Cover, Dead };
    std::vector<std::pair<Op, int>> trail;
    std::vector<int> chosen;

    explicit CoverSearch(const CharacteristicPoset& p) : poset(p) {}

    bool build(int k) {
        const auto m = poset.elements.size();
        elem_id.assign(static_cast<std::size_t>(poset.box_size), -1);
        for (std::size_t i = 0; i < m; ++i) elem_id[poset.elements[i]] = static_cast<int>(i);

        long long effort = 0;
        for (std::size_t ub = 0; ub < m; ++ub) {
            const std::uint32_t hi = poset.elements[ub];
            if (poset.rho(hi) < k) continue;
            const std::vector<int> hi_exps = poset.decode(hi);
            std::vector<int> zero(static_cast<std::size_t>(poset.nvars), 0);
            // lower ends: every member point below hi (membership is
            // automatic for the quotient mode, filtered for the ideal mode)
            walk_box(poset, zero, hi_exps, [&](std::uint32_t lo) {
                if (elem_id[lo] < 0) return;
                CoverInterval iv;
                iv.lo = lo;
                iv.hi = hi;
                walk_box(poset, poset.decode(lo), hi_exps, [&](std::uint32_t c) {
                    iv.members.push_back(elem_id[c]);
                });
                effort += static_cast<long long>(iv.members.size());
                if (effort > 50'000'000) fail(errc::too_large, "interval table exceeds the search budget");
                intervals.push_back(std::move(iv));
            });
        }
        intervals_of.assign(m, {});
        for (std::size_t j = 0; j < intervals.size(); ++j)
            for (int e : intervals[j].members) intervals_of[static_cast<std::size_t>(e)].push_back(static_cast<int>(j));
        // candidate order: larger rho of the upper end first
        for (auto& list : intervals_of)
            std::stable_sort(list.begin(), list.end(), [&](int x, int y) {
                return poset.rho(intervals[static_cast<std::size_t>(x)].hi) >
                       poset.rho(intervals[static_cast<std::size_t>(y)].hi);
            });
        covered.assign(m, 0);
        live.assign(intervals.size(), 1);
        count.assign(m, 0);
        for (std::size_t e = 0; e < m; ++e) count[e] = static_cast<int>(intervals_of[e].size());
        n_covered = 0;
        return true;
    }

    void place(int j) {
        for (int c : intervals[static_cast<std::size_t>(j)].members) {
            covered[static_cast<std::size_t>(c)] = 1;
            ++n_covered;
            trail.emplace_back(Op::Cover, c);
        }
        for (int c : intervals[static_cast<std::size_t>(j)].members) {
            for (int other : intervals_of[static_cast<std::size_t>(c)]) {
                if (!live[static_cast<std::size_t>(other)]) continue;
                live[static_cast<std::size_t>(other)] = 0;
                trail.emplace_back(Op::Dead, other);
                for (int d : intervals[static_cast<std::size_t>(other)].members)
                    if (!covered[static_cast<std::size_t>(d)]) --count[static_cast<std::size_t>(d)];
            }
        }
    }

    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            auto [op, idx] = trail.back();
            trail.pop_back();
            if (op == Op::Dead) {
                for (int d : intervals[static_cast<std::size_t>(idx)].members)
                    if (!covered[static_cast<std::size_t>(d)]) ++count[static_cast<std::size_t>(d)];
                live[static_cast<std::size_t>(idx)] = 1;
            } else {
                covered[static_cast<std::size_t>(idx)] = 0;
                --n_covered;
            }
        }
    }

    bool solve() {
        if (n_covered == static_cast<int>(poset.elements.size())) return true;
        int pick = -1, best = INT32_MAX;
        for (std::size_t e = 0; e < poset.elements.size(); ++e) {
            if (covered[e]) continue;
            if (count[e] < best) {
                best = count[e];
                pick = static_cast<int>(e);
                if (best == 0) return false;
            }
        }
        const auto& candidates = intervals_of[static_cast<std::size_t>(pick)];
        for (int j : candidates) {
            if (!live[static_cast<std::size_t>(j)]) continue;
            const std::size_t mark = trail.size();
            chosen.push_back(j);
            place(j);
            if (solve()) return true;
            undo(mark);
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace detail

// Decision procedure: can the poset be tiled by disjoint intervals whose
// upper ends all have rho >= k?  Returns a witness partition when it can.
inline std::optional<IntervalPartition> sdepth_at_least(const CharacteristicPoset& poset, int k) {
    IntervalPartition out;
    out.value = poset.nvars;
    if (poset.elements.empty()) return out;

    detail::CoverSearch search(poset);
    search.build(k);
    if (!search.solve()) return std::nullopt;

    out.value = INT32_MAX;
    for (int j : search.chosen) {
        const auto& iv = search.intervals[static_cast<std::size_t>(j)];
        out.intervals.push_back({poset.decode(iv.lo), poset.decode(iv.hi)});
        out.value = std::min(out.value, poset.rho(iv.hi));
    }
    return out;
}

inline std::optional<IntervalPartition> sdepth_at_least(const MonomialIdeal& I, PosetMode mode, int k) {
    return sdepth_at_least(build_poset(I, mode), k);
}

// Exact Stanley depth with a witness partition at the optimum.
inline std::pair<int, IntervalPartition> sdepth_exact(const MonomialIdeal& I, PosetMode mode) {
    const CharacteristicPoset poset = build_poset(I, mode);
    if (poset.elements.empty()) return {poset.nvars, IntervalPartition{{}, poset.nvars}};

    int lo = 0, hi = poset.max_rho();
    IntervalPartition witness = *sdepth_at_least(poset, 0);
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        if (auto part = sdepth_at_least(poset, mid)) {
            witness = std::move(*part);
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    witness.value = lo;
    for (const auto& iv : witness.intervals)
        witness.value = std::min(witness.value, poset.rho(poset.encode(iv.upper)));
    return {lo, std::move(witness)};
}

// Independent re-verification of a witness: intervals sit inside the poset,
// tile it exactly, and their upper-end rho minimum matches the claim.
inline bool verify_partition(const CharacteristicPoset& poset, const IntervalPartition& partition,
                             int claimed_value) {
    std::vector<char> seen(static_cast<std::size_t>(poset.box_size), 0);
    long long covered = 0;
    int min_rho = poset.nvars;
    for (const auto& iv : partition.intervals) {
        if (static_cast<int>(iv.lower.size()) != poset.nvars || static_cast<int>(iv.upper.size()) != poset.nvars)
            return false;
        for (int v = 0; v < poset.nvars; ++v) {
            if (iv.lower[static_cast<std::size_t>(v)] > iv.upper[static_cast<std::size_t>(v)]) return false;
            if (iv.upper[static_cast<std::size_t>(v)] > poset.bound[static_cast<std::size_t>(v)]) return false;
            if (iv.lower[static_cast<std::size_t>(v)] < 0) return false;
        }
        bool ok = true;
        detail::walk_box(poset, iv.lower, iv.upper, [&](std::uint32_t c) {
            if (!poset.member[c] || seen[c]) ok = false;
            seen[c] = 1;
            ++covered;
        });
        if (!ok) return false;
        min_rho = std::min(min_rho, poset.rho(poset.encode(iv.upper)));
    }
    if (covered != static_cast<long long>(poset.elements.size())) return false;
    return min_rho == claimed_value;
}

} // namespace ivi
