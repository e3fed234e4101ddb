#pragma once

#include <vector>

#include "ivi/errors.hpp"
#include "ivi/invariants.hpp"
#include "ivi/monomial.hpp"
#include "ivi/resolutions.hpp"
#include "ivi/seqpair.hpp"

namespace ivi {

// Exact depth of every power of a spread-shaped ideal (the condition holds
// vacuously for at most two intervals, where the value is also exact).
inline int spread_power_depth(const SequencePair& sp, int t) {
    if (t < 1) fail(errc::out_of_range, "power exponent must be at least 1");
    if (!spread_condition(sp)) fail(errc::shape_mismatch, "pair is not spread-shaped");
    return sp.nvars - sp.count();
}

struct PowerBounds {
    int nvars = 0;
    int count = 0;
    int exponent = 0;
    int lower = 0;
    int upper = 0;
};

// Recursive lower bound for the depth of chained-shape powers:
//   d(s,t) = n - s                    for s <= 2,
//   d(s,1) = n - s + floor(s/3),
//   d(s,t) = min{ d(s-1,t-1)-1, d(s-2,t)-1, d(s-3,t)-2 }   otherwise.
inline int chained_power_lower_rec(int count, int exponent, int nvars) {
    if (count < 0 || exponent < 1) fail(errc::out_of_range, "bad recursion arguments");
    std::vector<std::vector<int>> memo(static_cast<std::size_t>(count) + 1,
                                       std::vector<int>(static_cast<std::size_t>(exponent) + 1, INT32_MIN));
    auto rec = [&](auto&& self, int s, int t) -> int {
        if (s <= 2) return nvars - s;
        if (t == 1) return nvars - s + s / 3;
        int& slot = memo[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (slot != INT32_MIN) return slot;
        int v = self(self, s - 1, t - 1) - 1;
        v = std::min(v, self(self, s - 2, t) - 1);
        v = std::min(v, self(self, s - 3, t) - 2);
        return slot = v;
    };
    return rec(rec, count, exponent);
}

// Closed form the recursion must reproduce: n - s + max{floor((s-t+1)/3), 0}.
inline int chained_power_lower_closed(int count, int exponent, int nvars) {
    return nvars - count + std::max(floor_div(count - exponent + 1, 3), 0);
}

// Sandwich bounds for the depth of a chained-shape power.
inline PowerBounds chained_power_bounds(const SequencePair& sp, int t) {
    if (t < 1) fail(errc::out_of_range, "power exponent must be at least 1");
    if (!chained_condition(sp)) fail(errc::shape_mismatch, "pair is not chained-shaped");
    PowerBounds pb;
    pb.nvars = sp.nvars;
    pb.count = sp.count();
    pb.exponent = t;
    pb.upper = sp.nvars - sp.count() + sp.count() / 3;
    pb.lower = chained_power_lower_closed(sp.count(), t, sp.nvars);
    return pb;
}

// Exact depth of the power's quotient via the homology oracle; tiny
// instances only (the multidegree lattice guard applies).
inline int power_depth_oracle(const SequencePair& sp, int t) {
    if (t < 1) fail(errc::out_of_range, "power exponent must be at least 1");
    const MonomialIdeal It = power(interval_ideal(sp), t);
    const BettiTable qt = betti_by_homology(It, Subject::Quotient);
    return depth_from_proj_dim(sp.nvars, qt);
}

} // namespace ivi
