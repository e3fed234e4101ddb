#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ivi/errors.hpp"
#include "ivi/monomial.hpp"
#include "ivi/seqpair.hpp"

namespace ivi {

namespace detail {

// Memo key: pairs with the same nvars that differ by a translation have the
// same invariants, so keys are normalized to start at 1.
using PairKey = SequencePair;

inline PairKey memo_key(const SequencePair& sp) { return shift_to_origin(sp); }

inline int quotient_depth_impl(const SequencePair& sp, std::map<PairKey, int>& memo) {
    if (sp.empty()) return sp.nvars;
    const PairKey key = memo_key(sp);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int j = head_size(sp);
    int value;
    if (j == 1) {
        value = quotient_depth_impl(drop_head(sp), memo) - 1;
    } else {
        value = quotient_depth_impl(collapse_head(sp), memo) - 1;
    }
    memo.emplace(key, value);
    return value;
}

} // namespace detail

// depth(S/I) = sdepth(S/I) computed by the block recursion: the leading
// block is either dropped (head of size 1) or collapsed, and each step
// costs one.
inline int quotient_depth(const SequencePair& sp) {
    std::map<detail::PairKey, int> memo;
    return detail::quotient_depth_impl(sp, memo);
}

// dim(S/I): nvars minus the number of drop_head steps to exhaustion.
inline int quotient_dim(const SequencePair& sp) {
    SequencePair cur = sp;
    int steps = 0;
    while (!cur.empty()) {
        cur = drop_head(cur);
        ++steps;
    }
    return sp.nvars - steps;
}

inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline int ceil_div(int a, int b) { return -floor_div(-a, b); }

// Closed form for the sliding-window family of width m over nvars.
inline int window_depth_closed_form(int nvars, int m) {
    return nvars + 1 - floor_div(nvars + 1, m + 1) - ceil_div(nvars + 1, m + 1);
}

// Closed form for depth(S/I) in the shapes that admit one.
inline std::optional<int> closed_form_depth(const SequencePair& sp) {
    const Shape shape = classify(sp);
    const int n = sp.nvars;
    const int s = sp.count();
    switch (shape.tag) {
        case ShapeTag::Empty: return n;
        case ShapeTag::Principal: return n - 1;
        case ShapeTag::Spread: return n - s;
        case ShapeTag::Chained: return n - s + s / 3;
        case ShapeTag::Path: return window_depth_closed_form(n, shape.path_width);
        case ShapeTag::Generic: return std::nullopt;
    }
    return std::nullopt;
}

// Closed form for dim(S/I) under the spread condition together with the
// overlap condition ends[i] >= starts[i+1] for all i.
inline std::optional<int> closed_form_dim(const SequencePair& sp) {
    if (!spread_condition(sp)) return std::nullopt;
    for (int i = 0; i + 1 < sp.count(); ++i)
        if (sp.ends[i] < sp.starts[i + 1]) return std::nullopt;
    return sp.nvars - ceil_div(sp.count(), 2);
}

struct InvariantReport {
    int nvars = 0;
    int interval_count = 0;
    int depth_quotient = 0;   // recursion value; equals sdepth(S/I)
    int sdepth_quotient = 0;
    int dim_quotient = 0;
    std::optional<int> depth_ideal;         // depth_quotient + 1 (nonzero ideals)
    std::optional<int> sdepth_ideal_lower;  // max(depth_ideal, nvars - count/2)
    Shape shape;
    std::optional<int> closed_form;  // shape closed form; always equals depth_quotient
};

inline InvariantReport invariant_report(const SequencePair& sp) {
    InvariantReport rep;
    rep.nvars = sp.nvars;
    rep.interval_count = sp.count();
    rep.depth_quotient = quotient_depth(sp);
    rep.sdepth_quotient = rep.depth_quotient;
    rep.dim_quotient = quotient_dim(sp);
    if (sp.count() >= 1) {
        rep.depth_ideal = rep.depth_quotient + 1;
        rep.sdepth_ideal_lower = std::max(rep.depth_quotient + 1, sp.nvars - sp.count() / 2);
    }
    rep.shape = classify(sp);
    rep.closed_form = closed_form_depth(sp);
    return rep;
}

namespace detail {

using VarSet = std::vector<int>; // sorted, 1-based

inline std::vector<VarSet> irredundant(std::vector<VarSet> primes) {
    std::sort(primes.begin(), primes.end(), [](const VarSet& x, const VarSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<VarSet> out;
    for (const auto& p : primes) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const VarSet& q) {
            return std::includes(p.begin(), p.end(), q.begin(), q.end());
        });
        if (!redundant) out.push_back(p);
    }
    return out;
}

// Splitting recursion on squarefree ideals: peel the top variable of the
// first non-linear generator, I = (I : x_c) \cap (I, x_c).
inline std::vector<VarSet> primdec_ideal(const MonomialIdeal& I) {
    if (I.is_zero()) return {};
    bool all_linear = std::all_of(I.gens().begin(), I.gens().end(),
                                  [](const Monomial& g) { return g.degree() == 1; });
    if (all_linear) {
        VarSet p;
        for (const auto& g : I.gens())
            for (int v = 0; v < I.nvars(); ++v)
                if (g[v] > 0) p.push_back(v + 1);
        std::sort(p.begin(), p.end());
        return {p};
    }
    int pivot = -1; // 0-based variable index
    for (const auto& g : I.gens()) {
        if (g.degree() < 2) continue;
        for (int v = I.nvars() - 1; v >= 0; --v)
            if (g[v] > 0) {
                pivot = v;
                break;
            }
        break;
    }
    const Monomial xc = Monomial::variable(I.nvars(), pivot + 1);

    std::vector<VarSet> primes = primdec_ideal(colon(I, xc));

    std::vector<Monomial> rest;
    for (const auto& g : I.gens())
        if (g[pivot] == 0) rest.push_back(g);
    MonomialIdeal without(I.nvars(), std::move(rest));
    if (without.is_zero()) {
        primes.push_back({pivot + 1});
    } else {
        for (auto p : primdec_ideal(without)) {
            p.insert(std::lower_bound(p.begin(), p.end(), pivot + 1), pivot + 1);
            primes.push_back(std::move(p));
        }
    }
    return irredundant(std::move(primes));
}

} // namespace detail

// Irredundant list of minimal primes, each given by its variable set.
// Head of size 1: I decomposes as the intersection of (x_c, rest) over the
// first interval's variables c; otherwise peel variables off the top of the
// first interval at the ideal level.
inline std::vector<std::vector<int>> primary_decomposition(const SequencePair& sp) {
    if (sp.empty()) fail(errc::empty_pair, "the zero ideal has no primary decomposition");
    std::vector<detail::VarSet> primes;
    if (head_size(sp) == 1) {
        const SequencePair rest = drop_head(sp);
        std::vector<detail::VarSet> sub;
        if (rest.empty())
            sub.push_back({});
        else
            sub = primary_decomposition(rest);
        for (int c = sp.starts[0]; c <= sp.ends[0]; ++c) {
            for (auto p : sub) {
                p.insert(std::lower_bound(p.begin(), p.end(), c), c);
                primes.push_back(std::move(p));
            }
        }
    } else {
        primes = detail::primdec_ideal(interval_ideal(sp));
    }
    return detail::irredundant(std::move(primes));
}

} // namespace ivi
