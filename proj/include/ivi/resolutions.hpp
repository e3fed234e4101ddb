#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ivi/errors.hpp"
#include "ivi/invariants.hpp"
#include "ivi/linalg.hpp"
#include "ivi/monomial.hpp"
#include "ivi/seqpair.hpp"

namespace ivi {

enum class Subject { Ideal, Quotient };

// Sparse table of graded multiplicities: (homological index, degree) -> count.
struct BettiTable {
    Subject subject = Subject::Ideal;
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int t, long long mult) {
        if (mult == 0) return;
        auto key = std::make_pair(i, t);
        auto it = entries.find(key);
        if (it == entries.end())
            entries.emplace(key, mult);
        else if ((it->second += mult) == 0)
            entries.erase(it);
    }

    long long at(int i, int t) const {
        auto it = entries.find({i, t});
        return it == entries.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable&) const = default;
};

inline int proj_dim(const BettiTable& bt) {
    if (bt.entries.empty()) fail(errc::empty_table, "projective dimension of an empty table");
    int p = 0;
    for (const auto& [key, mult] : bt.entries) p = std::max(p, key.first);
    return p;
}

inline int regularity(const BettiTable& bt) {
    if (bt.entries.empty()) fail(errc::empty_table, "regularity of an empty table");
    int r = INT32_MIN;
    for (const auto& [key, mult] : bt.entries) r = std::max(r, key.second - key.first);
    return r;
}

inline int depth_from_proj_dim(int nvars, const BettiTable& quotient_table) {
    if (quotient_table.subject != Subject::Quotient)
        fail(errc::undefined, "depth needs a quotient-subject table");
    return nvars - proj_dim(quotient_table);
}

// Quotient table from an ideal table: shift homological degree up by one and
// put the free rank-one cover in place.
inline BettiTable quotient_from_ideal(const BettiTable& ideal_table) {
    BettiTable out;
    out.subject = Subject::Quotient;
    out.add(0, 0, 1);
    for (const auto& [key, mult] : ideal_table.entries) out.add(key.first + 1, key.second, mult);
    return out;
}

namespace detail {

inline BettiTable betti_splitting_impl(const SequencePair& sp, std::map<PairKey, BettiTable>& memo) {
    const PairKey key = memo_key(sp);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    BettiTable out;
    out.subject = Subject::Ideal;
    const int head_deg = sp.ends[0] - sp.starts[0] + 1;
    if (sp.count() == 1) {
        out.add(0, head_deg, 1);
    } else {
        // split off the first generator; the intersection with the rest is
        // the first generator times the colon ideal, handled with a degree
        // shift one homological step down.
        const BettiTable rest = betti_splitting_impl(drop_first(sp), memo);
        const BettiTable shifted_part =
            head_size(sp) == 1 ? rest : betti_splitting_impl(collapse_head(sp), memo);
        out.add(0, head_deg, 1);
        for (const auto& [k, mult] : rest.entries) out.add(k.first, k.second, mult);
        for (const auto& [k, mult] : shifted_part.entries) out.add(k.first + 1, k.second + head_deg, mult);
    }
    memo.emplace(key, out);
    return out;
}

} // namespace detail

// Graded multiplicities of the ideal's minimal resolution via the splitting
// recursion on the first generator.
inline BettiTable betti_by_splitting(const SequencePair& sp) {
    if (sp.empty()) fail(errc::empty_pair, "splitting recursion needs at least one interval");
    std::map<detail::PairKey, BettiTable> memo;
    return detail::betti_splitting_impl(sp, memo);
}

// Homology oracle: for each multidegree a below the generator lcm, the
// multigraded multiplicity is the reduced homology rank of the complex of
// squarefree drops {tau <= supp(a) : x^(a-tau) in I}.  Coarse degrees sum
// over |a| = t.  field_char 0 gives ranks over the rationals; a prime gives
// ranks over F_p for characteristic-sensitivity checks.
inline BettiTable betti_by_homology(const MonomialIdeal& I, Subject subject, std::uint64_t field_char = 0) {
    if (I.is_unit()) {
        BettiTable out;
        out.subject = subject;
        if (subject == Subject::Ideal) out.add(0, 0, 1);
        return out;
    }
    if (I.is_zero()) {
        BettiTable out;
        out.subject = subject;
        if (subject == Subject::Quotient) out.add(0, 0, 1);
        return out;
    }

    const Monomial top = I.lcm_of_gens();
    std::vector<int> support;
    for (int v = 0; v < I.nvars(); ++v)
        if (top[v] > 0) support.push_back(v);
    const int k = static_cast<int>(support.size());
    if (k > 14) fail(errc::too_large, "homology oracle supports at most 14 active variables");
    long long cells = 1;
    for (int v : support) {
        cells *= top[v] + 1;
        if (cells > (1 << 20)) fail(errc::too_large, "multidegree lattice exceeds 2^20 cells");
    }

    BettiTable ideal_table;
    ideal_table.subject = Subject::Ideal;

    std::vector<int> a(static_cast<std::size_t>(I.nvars()), 0);
    std::vector<int> counter(static_cast<std::size_t>(k), 0);
    std::vector<int> supp_pos;
    std::vector<char> face_in;
    IntMatrix boundary;

    for (long long cell = 0; cell < cells; ++cell) {
        for (int i = 0, rem = static_cast<int>(cell); i < k; ++i) {
            counter[static_cast<std::size_t>(i)] = rem % (top[support[static_cast<std::size_t>(i)]] + 1);
            rem /= top[support[static_cast<std::size_t>(i)]] + 1;
        }
        for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] = counter[static_cast<std::size_t>(i)];

        Monomial xa = Monomial::from_exponents(a);
        if (!I.contains(xa)) continue;

        supp_pos.clear();
        for (int v = 0; v < I.nvars(); ++v)
            if (a[static_cast<std::size_t>(v)] > 0) supp_pos.push_back(v);
        const int ks = static_cast<int>(supp_pos.size());

        // depth shortcut: if the full drop stays inside the ideal the
        // complex is the full simplex and all reduced homology vanishes
        {
            std::vector<int> deep = a;
            for (int v : supp_pos) --deep[static_cast<std::size_t>(v)];
            if (I.contains(Monomial::from_exponents(deep))) continue;
        }

        const std::uint32_t nfaces = std::uint32_t{1} << ks;
        face_in.assign(nfaces, 0);
        std::vector<std::vector<std::uint32_t>> by_card(static_cast<std::size_t>(ks) + 1);
        for (std::uint32_t mask = 0; mask < nfaces; ++mask) {
            std::vector<int> e = a;
            for (int i = 0; i < ks; ++i)
                if ((mask >> i) & 1) --e[static_cast<std::size_t>(supp_pos[static_cast<std::size_t>(i)])];
            if (I.contains(Monomial::from_exponents(e))) {
                face_in[mask] = 1;
                by_card[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
            }
        }

        // reduced homology ranks via boundary-map ranks between cardinalities
        std::vector<int> rank_at(static_cast<std::size_t>(ks) + 2, 0);
        for (int c = 1; c <= ks; ++c) {
            const auto& faces = by_card[static_cast<std::size_t>(c)];
            const auto& below = by_card[static_cast<std::size_t>(c - 1)];
            if (faces.empty() || below.empty()) continue;
            std::map<std::uint32_t, int> below_index;
            for (std::size_t i = 0; i < below.size(); ++i) below_index.emplace(below[i], static_cast<int>(i));
            boundary = IntMatrix(static_cast<int>(below.size()), static_cast<int>(faces.size()));
            for (std::size_t fcol = 0; fcol < faces.size(); ++fcol) {
                std::uint32_t mask = faces[fcol];
                int sign = 1;
                for (int i = 0; i < ks; ++i) {
                    if ((mask >> i) & 1) {
                        auto it = below_index.find(mask & ~(std::uint32_t{1} << i));
                        boundary.at(it->second, static_cast<int>(fcol)) = sign;
                        sign = -sign;
                    }
                }
            }
            rank_at[static_cast<std::size_t>(c)] =
                field_char == 0 ? rank_exact(boundary) : rank_mod_p(boundary, field_char);
        }
        const int deg = xa.degree();
        for (int c = 0; c <= ks; ++c) {
            long long h = static_cast<long long>(by_card[static_cast<std::size_t>(c)].size()) -
                          rank_at[static_cast<std::size_t>(c)] - rank_at[static_cast<std::size_t>(c) + 1];
            if (h > 0) ideal_table.add(c, deg, h);
        }
    }

    if (subject == Subject::Ideal) return ideal_table;
    return quotient_from_ideal(ideal_table);
}

// Checks the splitting of the ideal along its first generator u: the colon
// of the remainder by u must equal the derived pair's ideal, and the
// function w -> (u, w/u) on the intersection's generators must satisfy the
// lcm identity plus strict divisibility on every nonempty generator subset.
inline bool verify_splitting(const SequencePair& sp) {
    if (sp.count() < 2) fail(errc::empty_pair, "splitting check needs at least two intervals");
    const Monomial u = Monomial::interval(sp.nvars, sp.starts[0], sp.ends[0]);
    const MonomialIdeal rest = interval_ideal(drop_first(sp));
    const MonomialIdeal derived =
        interval_ideal(head_size(sp) == 1 ? drop_head(sp) : collapse_head(sp));
    if (colon(rest, u) != derived) return false;

    const MonomialIdeal cap = intersect(MonomialIdeal(sp.nvars, {u}), rest);
    const int g = cap.gen_count();
    if (g > 20) fail(errc::too_large, "splitting check supports at most 20 intersection generators");

    std::vector<Monomial> second_parts;
    for (const auto& w : cap.gens()) {
        if (!u.divides(w)) return false;
        Monomial part = exact_div(w, u);
        if (lcm(u, part) != w) return false;
        second_parts.push_back(std::move(part));
    }

    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << g); ++mask) {
        Monomial total(sp.nvars), second(sp.nvars);
        for (int i = 0; i < g; ++i) {
            if ((mask >> i) & 1) {
                total = lcm(total, cap.gens()[static_cast<std::size_t>(i)]);
                second = lcm(second, second_parts[static_cast<std::size_t>(i)]);
            }
        }
        if (!u.divides(total) || u == total) return false;
        if (!second.divides(total) || second == total) return false;
    }
    return true;
}

// Macaulay-style rendering: rows are t - i, columns are the homological index.
inline std::string format_macaulay(const BettiTable& bt) {
    if (bt.entries.empty()) return "(empty table)\n";
    int max_i = 0, min_row = INT32_MAX, max_row = INT32_MIN;
    for (const auto& [key, mult] : bt.entries) {
        max_i = std::max(max_i, key.first);
        min_row = std::min(min_row, key.second - key.first);
        max_row = std::max(max_row, key.second - key.first);
    }
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= max_i; ++i) os << " " << i << "    ";
    os << "\n";
    for (int row = min_row; row <= max_row; ++row) {
        os << row << ":    ";
        for (int i = 0; i <= max_i; ++i) {
            long long v = bt.at(i, row + i);
            if (v == 0)
                os << " .    ";
            else {
                std::string sv = std::to_string(v);
                os << " " << sv << std::string(5 - std::min<std::size_t>(sv.size(), 4), ' ');
            }
        }
        os << "\n";
    }
    return os.str();
}

} // namespace ivi
