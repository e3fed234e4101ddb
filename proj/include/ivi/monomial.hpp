#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ivi/errors.hpp"
#include "ivi/seqpair.hpp"

namespace ivi {

// Exponent cap; products beyond this indicate a runaway computation rather
// than a legitimate desk-scale input.
inline constexpr int kMaxExponent = 1 << 20;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {
        if (nvars < 0) fail(errc::out_of_range, "negative variable count");
    }

    static Monomial from_exponents(std::vector<int> exps) {
        for (int e : exps)
            if (e < 0) fail(errc::out_of_range, "negative exponent");
        Monomial m;
        m.exps_ = std::move(exps);
        return m;
    }

    static Monomial variable(int nvars, int var) {
        Monomial m(nvars);
        if (var < 1 || var > nvars) fail(errc::out_of_range, "variable index out of range");
        m.exps_[var - 1] = 1;
        return m;
    }

    // Product x_lo * x_{lo+1} * ... * x_hi (1-based, inclusive).
    static Monomial interval(int nvars, int lo, int hi) {
        Monomial m(nvars);
        if (lo < 1 || hi > nvars || lo > hi) fail(errc::out_of_range, "bad interval bounds");
        for (int v = lo; v <= hi; ++v) m.exps_[v - 1] = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_unit() const { return degree() == 0; }
    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
    }

    // Bitmask of variables with positive exponent; requires nvars <= 64.
    std::uint64_t support_mask() const {
        if (nvars() > 64) fail(errc::too_large, "support mask needs at most 64 variables");
        std::uint64_t mask = 0;
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
        return mask;
    }

    bool divides(const Monomial& other) const {
        check_arity(other);
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    friend Monomial mul(const Monomial& x, const Monomial& y) {
        x.check_arity(y);
        Monomial out(x.nvars());
        for (int i = 0; i < x.nvars(); ++i) {
            const long long e = static_cast<long long>(x.exps_[i]) + y.exps_[i];
            if (e > kMaxExponent) fail(errc::overflow, "exponent overflow in product");
            out.exps_[i] = static_cast<int>(e);
        }
        return out;
    }

    friend Monomial gcd(const Monomial& x, const Monomial& y) {
        x.check_arity(y);
        Monomial out(x.nvars());
        for (int i = 0; i < x.nvars(); ++i) out.exps_[i] = std::min(x.exps_[i], y.exps_[i]);
        return out;
    }

    friend Monomial lcm(const Monomial& x, const Monomial& y) {
        x.check_arity(y);
        Monomial out(x.nvars());
        for (int i = 0; i < x.nvars(); ++i) out.exps_[i] = std::max(x.exps_[i], y.exps_[i]);
        return out;
    }

    // Exact division; requires divisor | this.
    friend Monomial exact_div(const Monomial& x, const Monomial& y) {
        x.check_arity(y);
        Monomial out(x.nvars());
        for (int i = 0; i < x.nvars(); ++i) {
            if (y.exps_[i] > x.exps_[i]) fail(errc::undefined, "monomial division is not exact");
            out.exps_[i] = x.exps_[i] - y.exps_[i];
        }
        return out;
    }

    // this / gcd(this, u): the generator image under the colon by u.
    friend Monomial colon_quotient(const Monomial& x, const Monomial& u) {
        return exact_div(x, gcd(x, u));
    }

    // Canonical order: degree first, then lexicographic on exponent vectors
    // (descending, so generators in earlier variables list first).
    friend bool canonical_less(const Monomial& x, const Monomial& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.exps_ > y.exps_;
    }

    bool operator==(const Monomial&) const = default;

    std::string str() const {
        if (is_unit()) return "1";
        std::ostringstream os;
        for (int i = 0; i < nvars(); ++i) {
            if (exps_[i] == 0) continue;
            os << "x" << (i + 1);
            if (exps_[i] > 1) os << "^" << exps_[i];
        }
        return os.str();
    }

private:
    void check_arity(const Monomial& other) const {
        if (nvars() != other.nvars()) fail(errc::arity_mismatch, "monomials live in different rings");
    }

    std::vector<int> exps_;
};

// Monomial ideal held by its minimal generating set, canonically sorted so
// that ideal equality is plain list equality.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
        for (const auto& g : gens)
            if (g.nvars() != nvars) fail(errc::arity_mismatch, "generator arity differs from the ideal's ring");
        gens_ = minimalize(std::move(gens));
    }

    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }

    static MonomialIdeal unit(int nvars) {
        return MonomialIdeal(nvars, {Monomial(nvars)});
    }

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    int gen_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
    }

    bool contains(const Monomial& m) const {
        if (m.nvars() != nvars_) fail(errc::arity_mismatch, "membership test across rings");
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    Monomial lcm_of_gens() const {
        Monomial acc(nvars_);
        for (const auto& g : gens_) acc = lcm(acc, g);
        return acc;
    }

    bool operator==(const MonomialIdeal&) const = default;

    std::string str() const {
        if (is_zero()) return "(0)";
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ", ";
            out += gens_[i].str();
        }
        return out + ")";
    }

private:
    static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) { return canonical_less(x, y); });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> out;
        for (const auto& g : gens) {
            bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
            if (!redundant) out.push_back(g);
        }
        return out;
    }

    int nvars_ = 0;
    std::vector<Monomial> gens_;
};

// The squarefree ideal generated by the pair's intervals.
inline MonomialIdeal interval_ideal(const SequencePair& sp) {
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(sp.count()));
    for (int i = 0; i < sp.count(); ++i)
        gens.push_back(Monomial::interval(sp.nvars, sp.starts[i], sp.ends[i]));
    return MonomialIdeal(sp.nvars, std::move(gens));
}

inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
    if (u.nvars() != I.nvars()) fail(errc::arity_mismatch, "colon across rings");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(colon_quotient(g, u));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) fail(errc::arity_mismatch, "sum across rings");
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal(I.nvars(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) fail(errc::arity_mismatch, "intersection across rings");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& g : I.gens())
        for (const auto& h : J.gens()) gens.push_back(lcm(g, h));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) fail(errc::arity_mismatch, "product across rings");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& g : I.gens())
        for (const auto& h : J.gens()) gens.push_back(mul(g, h));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& I, int t) {
    if (t < 0) fail(errc::out_of_range, "negative power");
    MonomialIdeal acc = MonomialIdeal::unit(I.nvars());
    for (int k = 0; k < t; ++k) acc = product(acc, I);
    return acc;
}

// A monomial u outside I acts injectively on the quotient iff the colon by
// u leaves the ideal unchanged.
inline bool is_regular(const Monomial& u, const MonomialIdeal& I) {
    if (I.contains(u)) fail(errc::not_in_quotient, "element lies in the ideal");
    return colon(I, u) == I;
}

// All inclusion-minimal variable sets (1-based, sorted) meeting the support
// of every generator.  Requires a squarefree, nonzero, proper ideal.
inline std::vector<std::vector<int>> minimal_covers(const MonomialIdeal& I) {
    if (I.is_zero()) fail(errc::zero_ideal, "the zero ideal has no covers");
    if (I.is_unit()) fail(errc::zero_ideal, "expected a proper ideal");
    if (!I.is_squarefree()) fail(errc::not_squarefree, "covers are defined for squarefree ideals");

    // Work inside the union of supports.
    std::vector<int> support;
    for (int v = 0; v < I.nvars(); ++v) {
        for (const auto& g : I.gens())
            if (g[v] > 0) {
                support.push_back(v);
                break;
            }
    }
    const int k = static_cast<int>(support.size());
    if (k > 22) fail(errc::too_large, "cover enumeration supports at most 22 active variables");

    std::vector<std::uint64_t> gen_masks;
    for (const auto& g : I.gens()) {
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i)
            if (g[support[i]] > 0) m |= std::uint64_t{1} << i;
        gen_masks.push_back(m);
    }

    auto covers_all = [&](std::uint64_t set) {
        for (std::uint64_t gm : gen_masks)
            if ((gm & set) == 0) return false;
        return true;
    };

    std::vector<std::vector<int>> out;
    for (std::uint64_t set = 1; set < (std::uint64_t{1} << k); ++set) {
        if (!covers_all(set)) continue;
        bool minimal = true;
        for (int i = 0; i < k && minimal; ++i)
            if ((set >> i) & 1)
                if (covers_all(set & ~(std::uint64_t{1} << i))) minimal = false;
        if (!minimal) continue;
        std::vector<int> vars;
        for (int i = 0; i < k; ++i)
            if ((set >> i) & 1) vars.push_back(support[i] + 1);
        out.push_back(std::move(vars));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

inline int min_cover_size(const MonomialIdeal& I) {
    const auto covers = minimal_covers(I);
    int best = I.nvars();
    for (const auto& c : covers) best = std::min<int>(best, static_cast<int>(c.size()));
    return best;
}

} // namespace ivi
