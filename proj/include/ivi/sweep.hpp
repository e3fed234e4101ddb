#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ivi/errors.hpp"
#include "ivi/hilbert.hpp"
#include "ivi/invariants.hpp"
#include "ivi/monomial.hpp"
#include "ivi/powers.hpp"
#include "ivi/resolutions.hpp"
#include "ivi/seqpair.hpp"
#include "ivi/stanley.hpp"

namespace ivi {

enum class SweepCheck {
    PhiDepth,     // depth recursion == homology oracle
    PhiSdepth,    // depth recursion == exact quotient Stanley depth (+ witness check)
    PsiDim,       // dim recursion == nvars - minimal cover size
    Hilbert,      // series recursion == inclusion-exclusion oracle
    Betti,        // splitting recursion == homology oracle, entry for entry
    Primdec,      // primary decomposition == minimal covers
    Splitting,    // splitting function conditions hold for count >= 2
    ClosedForms,  // shape closed forms, including the ideal-side spread value
    AltSum,       // alternating Betti sums == raw series numerator
    Powers,       // power depth oracle vs spread value / chained sandwich
};

inline const char* sweep_check_name(SweepCheck c) {
    switch (c) {
        case SweepCheck::PhiDepth: return "phi-depth";
        case SweepCheck::PhiSdepth: return "phi-sdepth";
        case SweepCheck::PsiDim: return "psi-dim";
        case SweepCheck::Hilbert: return "hilbert";
        case SweepCheck::Betti: return "betti";
        case SweepCheck::Primdec: return "primdec";
        case SweepCheck::Splitting: return "splitting";
        case SweepCheck::ClosedForms: return "closed-forms";
        case SweepCheck::AltSum: return "alt-sum";
        case SweepCheck::Powers: return "powers";
    }
    return "?";
}

inline const std::vector<SweepCheck>& all_sweep_checks() {
    static const std::vector<SweepCheck> all = {
        SweepCheck::PhiDepth, SweepCheck::PhiSdepth, SweepCheck::PsiDim,  SweepCheck::Hilbert,
        SweepCheck::Betti,    SweepCheck::Primdec,   SweepCheck::Splitting, SweepCheck::ClosedForms,
        SweepCheck::AltSum,   SweepCheck::Powers,
    };
    return all;
}

inline SweepCheck sweep_check_from_name(const std::string& name) {
    for (SweepCheck c : all_sweep_checks())
        if (name == sweep_check_name(c)) return c;
    fail(errc::parse_error, "unknown sweep check '" + name + "'");
}

struct SweepConfig {
    int n_max = 6;
    int s_max = 3;
    std::set<SweepCheck> checks{all_sweep_checks().begin(), all_sweep_checks().end()};
    long long budget_seconds = 0; // 0 = unlimited; negative = stop immediately
    int jobs = 1;
};

struct SweepMismatch {
    std::string pair_text;
    std::string check;
    std::string detail;
};

struct SweepReport {
    long long instances = 0;
    long long instances_done = 0;
    long long checks_run = 0;
    std::vector<SweepMismatch> mismatches;
    bool budget_exhausted = false;
    double seconds = 0.0;
};

// All valid pairs, lexicographic over (nvars, count, starts, ends).
inline std::vector<SequencePair> enumerate_pairs(int n_max, int s_max, int s_min = 1) {
    std::vector<SequencePair> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int s = s_min; s <= s_max; ++s) {
            std::vector<int> a(static_cast<std::size_t>(s)), b(static_cast<std::size_t>(s));
            std::function<void(int)> rec_b = [&](int i) {
                if (i == s) {
                    out.push_back(SequencePair{n, a, b});
                    return;
                }
                int lo = std::max(a[static_cast<std::size_t>(i)], i > 0 ? b[static_cast<std::size_t>(i - 1)] + 1 : 1);
                for (int v = lo; v <= n; ++v) {
                    b[static_cast<std::size_t>(i)] = v;
                    rec_b(i + 1);
                }
            };
            std::function<void(int)> rec_a = [&](int i) {
                if (i == s) {
                    rec_b(0);
                    return;
                }
                for (int v = (i > 0 ? a[static_cast<std::size_t>(i - 1)] + 1 : 1); v <= n; ++v) {
                    a[static_cast<std::size_t>(i)] = v;
                    rec_a(i + 1);
                }
            };
            rec_a(0);
        }
    }
    return out;
}

namespace detail {

struct InstanceResult {
    long long checks_run = 0;
    std::vector<SweepMismatch> mismatches;
};

inline InstanceResult run_instance(const SequencePair& sp, const std::set<SweepCheck>& checks) {
    InstanceResult res;
    const std::string text = to_text(sp);
    auto mismatch = [&](SweepCheck c, const std::string& detail) {
        res.mismatches.push_back({text, sweep_check_name(c), detail});
    };
    auto want = [&](SweepCheck c) { return checks.count(c) > 0; };

    const MonomialIdeal I = interval_ideal(sp);
    const int n = sp.nvars;
    const int s = sp.count();
    const int depth_rec = quotient_depth(sp);
    const int dim_rec = quotient_dim(sp);

    if (want(SweepCheck::PhiDepth)) {
        ++res.checks_run;
        const int depth = depth_from_proj_dim(n, betti_by_homology(I, Subject::Quotient));
        if (depth != depth_rec)
            mismatch(SweepCheck::PhiDepth, "recursion " + std::to_string(depth_rec) + " vs oracle depth " + std::to_string(depth));
    }
    if (want(SweepCheck::PhiSdepth)) {
        ++res.checks_run;
        const auto poset = build_poset(I, PosetMode::Quotient);
        const auto [sd, witness] = sdepth_exact(I, PosetMode::Quotient);
        if (sd != depth_rec)
            mismatch(SweepCheck::PhiSdepth, "recursion " + std::to_string(depth_rec) + " vs sdepth " + std::to_string(sd));
        if (!verify_partition(poset, witness, sd))
            mismatch(SweepCheck::PhiSdepth, "witness partition failed re-verification");
    }
    if (want(SweepCheck::PsiDim)) {
        ++res.checks_run;
        const int dim = n - min_cover_size(I);
        if (dim != dim_rec)
            mismatch(SweepCheck::PsiDim, "recursion " + std::to_string(dim_rec) + " vs cover dim " + std::to_string(dim));
    }
    if (want(SweepCheck::Hilbert)) {
        ++res.checks_run;
        const RationalSeries rec = hilbert_series(sp);
        const RationalSeries orc = hilbert_by_inclusion_exclusion(I);
        if (!(rec == orc))
            mismatch(SweepCheck::Hilbert, "recursion " + rec.str() + " vs oracle " + orc.str());
        if (rec.denom_pow != dim_rec)
            mismatch(SweepCheck::Hilbert, "pole order " + std::to_string(rec.denom_pow) + " vs dim " + std::to_string(dim_rec));
        if (rec.num_at_one() <= 0)
            mismatch(SweepCheck::Hilbert, "non-positive multiplicity " + std::to_string(rec.num_at_one()));
    }
    if (want(SweepCheck::Betti)) {
        ++res.checks_run;
        const BettiTable rec = betti_by_splitting(sp);
        const BettiTable orc = betti_by_homology(I, Subject::Ideal);
        if (!(rec == orc)) mismatch(SweepCheck::Betti, "splitting table differs from homology table");
        long long gens = 0;
        for (const auto& [key, mult] : rec.entries)
            if (key.first == 0) gens += mult;
        if (gens != s) mismatch(SweepCheck::Betti, "generator row sums to " + std::to_string(gens));
        if (proj_dim(rec) != n - depth_rec - 1)
            mismatch(SweepCheck::Betti, "ideal pd " + std::to_string(proj_dim(rec)) + " vs n-depth-1");
    }
    if (want(SweepCheck::Primdec)) {
        ++res.checks_run;
        if (primary_decomposition(sp) != minimal_covers(I))
            mismatch(SweepCheck::Primdec, "decomposition differs from minimal covers");
    }
    if (want(SweepCheck::Splitting) && s >= 2) {
        ++res.checks_run;
        if (!verify_splitting(sp)) mismatch(SweepCheck::Splitting, "splitting conditions failed");
    }
    if (want(SweepCheck::ClosedForms)) {
        ++res.checks_run;
        if (spread_condition(sp)) {
            if (depth_rec != n - s)
                mismatch(SweepCheck::ClosedForms, "spread depth " + std::to_string(depth_rec) + " vs " + std::to_string(n - s));
            const int sd_ideal = sdepth_exact(I, PosetMode::Ideal).first;
            if (sd_ideal != n - s / 2)
                mismatch(SweepCheck::ClosedForms,
                         "spread ideal sdepth " + std::to_string(sd_ideal) + " vs " + std::to_string(n - s / 2));
        }
        if (chained_condition(sp) && depth_rec != n - s + s / 3)
            mismatch(SweepCheck::ClosedForms, "chained depth " + std::to_string(depth_rec));
        if (auto cf = closed_form_depth(sp); cf && *cf != depth_rec)
            mismatch(SweepCheck::ClosedForms, "closed form depth " + std::to_string(*cf));
        if (auto cf = closed_form_dim(sp); cf && *cf != dim_rec)
            mismatch(SweepCheck::ClosedForms, "closed form dim " + std::to_string(*cf));
    }
    if (want(SweepCheck::AltSum)) {
        ++res.checks_run;
        const BettiTable q = quotient_from_ideal(betti_by_splitting(sp));
        std::vector<long long> poly;
        for (const auto& [key, mult] : q.entries) {
            if (static_cast<std::size_t>(key.second) >= poly.size()) poly.resize(static_cast<std::size_t>(key.second) + 1, 0);
            poly[static_cast<std::size_t>(key.second)] += (key.first % 2 == 0) ? mult : -mult;
        }
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
        if (poly != inclusion_exclusion_numerator(I))
            mismatch(SweepCheck::AltSum, "alternating sums differ from the series numerator");
    }
    if (want(SweepCheck::Powers)) {
        if (spread_condition(sp)) {
            ++res.checks_run;
            try {
                const int d2 = power_depth_oracle(sp, 2);
                if (d2 != n - s)
                    mismatch(SweepCheck::Powers, "spread square depth " + std::to_string(d2) + " vs " + std::to_string(n - s));
            } catch (const error& e) {
                if (e.code() != errc::too_large) throw;
            }
        } else if (chained_condition(sp)) {
            ++res.checks_run;
            try {
                const int d2 = power_depth_oracle(sp, 2);
                const PowerBounds pb = chained_power_bounds(sp, 2);
                if (d2 < pb.lower || d2 > pb.upper)
                    mismatch(SweepCheck::Powers, "chained square depth " + std::to_string(d2) + " outside [" +
                                                     std::to_string(pb.lower) + "," + std::to_string(pb.upper) + "]");
            } catch (const error& e) {
                if (e.code() != errc::too_large) throw;
            }
        }
    }
    return res;
}

} // namespace detail

// Runs the recursion-vs-oracle sweep.  Instances are distributed over
// config.jobs workers; the report is assembled in enumeration order, so the
// output does not depend on the parallelism level.
inline SweepReport run_sweep(const SweepConfig& config) {
    const bool wants_sdepth =
        config.checks.count(SweepCheck::PhiSdepth) || config.checks.count(SweepCheck::ClosedForms);
    if (wants_sdepth && config.n_max > 12)
        fail(errc::too_large, "sdepth checks cap n_max at 12");
    const bool wants_homology = config.checks.count(SweepCheck::PhiDepth) ||
                                config.checks.count(SweepCheck::Betti) ||
                                config.checks.count(SweepCheck::AltSum) ||
                                config.checks.count(SweepCheck::Powers);
    if (wants_homology && config.n_max > 14)
        fail(errc::too_large, "homology checks cap n_max at 14");

    const auto started = std::chrono::steady_clock::now();
    const std::vector<SequencePair> instances = enumerate_pairs(config.n_max, config.s_max);
    std::vector<detail::InstanceResult> results(instances.size());
    std::vector<char> ran(instances.size(), 0);

    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> out_of_budget{false};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= instances.size()) break;
            if (config.budget_seconds != 0) {
                const double elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
                if (elapsed > static_cast<double>(config.budget_seconds)) {
                    out_of_budget.store(true);
                    break;
                }
            }
            results[i] = detail::run_instance(instances[i], config.checks);
            ran[i] = 1;
        }
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepReport report;
    report.instances = static_cast<long long>(instances.size());
    report.budget_exhausted = out_of_budget.load();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!ran[i]) continue;
        ++report.instances_done;
        report.checks_run += results[i].checks_run;
        for (auto& mm : results[i].mismatches) report.mismatches.push_back(std::move(mm));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace ivi
