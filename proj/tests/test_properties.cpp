#include <doctest.h>

#include <random>

#include "ivi/powers.hpp"
#include "ivi/stanley.hpp"
#include "ivi/sweep.hpp"

using namespace ivi;

namespace {

// Deterministic random pairs for the property checks.
SequencePair random_pair(std::mt19937& rng, int n_max) {
    std::uniform_int_distribution<int> nd(2, n_max);
    const int n = nd(rng);
    std::uniform_int_distribution<int> sd(1, std::min(3, n));
    const int s = sd(rng);
    while (true) {
        std::vector<int> a(static_cast<std::size_t>(s)), b(static_cast<std::size_t>(s));
        std::uniform_int_distribution<int> vd(1, n);
        for (auto& v : a) v = vd(rng);
        for (auto& v : b) v = vd(rng);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        bool ok = true;
        for (int i = 0; i + 1 < s; ++i)
            if (a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(i + 1)] ||
                b[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i + 1)])
                ok = false;
        for (int i = 0; i < s; ++i)
            if (a[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i)]) ok = false;
        if (ok) return SequencePair{n, a, b};
    }
}

Monomial random_outside_monomial(std::mt19937& rng, const MonomialIdeal& I) {
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        std::vector<int> exps(static_cast<std::size_t>(I.nvars()), 0);
        for (auto& e : exps) e = coin(rng);
        Monomial u = Monomial::from_exponents(exps);
        if (!I.contains(u)) return u;
    }
}

} // namespace

TEST_CASE("colon by an outside monomial never lowers Stanley depth") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 100; ++trial) {
        const SequencePair sp = random_pair(rng, 5);
        const MonomialIdeal I = interval_ideal(sp);
        const Monomial u = random_outside_monomial(rng, I);
        const MonomialIdeal Iu = colon(I, u);
        CAPTURE(to_text(sp));
        CAPTURE(u.str());
        CHECK(sdepth_exact(Iu, PosetMode::Quotient).first >= sdepth_exact(I, PosetMode::Quotient).first);
        if (!Iu.is_unit())
            CHECK(sdepth_exact(Iu, PosetMode::Ideal).first >= sdepth_exact(I, PosetMode::Ideal).first);
    }
}

TEST_CASE("colon by an outside monomial never lowers depth") {
    std::mt19937 rng(604);
    for (int trial = 0; trial < 40; ++trial) {
        const SequencePair sp = random_pair(rng, 5);
        const MonomialIdeal I = interval_ideal(sp);
        const Monomial u = random_outside_monomial(rng, I);
        const MonomialIdeal Iu = colon(I, u);
        if (Iu.is_unit()) continue;
        const int before = depth_from_proj_dim(sp.nvars, betti_by_homology(I, Subject::Quotient));
        const int after = depth_from_proj_dim(sp.nvars, betti_by_homology(Iu, Subject::Quotient));
        CHECK(after >= before);
    }
}

TEST_CASE("adjoining a regular leading generator drops quotient sdepth by one") {
    std::mt19937 rng(77);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 25; ++trial) {
        const SequencePair sp = random_pair(rng, 5);
        if (sp.count() < 2 || head_size(sp) != 1) continue;
        ++seen;
        const SequencePair rest = drop_head(sp);
        const MonomialIdeal I = interval_ideal(sp);
        const MonomialIdeal R = interval_ideal(rest);
        const Monomial u = Monomial::interval(sp.nvars, sp.starts[0], sp.ends[0]);
        CHECK(is_regular(u, R));
        CHECK(sdepth_exact(I, PosetMode::Quotient).first ==
              sdepth_exact(R, PosetMode::Quotient).first - 1);
    }
    CHECK(seen > 0);
}

TEST_CASE("witness partitions re-verify on random instances") {
    std::mt19937 rng(1009);
    for (int trial = 0; trial < 30; ++trial) {
        const SequencePair sp = random_pair(rng, 5);
        const MonomialIdeal I = interval_ideal(sp);
        for (PosetMode mode : {PosetMode::Quotient, PosetMode::Ideal}) {
            const auto poset = build_poset(I, mode);
            const auto [value, witness] = sdepth_exact(I, mode);
            CHECK(verify_partition(poset, witness, value));
            CHECK(witness.value == value);
        }
    }
}

TEST_CASE("translation invariance of tables and series") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        SequencePair sp = random_pair(rng, 5);
        if (sp.starts[0] == 1) continue;
        const SequencePair shifted = shift_to_origin(sp);
        CHECK(betti_by_splitting(sp) == betti_by_splitting(shifted));
        CHECK(hilbert_series(sp) == hilbert_series(shifted));
        CHECK(quotient_dim(sp) == quotient_dim(shifted));
    }
}

TEST_CASE("sweep engine is deterministic across parallelism") {
    SweepConfig one;
    one.n_max = 4;
    one.s_max = 3;
    one.jobs = 1;
    SweepConfig two = one;
    two.jobs = 2;
    const SweepReport r1 = run_sweep(one);
    const SweepReport r2 = run_sweep(two);
    CHECK(r1.instances == r2.instances);
    CHECK(r1.checks_run == r2.checks_run);
    CHECK(r1.mismatches.size() == r2.mismatches.size());
    CHECK(r1.mismatches.empty());
}

TEST_CASE("sweep enumeration is lexicographic and complete") {
    const auto pairs = enumerate_pairs(4, 2);
    CHECK(!pairs.empty());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const auto& p = pairs[i - 1];
        const auto& q = pairs[i];
        const auto key = [](const SequencePair& sp) {
            return std::make_tuple(sp.nvars, sp.count(), sp.starts, sp.ends);
        };
        CHECK(key(p) < key(q));
    }
    // all of them validate
    for (const auto& sp : pairs) CHECK_NOTHROW(validate(sp.starts, sp.ends, sp.nvars));
}

TEST_CASE("sweep budget cutoff reports partial progress") {
    SweepConfig config;
    config.n_max = 5;
    config.s_max = 3;
    config.budget_seconds = -1; // elapses immediately
    const SweepReport report = run_sweep(config);
    CHECK(report.budget_exhausted);
    CHECK(report.instances_done < report.instances);
}

TEST_CASE("sweep caps are enforced") {
    SweepConfig config;
    config.n_max = 13;
    config.checks = {SweepCheck::PhiSdepth};
    CHECK_THROWS_AS(run_sweep(config), error);
    config.n_max = 15;
    config.checks = {SweepCheck::Betti};
    CHECK_THROWS_AS(run_sweep(config), error);
}
