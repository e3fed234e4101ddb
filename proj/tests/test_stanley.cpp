#include <doctest.h>

#include <functional>

#include "ivi/invariants.hpp"
#include "ivi/stanley.hpp"

using namespace ivi;

namespace {

SequencePair four_intervals() { return parse_pair("n=8; a=1,2,4,6; b=3,5,7,8"); }

void enumerate_pairs(int n_max, int s_max, const std::function<void(const SequencePair&)>& fn) {
    for (int n = 1; n <= n_max; ++n) {
        for (int s = 1; s <= s_max; ++s) {
            std::vector<int> a(s), b(s);
            std::function<void(int)> rec_b = [&](int i) {
                if (i == s) return fn(SequencePair{n, a, b});
                int lo = std::max(a[i], i > 0 ? b[i - 1] + 1 : 1);
                for (int v = lo; v <= n; ++v) {
                    b[i] = v;
                    rec_b(i + 1);
                }
            };
            std::function<void(int)> rec_a = [&](int i) {
                if (i == s) return rec_b(0);
                for (int v = (i > 0 ? a[i - 1] + 1 : 1); v <= n; ++v) {
                    a[i] = v;
                    rec_a(i + 1);
                }
            };
            rec_a(0);
        }
    }
}

} // namespace

TEST_CASE("poset construction") {
    MonomialIdeal P(2, {Monomial::interval(2, 1, 2)});
    CharacteristicPoset q = build_poset(P, PosetMode::Quotient);
    CHECK(q.elements.size() == 3);
    CHECK(q.rho(q.encode({1, 0})) == 1);
    CHECK(q.rho(q.encode({0, 0})) == 0);

    CharacteristicPoset ideal = build_poset(P, PosetMode::Ideal);
    REQUIRE(ideal.elements.size() == 1);
    CHECK(ideal.decode(ideal.elements[0]) == std::vector<int>{1, 1});
    CHECK(ideal.rho(ideal.elements[0]) == 2);

    // free variables stay out of the lattice but raise rho uniformly
    MonomialIdeal J(4, {Monomial::interval(4, 2, 3)});
    CharacteristicPoset jq = build_poset(J, PosetMode::Quotient);
    CHECK(jq.box_size == 4);
    CHECK(jq.free_rho == 2);
    CHECK(jq.rho(jq.encode({0, 1, 0, 0})) == 3);

    MonomialIdeal I = interval_ideal(four_intervals());
    CharacteristicPoset full = build_poset(I, PosetMode::Quotient);
    long long inside = 0;
    for (long long c = 0; c < full.box_size; ++c)
        if (I.contains(Monomial::from_exponents(full.decode(static_cast<std::uint32_t>(c))))) ++inside;
    CHECK(static_cast<long long>(full.elements.size()) == 256 - inside);
}

TEST_CASE("sdepth of easy quotients and ideals") {
    MonomialIdeal P(2, {Monomial::interval(2, 1, 2)});
    auto [qv, qw] = sdepth_exact(P, PosetMode::Quotient);
    CHECK(qv == 1);
    CHECK(verify_partition(build_poset(P, PosetMode::Quotient), qw, qv));

    auto [iv, iw] = sdepth_exact(P, PosetMode::Ideal);
    CHECK(iv == 2); // principal: full depth

    MonomialIdeal max3(3, {Monomial::variable(3, 1), Monomial::variable(3, 2), Monomial::variable(3, 3)});
    CHECK(sdepth_exact(max3, PosetMode::Quotient).first == 0);
    CHECK(sdepth_exact(max3, PosetMode::Ideal).first == 2); // ceil(3/2)

    // zero ideal: empty ideal-mode poset, full quotient lattice
    CHECK(sdepth_exact(MonomialIdeal::zero(4), PosetMode::Ideal).first == 4);
    CHECK(sdepth_exact(MonomialIdeal::zero(4), PosetMode::Quotient).first == 4);
}

TEST_CASE("four-interval example: both modes") {
    MonomialIdeal I = interval_ideal(four_intervals());

    auto [qv, qw] = sdepth_exact(I, PosetMode::Quotient);
    CHECK(qv == 5);
    CHECK(verify_partition(build_poset(I, PosetMode::Quotient), qw, 5));
    CHECK(qw.value == 5);

    auto [iv, iw] = sdepth_exact(I, PosetMode::Ideal);
    CHECK(iv == 7);
    CHECK(verify_partition(build_poset(I, PosetMode::Ideal), iw, 7));

    CHECK_FALSE(sdepth_at_least(I, PosetMode::Quotient, 6).has_value());
    auto at5 = sdepth_at_least(I, PosetMode::Quotient, 5);
    REQUIRE(at5.has_value());
    CHECK(verify_partition(build_poset(I, PosetMode::Quotient), *at5, at5->value));
    CHECK(at5->value >= 5);
}

TEST_CASE("quotient sdepth equals the depth recursion on small pairs") {
    enumerate_pairs(5, 2, [](const SequencePair& sp) {
        MonomialIdeal I = interval_ideal(sp);
        CHECK(sdepth_exact(I, PosetMode::Quotient).first == quotient_depth(sp));
    });
}

TEST_CASE("ideal-mode lower bounds on small pairs") {
    enumerate_pairs(5, 2, [](const SequencePair& sp) {
        MonomialIdeal I = interval_ideal(sp);
        const int sd = sdepth_exact(I, PosetMode::Ideal).first;
        CHECK(sd >= quotient_depth(sp) + 1);
        CHECK(sd >= sp.nvars - sp.count() / 2);
    });
}

TEST_CASE("spread ideals attain the complete-intersection value") {
    // disjoint supports: sdepth(I) = n - floor(s/2)
    MonomialIdeal A = interval_ideal(validate({1, 4}, {2, 5}, 5));
    CHECK(sdepth_exact(A, PosetMode::Ideal).first == 4);
    MonomialIdeal B = interval_ideal(validate({1, 3, 5}, {1, 3, 5}, 5));
    CHECK(sdepth_exact(B, PosetMode::Ideal).first == 4);
}

TEST_CASE("colon monotonicity on fixed cases") {
    MonomialIdeal I = interval_ideal(four_intervals());
    Monomial u = Monomial::interval(8, 2, 3);
    REQUIRE_FALSE(I.contains(u));
    MonomialIdeal Iu = colon(I, u);
    for (PosetMode mode : {PosetMode::Quotient, PosetMode::Ideal}) {
        CHECK(sdepth_exact(Iu, mode).first >= sdepth_exact(I, mode).first);
    }
}

TEST_CASE("witness verification catches corruption") {
    MonomialIdeal P(2, {Monomial::interval(2, 1, 2)});
    CharacteristicPoset q = build_poset(P, PosetMode::Quotient);
    auto [value, witness] = sdepth_exact(P, PosetMode::Quotient);
    REQUIRE(verify_partition(q, witness, value));

    IntervalPartition broken = witness;
    broken.intervals.pop_back(); // no longer covers
    CHECK_FALSE(verify_partition(q, broken, value));
    CHECK_FALSE(verify_partition(q, witness, value + 1));
}

TEST_CASE("poset guardrail") {
    // 21 variables of exponent bound 1 exceed 2^20 cells
    std::vector<Monomial> gens;
    gens.push_back(Monomial::interval(21, 1, 21));
    MonomialIdeal big(21, gens);
    CHECK_THROWS_AS(build_poset(big, PosetMode::Quotient), error);
}

TEST_CASE("tiny power posets work with general exponent bounds") {
    // squares of a two-generator spread pair keep quotient sdepth n - s
    MonomialIdeal I = interval_ideal(validate({1, 3}, {1, 3}, 4));
    MonomialIdeal I2 = power(I, 2);
    CHECK(sdepth_exact(I2, PosetMode::Quotient).first == 2);

    // principal squares keep full quotient sdepth n - 1
    MonomialIdeal P2 = power(interval_ideal(validate({1}, {2}, 3)), 2);
    CHECK(sdepth_exact(P2, PosetMode::Quotient).first == 2);
}
