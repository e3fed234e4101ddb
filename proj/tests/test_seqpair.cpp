#include <doctest.h>

#include <functional>

#include "ivi/seqpair.hpp"

using namespace ivi;

namespace {

// The two worked examples used throughout the suite.
SequencePair five_intervals() { return validate({1, 2, 3, 6, 7}, {4, 5, 7, 8, 10}, 10); }
SequencePair four_intervals() { return validate({1, 2, 4, 6}, {3, 5, 7, 8}, 8); }

// Every valid pair with the given bounds, enumerated lexicographically.
void enumerate_pairs(int n_max, int s_max, const std::function<void(const SequencePair&)>& fn) {
    for (int n = 1; n <= n_max; ++n) {
        for (int s = 1; s <= s_max; ++s) {
            std::vector<int> a(s), b(s);
            std::function<void(int)> rec_b = [&](int i) {
                if (i == s) {
                    fn(SequencePair{n, a, b});
                    return;
                }
                int lo = std::max(a[i], i > 0 ? b[i - 1] + 1 : 1);
                for (int v = lo; v <= n; ++v) {
                    b[i] = v;
                    rec_b(i + 1);
                }
            };
            std::function<void(int)> rec_a = [&](int i) {
                if (i == s) {
                    rec_b(0);
                    return;
                }
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

TEST_CASE("validate accepts the worked examples and the empty pair") {
    CHECK_NOTHROW(five_intervals());
    CHECK_NOTHROW(four_intervals());
    SequencePair empty = validate({}, {}, 5);
    CHECK(empty.count() == 0);
    CHECK(empty.nvars == 5);
}

TEST_CASE("validate rejects malformed input") {
    CHECK_THROWS_WITH_AS(validate({2, 1}, {3, 4}, 4), doctest::Contains("NonIncreasing"), error);
    CHECK_THROWS_AS(validate({1, 2}, {3}, 4), error);
    CHECK(doctest::String(errc_name(errc::length_mismatch)) == "LengthMismatch");
    try {
        validate({1, 2}, {3}, 4);
    } catch (const error& e) {
        CHECK(e.code() == errc::length_mismatch);
    }
    try {
        validate({3}, {2}, 4);
    } catch (const error& e) {
        CHECK(e.code() == errc::interval_reversed);
    }
    try {
        validate({1}, {5}, 4);
    } catch (const error& e) {
        CHECK(e.code() == errc::out_of_range);
    }
    try {
        validate({0}, {2}, 4);
    } catch (const error& e) {
        CHECK(e.code() == errc::out_of_range);
    }
    // equal endpoints are allowed (single-variable generators)
    CHECK_NOTHROW(validate({2}, {2}, 3));
}

TEST_CASE("head_size") {
    CHECK(head_size(five_intervals()) == 3);
    CHECK(head_size(four_intervals()) == 2);
    CHECK(head_size(validate({3}, {5}, 6)) == 1);
    CHECK_THROWS_AS(head_size(validate({}, {}, 3)), error);
}

TEST_CASE("drop_head") {
    SequencePair d = drop_head(five_intervals());
    CHECK(d == validate({6, 7}, {8, 10}, 10));
    CHECK(drop_head(validate({2}, {4}, 5)).empty());
    CHECK(drop_head(four_intervals()) == validate({4, 6}, {7, 8}, 8));
}

TEST_CASE("collapse_head") {
    CHECK(collapse_head(five_intervals()) == validate({5, 6, 7}, {5, 8, 10}, 10));
    // equal case: starts[j] == ends[0] + 1 swallows interval j
    CHECK(collapse_head(four_intervals()) == validate({4, 6}, {5, 8}, 8));
    // head covers everything: single complementary interval remains
    CHECK(collapse_head(validate({1, 2}, {3, 5}, 5)) == validate({4}, {5}, 5));
    CHECK_THROWS_AS(collapse_head(validate({2}, {4}, 5)), error);
}

TEST_CASE("drop_first and prefix") {
    CHECK(drop_first(four_intervals()) == validate({2, 4, 6}, {5, 7, 8}, 8));
    CHECK(drop_first(validate({2}, {4}, 5)).empty());
    CHECK(drop_first(five_intervals()) == validate({2, 3, 6, 7}, {5, 7, 8, 10}, 10));

    CHECK(prefix(five_intervals(), 2) == validate({1, 2}, {4, 5}, 10));
    CHECK(prefix(five_intervals(), 5) == five_intervals());
    CHECK(prefix(four_intervals(), 3) == validate({1, 2, 4}, {3, 5, 7}, 8));
    CHECK_THROWS_AS(prefix(four_intervals(), 0), error);
    CHECK_THROWS_AS(prefix(four_intervals(), 5), error);
}

TEST_CASE("classify") {
    CHECK(classify(validate({1, 4, 7}, {2, 5, 8}, 8)).tag == ShapeTag::Spread);
    CHECK(classify(four_intervals()).tag == ShapeTag::Chained);
    Shape path = classify(validate({1, 2, 3}, {3, 4, 5}, 5));
    CHECK(path.tag == ShapeTag::Path);
    CHECK(path.path_width == 3);
    CHECK(classify(validate({}, {}, 3)).tag == ShapeTag::Empty);
    CHECK(classify(validate({2}, {4}, 5)).tag == ShapeTag::Principal);
    // mixed shape: neither condition holds
    Shape g = classify(validate({1, 2, 3, 9}, {4, 5, 6, 10}, 10));
    CHECK(g.tag == ShapeTag::Generic);
    CHECK(!g.witnesses.empty());
}

TEST_CASE("sliding-window pairs are detected for every width") {
    for (int n = 1; n <= 9; ++n) {
        for (int m = 1; m <= n; ++m) {
            std::vector<int> a, b;
            for (int i = 1; i + m - 1 <= n; ++i) {
                a.push_back(i);
                b.push_back(i + m - 1);
            }
            SequencePair sp = validate(a, b, n);
            Shape sh = classify(sp);
            if (sp.count() == 1) {
                CHECK(sh.tag == ShapeTag::Principal);
            } else {
                CHECK(sh.tag == ShapeTag::Path);
                CHECK(sh.path_width == m);
            }
        }
    }
}

TEST_CASE("derived pairs of valid pairs validate again") {
    enumerate_pairs(6, 3, [](const SequencePair& sp) {
        if (sp.count() < 2) return;
        SequencePair d = drop_head(sp);
        CHECK_NOTHROW(validate(d.starts, d.ends, d.nvars));
        SequencePair c = collapse_head(sp);
        CHECK_NOTHROW(validate(c.starts, c.ends, c.nvars));
        CHECK(c.count() >= 1);
        CHECK(c.count() < sp.count() + 1);
    });
}

TEST_CASE("the block recursion terminates: each step shrinks or advances") {
    enumerate_pairs(6, 3, [](const SequencePair& sp) {
        SequencePair cur = sp;
        int guard = 0;
        while (!cur.empty()) {
            SequencePair next = (head_size(cur) == 1 || cur.count() < 2) ? drop_head(cur) : collapse_head(cur);
            bool smaller = next.count() < cur.count();
            bool advanced = next.count() == cur.count() && !next.empty() && next.starts[0] > cur.starts[0];
            CHECK((smaller || advanced));
            cur = next;
            REQUIRE(++guard < 100);
        }
    });
}

TEST_CASE("pair text parses and round-trips") {
    SequencePair sp = parse_pair("n=10; a=1,2,3,6,7; b=4,5,7,8,10");
    CHECK(sp == five_intervals());
    CHECK(parse_pair(to_text(sp)) == sp);
    CHECK(parse_pair("  n = 8 ;a= 1 ,2, 4,6 ; b=3,5,7,8") == four_intervals());
    SequencePair empty = parse_pair("n=5; a=; b=");
    CHECK(empty.count() == 0);

    CHECK_THROWS_AS(parse_pair("a=1; b=2"), error);            // missing n
    CHECK_THROWS_AS(parse_pair("n=5; a=1; b=x"), error);       // bad integer
    CHECK_THROWS_AS(parse_pair("n=5; a=2,1; b=3,4"), error);   // fails validation
    try {
        parse_pair("n=5; q=1");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("shift_to_origin preserves gaps") {
    SequencePair sp = validate({3, 5}, {4, 8}, 9);
    SequencePair shifted = shift_to_origin(sp);
    CHECK(shifted == validate({1, 3}, {2, 6}, 9));
    CHECK(shift_to_origin(shifted) == shifted);
}

TEST_CASE("collapse_head with a singleton leading block matches drop_head") {
    // the complementary interval is redundant there, so the two agree
    for (const auto& text : {"n=6; a=1,3,5; b=2,4,6", "n=5; a=1,2; b=1,3", "n=7; a=2,4,6; b=3,6,7"}) {
        SequencePair sp = parse_pair(text);
        REQUIRE(head_size(sp) == 1);
        CHECK(collapse_head(sp) == drop_head(sp));
    }
}
