#pragma once

#include <cctype>
#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ivi/errors.hpp"

namespace ivi {

// A pair of strictly increasing position sequences describing interval
// generators x_{starts[i]} ... x_{ends[i]} inside a polynomial ring with
// nvars variables.  Positions are 1-based; starts[i] <= ends[i]; an empty
// pair (count() == 0) describes the zero ideal.
struct SequencePair {
    int nvars = 0;
    std::vector<int> starts;
    std::vector<int> ends;

    int count() const { return static_cast<int>(starts.size()); }
    bool empty() const { return starts.empty(); }

    bool operator==(const SequencePair&) const = default;
    auto operator<=>(const SequencePair&) const = default;
};

// Checks every structural constraint and returns the pair.
inline SequencePair validate(std::vector<int> starts, std::vector<int> ends, int nvars) {
    if (starts.size() != ends.size())
        fail(errc::length_mismatch, "start and end sequences have different lengths");
    if (nvars < 1)
        fail(errc::out_of_range, "number of variables must be at least 1");
    const int s = static_cast<int>(starts.size());
    for (int i = 0; i + 1 < s; ++i) {
        if (starts[i] >= starts[i + 1])
            fail(errc::non_increasing, "start positions must be strictly increasing at index " + std::to_string(i + 1));
        if (ends[i] >= ends[i + 1])
            fail(errc::non_increasing, "end positions must be strictly increasing at index " + std::to_string(i + 1));
    }
    for (int i = 0; i < s; ++i) {
        if (starts[i] > ends[i])
            fail(errc::interval_reversed, "interval " + std::to_string(i + 1) + " has start > end");
    }
    if (s > 0) {
        if (starts.front() < 1)
            fail(errc::out_of_range, "first start position is below 1");
        if (ends.back() > nvars)
            fail(errc::out_of_range, "last end position exceeds the number of variables");
    }
    return SequencePair{nvars, std::move(starts), std::move(ends)};
}

// Size of the leading block: the number of intervals whose start lies
// inside the first interval.  Always >= 1 for a nonempty pair.
inline int head_size(const SequencePair& sp) {
    if (sp.empty()) fail(errc::empty_pair, "head_size needs at least one interval");
    int j = 1;
    while (j < sp.count() && sp.starts[j] <= sp.ends[0]) ++j;
    return j;
}

// Removes the whole leading block (head_size intervals).
inline SequencePair drop_head(const SequencePair& sp) {
    const int j = head_size(sp);
    SequencePair out;
    out.nvars = sp.nvars;
    out.starts.assign(sp.starts.begin() + j, sp.starts.end());
    out.ends.assign(sp.ends.begin() + j, sp.ends.end());
    return out;
}

// Removes exactly the first interval.
inline SequencePair drop_first(const SequencePair& sp) {
    if (sp.empty()) fail(errc::empty_pair, "drop_first needs at least one interval");
    SequencePair out;
    out.nvars = sp.nvars;
    out.starts.assign(sp.starts.begin() + 1, sp.starts.end());
    out.ends.assign(sp.ends.begin() + 1, sp.ends.end());
    return out;
}

// Replaces the leading block by the single complementary interval
// [ends[0]+1, ends[1]] and keeps the tail.  With j = head_size:
//   - j == count: the result is just that single interval;
//   - starts[j] >  ends[0]+1: the tail keeps intervals j, j+1, ...;
//   - starts[j] == ends[0]+1: interval j is swallowed by the new one and the
//     tail starts at j+1.
// For j == 1 the new interval is redundant against interval 1 of the tail,
// so the result coincides with drop_head.
inline SequencePair collapse_head(const SequencePair& sp) {
    if (sp.count() < 2) fail(errc::undefined, "collapse_head needs at least two intervals");
    const int j = head_size(sp);
    if (j == 1) return drop_head(sp);
    SequencePair out;
    out.nvars = sp.nvars;
    out.starts.push_back(sp.ends[0] + 1);
    out.ends.push_back(sp.ends[1]);
    if (j < sp.count()) {
        const int from = (sp.starts[j] == sp.ends[0] + 1) ? j + 1 : j;
        out.starts.insert(out.starts.end(), sp.starts.begin() + from, sp.starts.end());
        out.ends.insert(out.ends.end(), sp.ends.begin() + from, sp.ends.end());
    }
    return out;
}

// Drops the first interval and clips the new leading interval's end back to
// ends[0]: the pair describing the ideal after adjoining the overlap
// monomial x_{starts[1]} ... x_{ends[0]}.  Needs head_size >= 2.
inline SequencePair adjoin_overlap(const SequencePair& sp) {
    if (sp.count() < 2 || head_size(sp) < 2)
        fail(errc::undefined, "adjoin_overlap needs a leading block of size at least 2");
    SequencePair out;
    out.nvars = sp.nvars;
    out.starts.assign(sp.starts.begin() + 1, sp.starts.end());
    out.ends.assign(sp.ends.begin() + 1, sp.ends.end());
    out.ends[0] = sp.ends[0];
    return out;
}

// First len intervals of the pair.
inline SequencePair prefix(const SequencePair& sp, int len) {
    if (len < 1 || len > sp.count())
        fail(errc::out_of_range, "prefix length must be between 1 and the interval count");
    SequencePair out;
    out.nvars = sp.nvars;
    out.starts.assign(sp.starts.begin(), sp.starts.begin() + len);
    out.ends.assign(sp.ends.begin(), sp.ends.begin() + len);
    return out;
}

// Shape predicates.  Index k (1-based, 1 <= k <= count-2) compares
// starts[k+1] against ends[k-1] + 1; both conditions are vacuous for
// count <= 2.  Violating k values are reported through `violations`.
inline bool spread_condition(const SequencePair& sp, std::vector<int>* violations = nullptr) {
    bool ok = true;
    for (int k = 1; k + 1 < sp.count(); ++k) {
        if (!(sp.starts[k + 1] > sp.ends[k - 1] + 1)) {
            ok = false;
            if (violations) violations->push_back(k);
        }
    }
    return ok;
}

inline bool chained_condition(const SequencePair& sp, std::vector<int>* violations = nullptr) {
    bool ok = true;
    for (int k = 1; k + 1 < sp.count(); ++k) {
        if (sp.starts[k + 1] != sp.ends[k - 1] + 1) {
            ok = false;
            if (violations) violations->push_back(k);
        }
    }
    return ok;
}

// Window width m when the pair is the full sliding-window family
// (starts = 1,2,...,count and ends = m, m+1, ..., nvars).
inline std::optional<int> sliding_window_width(const SequencePair& sp) {
    const int s = sp.count();
    if (s == 0) return std::nullopt;
    const int m = sp.ends[0] - sp.starts[0] + 1;
    if (sp.starts[0] != 1) return std::nullopt;
    if (s != sp.nvars - m + 1) return std::nullopt;
    for (int i = 0; i < s; ++i) {
        if (sp.starts[i] != i + 1 || sp.ends[i] != i + m) return std::nullopt;
    }
    return m;
}

enum class ShapeTag { Empty, Principal, Spread, Chained, Path, Generic };

inline const char* shape_name(ShapeTag t) {
    switch (t) {
        case ShapeTag::Empty: return "Empty";
        case ShapeTag::Principal: return "Principal";
        case ShapeTag::Spread: return "Spread";
        case ShapeTag::Chained: return "Chained";
        case ShapeTag::Path: return "Path";
        case ShapeTag::Generic: return "Generic";
    }
    return "Unknown";
}

struct Shape {
    ShapeTag tag = ShapeTag::Generic;
    int path_width = 0;          // window width m when tag == Path
    std::vector<int> witnesses;  // spread-condition violations when tag == Generic
};

// Most specific applicable tag.  Ties for count == 2 (where both the spread
// and the chained condition hold vacuously) resolve to Spread.
inline Shape classify(const SequencePair& sp) {
    Shape shape;
    if (sp.count() == 0) {
        shape.tag = ShapeTag::Empty;
        return shape;
    }
    if (sp.count() == 1) {
        shape.tag = ShapeTag::Principal;
        return shape;
    }
    if (auto m = sliding_window_width(sp)) {
        shape.tag = ShapeTag::Path;
        shape.path_width = *m;
        return shape;
    }
    if (spread_condition(sp)) {
        shape.tag = ShapeTag::Spread;
        return shape;
    }
    if (chained_condition(sp)) {
        shape.tag = ShapeTag::Chained;
        return shape;
    }
    shape.tag = ShapeTag::Generic;
    spread_condition(sp, &shape.witnesses);
    return shape;
}

inline std::string shape_str(const Shape& sh) {
    if (sh.tag == ShapeTag::Path) return "Path(" + std::to_string(sh.path_width) + ")";
    return shape_name(sh.tag);
}

// Translation normalization used as a memo key: shifts both sequences so
// the first start becomes 1 while keeping nvars.
inline SequencePair shift_to_origin(const SequencePair& sp) {
    if (sp.empty() || sp.starts[0] == 1) return sp;
    const int delta = sp.starts[0] - 1;
    SequencePair out = sp;
    for (auto& v : out.starts) v -= delta;
    for (auto& v : out.ends) v -= delta;
    return out;
}

// --- textual pair syntax -------------------------------------------------
//
// "n=10; a=1,2,3,6,7; b=4,5,7,8,10" -- whitespace-insensitive, 1-based,
// empty lists allowed ("a=; b=;").

namespace detail {

inline void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

inline int parse_int_at(std::string_view text, std::size_t& pos) {
    skip_ws(text, pos);
    std::size_t begin = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin || (pos == begin + 1 && !std::isdigit(static_cast<unsigned char>(text[begin]))))
        fail(errc::parse_error, "expected an integer at position " + std::to_string(begin));
    return std::stoi(std::string(text.substr(begin, pos - begin)));
}

inline std::vector<int> parse_int_list(std::string_view text, std::size_t& pos, std::size_t end) {
    std::vector<int> out;
    skip_ws(text, pos);
    if (pos >= end) return out;
    while (true) {
        out.push_back(parse_int_at(text, pos));
        skip_ws(text, pos);
        if (pos >= end) break;
        if (text[pos] != ',')
            fail(errc::parse_error, "expected ',' at position " + std::to_string(pos));
        ++pos;
    }
    return out;
}

} // namespace detail

inline SequencePair parse_pair(std::string_view text) {
    std::optional<int> nvars;
    std::optional<std::vector<int>> starts, ends;
    std::size_t pos = 0;
    while (true) {
        detail::skip_ws(text, pos);
        if (pos >= text.size()) break;
        const std::size_t key_pos = pos;
        const char key = text[pos];
        if (key != 'n' && key != 'a' && key != 'b')
            fail(errc::parse_error, "expected 'n', 'a' or 'b' at position " + std::to_string(pos));
        ++pos;
        detail::skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != '=')
            fail(errc::parse_error, "expected '=' at position " + std::to_string(pos));
        ++pos;
        std::size_t field_end = text.find(';', pos);
        if (field_end == std::string_view::npos) field_end = text.size();
        if (key == 'n') {
            if (nvars) fail(errc::parse_error, "duplicate 'n' at position " + std::to_string(key_pos));
            nvars = detail::parse_int_at(text, pos);
            detail::skip_ws(text, pos);
            if (pos < field_end)
                fail(errc::parse_error, "unexpected text at position " + std::to_string(pos));
        } else {
            auto& slot = (key == 'a') ? starts : ends;
            if (slot) fail(errc::parse_error, std::string("duplicate '") + key + "' at position " + std::to_string(key_pos));
            slot = detail::parse_int_list(text, pos, field_end);
        }
        pos = field_end;
        if (pos < text.size()) ++pos; // skip ';'
    }
    if (!nvars) fail(errc::parse_error, "missing 'n' field");
    if (!starts) fail(errc::parse_error, "missing 'a' field");
    if (!ends) fail(errc::parse_error, "missing 'b' field");
    return validate(std::move(*starts), std::move(*ends), *nvars);
}

inline std::string to_text(const SequencePair& sp) {
    std::ostringstream os;
    os << "n=" << sp.nvars << "; a=";
    for (int i = 0; i < sp.count(); ++i) os << (i ? "," : "") << sp.starts[i];
    os << "; b=";
    for (int i = 0; i < sp.count(); ++i) os << (i ? "," : "") << sp.ends[i];
    return os.str();
}

} // namespace ivi
