#include "symauto/interval.hh"

#include <algorithm>
#include <cstdio>

#include "symauto/error.hh"

namespace symauto {

namespace {

void check_bounds(const Interval& iv) {
    if (iv.lo > iv.hi) {
        throw ValidationError("malformed interval: lo " + std::to_string(iv.lo) + " > hi " +
                              std::to_string(iv.hi));
    }
    if (iv.hi > kMaxCodePoint) {
        throw ValidationError("interval bound " + std::to_string(iv.hi) +
                              " exceeds the code point range");
    }
}

} // namespace

IntervalList::IntervalList(std::initializer_list<Interval> raw)
    : IntervalList(normalize(std::vector<Interval>(raw))) {}

IntervalList IntervalList::normalize(std::vector<Interval> raw) {
    for (const Interval& iv : raw) { check_bounds(iv); }
    std::sort(raw.begin(), raw.end());
    IntervalList out;
    for (const Interval& iv : raw) {
        if (!out.items_.empty() && iv.lo <= out.items_.back().hi + 1) {
            out.items_.back().hi = std::max(out.items_.back().hi, iv.hi);
        } else {
            out.items_.push_back(iv);
        }
    }
    return out;
}

IntervalList IntervalList::from_canonical(std::vector<Interval> items) {
    for (const Interval& iv : items) { check_bounds(iv); }
    if (!is_canonical(items)) { throw ValidationError("interval list is not canonical"); }
    IntervalList out;
    out.items_ = std::move(items);
    return out;
}

IntervalList IntervalList::full() { return range(0, kMaxCodePoint); }

IntervalList IntervalList::single(CodePoint c) { return range(c, c); }

IntervalList IntervalList::range(CodePoint lo, CodePoint hi) {
    Interval iv{lo, hi};
    check_bounds(iv);
    IntervalList out;
    out.items_.push_back(iv);
    return out;
}

std::uint64_t IntervalList::cardinality() const {
    std::uint64_t n = 0;
    for (const Interval& iv : items_) { n += std::uint64_t{iv.hi} - iv.lo + 1; }
    return n;
}

bool is_canonical(std::span<const Interval> items) {
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (items[k].lo > items[k].hi || items[k].hi > kMaxCodePoint) { return false; }
        if (k > 0 && std::uint64_t{items[k - 1].hi} + 1 >= items[k].lo) { return false; }
    }
    return true;
}

bool contains(const IntervalList& set, CodePoint c) {
    auto items = set.items();
    // First interval whose hi is >= c.
    auto it = std::lower_bound(items.begin(), items.end(), c,
                               [](const Interval& iv, CodePoint x) { return iv.hi < x; });
    return it != items.end() && it->lo <= c;
}

bool contains(const IntervalList& set, const IntervalList& subset) {
    return difference(subset, set).empty();
}

IntervalList intersect(const IntervalList& a, const IntervalList& b) {
    auto x = a.items();
    auto y = b.items();
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        CodePoint lo = std::max(x[i].lo, y[j].lo);
        CodePoint hi = std::min(x[i].hi, y[j].hi);
        if (lo <= hi) { out.push_back({lo, hi}); }
        if (x[i].hi < y[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return IntervalList::from_canonical(std::move(out));
}

IntervalList difference(const IntervalList& a, const IntervalList& b) {
    auto x = a.items();
    auto y = b.items();
    std::vector<Interval> out;
    std::size_t j = 0;
    for (const Interval& iv : x) {
        CodePoint lo = iv.lo;
        bool exhausted = false;
        while (j < y.size() && y[j].hi < lo) { ++j; }
        std::size_t k = j;
        while (k < y.size() && y[k].lo <= iv.hi) {
            if (y[k].lo > lo) { out.push_back({lo, y[k].lo - 1}); }
            if (y[k].hi >= iv.hi) {
                exhausted = true;
                break;
            }
            lo = y[k].hi + 1;
            ++k;
        }
        if (!exhausted) { out.push_back({lo, iv.hi}); }
        j = k;
    }
    return IntervalList::from_canonical(std::move(out));
}

IntervalList unite(const IntervalList& a, const IntervalList& b) {
    auto x = a.items();
    auto y = b.items();
    std::vector<Interval> out;
    out.reserve(x.size() + y.size());
    auto push = [&out](const Interval& iv) {
        if (!out.empty() && iv.lo <= out.back().hi + 1) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    };
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].lo <= y[j].lo)) {
            push(x[i++]);
        } else {
            push(y[j++]);
        }
    }
    return IntervalList::from_canonical(std::move(out));
}

IntervalList complement(const IntervalList& a) { return difference(IntervalList::full(), a); }

bool shift_in_range(const IntervalList& a, std::int64_t delta) {
    if (a.empty()) { return true; }
    std::int64_t lo = std::int64_t{a.min()} + delta;
    std::int64_t hi = std::int64_t{a.max()} + delta;
    return lo >= 0 && hi <= std::int64_t{kMaxCodePoint};
}

IntervalList shift(const IntervalList& a, std::int64_t delta) {
    if (!shift_in_range(a, delta)) {
        throw RangeError("shifting " + to_string(a) + " by " + std::to_string(delta) +
                         " leaves the code point range");
    }
    std::vector<Interval> out;
    out.reserve(a.items().size());
    for (const Interval& iv : a.items()) {
        out.push_back({static_cast<CodePoint>(iv.lo + delta), static_cast<CodePoint>(iv.hi + delta)});
    }
    return IntervalList::from_canonical(std::move(out));
}

std::vector<CodePoint> elements(const IntervalList& a, std::uint64_t max_elements) {
    if (a.cardinality() > max_elements) {
        throw ResourceError("label " + to_string(a) + " has " + std::to_string(a.cardinality()) +
                            " elements, enumeration limit is " + std::to_string(max_elements));
    }
    std::vector<CodePoint> out;
    out.reserve(a.cardinality());
    for (const Interval& iv : a.items()) {
        for (std::uint64_t c = iv.lo; c <= iv.hi; ++c) { out.push_back(static_cast<CodePoint>(c)); }
    }
    return out;
}

std::string code_point_to_string(CodePoint c) {
    bool special = c == '-' || c == '[' || c == ']' || c == '\\';
    if (c > 0x20 && c < 0x7F && !special) { return std::string(1, static_cast<char>(c)); }
    char buf[16];
    std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(c));
    return buf;
}

std::string to_string(const IntervalList& a) {
    std::string out = "[";
    bool first = true;
    for (const Interval& iv : a.items()) {
        if (!first) { out += ' '; }
        first = false;
        out += code_point_to_string(iv.lo);
        out += '-';
        out += code_point_to_string(iv.hi);
    }
    out += ']';
    return out;
}

} // namespace symauto
