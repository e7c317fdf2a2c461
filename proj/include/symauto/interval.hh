#ifndef SYMAUTO_INTERVAL_HH
#define SYMAUTO_INTERVAL_HH

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace symauto {

/// A Unicode code point. Valid values are [0, kMaxCodePoint].
using CodePoint = char32_t;
/// A word over code points.
using Word = std::u32string;

inline constexpr CodePoint kMaxCodePoint = 0x10FFFF;

/// Closed interval [lo, hi] of code points.
struct Interval {
    CodePoint lo;
    CodePoint hi;

    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

/**
 * Set of code points as a canonical interval list.
 *
 * Canonical form: every item has lo <= hi, and consecutive items satisfy
 * items[k].hi + 1 < items[k + 1].lo, so overlapping and adjacent intervals are
 * always merged. The normal form is unique, so operator== decides set
 * equality. The empty list is the empty set.
 *
 * Values are immutable once built; every operation returns a new list.
 */
class IntervalList {
public:
    IntervalList() = default;
    IntervalList(std::initializer_list<Interval> raw);

    /// Sorts and merges arbitrary intervals. Throws ValidationError on lo > hi
    /// or on a bound above kMaxCodePoint.
    static IntervalList normalize(std::vector<Interval> raw);
    /// Wraps a list that is already canonical. Throws ValidationError otherwise.
    static IntervalList from_canonical(std::vector<Interval> items);
    static IntervalList full();
    static IntervalList single(CodePoint c);
    static IntervalList range(CodePoint lo, CodePoint hi);

    std::span<const Interval> items() const { return items_; }
    bool empty() const { return items_.empty(); }
    bool nonempty() const { return !items_.empty(); }
    /// Number of code points denoted.
    std::uint64_t cardinality() const;
    CodePoint min() const { return items_.front().lo; }
    CodePoint max() const { return items_.back().hi; }

    friend bool operator==(const IntervalList&, const IntervalList&) = default;
    friend auto operator<=>(const IntervalList& a, const IntervalList& b) {
        return a.items_ <=> b.items_;
    }

private:
    std::vector<Interval> items_;
};

/// True iff `items` satisfies the canonical-form invariant.
bool is_canonical(std::span<const Interval> items);

/// Membership by binary search.
bool contains(const IntervalList& set, CodePoint c);
bool contains(const IntervalList& set, const IntervalList& subset);

IntervalList intersect(const IntervalList& a, const IntervalList& b);
IntervalList difference(const IntervalList& a, const IntervalList& b);
IntervalList unite(const IntervalList& a, const IntervalList& b);
IntervalList complement(const IntervalList& a);

/// Pointwise shift by `delta`. Throws RangeError if any element leaves the
/// code point range.
IntervalList shift(const IntervalList& a, std::int64_t delta);
/// True iff shift(a, delta) would succeed.
bool shift_in_range(const IntervalList& a, std::int64_t delta);

/// Materializes the denoted set in increasing order. Throws ResourceError when
/// the cardinality exceeds `max_elements`.
std::vector<CodePoint> elements(const IntervalList& a, std::uint64_t max_elements);

/// `[a-c f-f]` rendering; printable ASCII as characters, the rest as `\u{hex}`.
std::string to_string(const IntervalList& a);
/// Renders a single code point the same way `to_string` renders bounds.
std::string code_point_to_string(CodePoint c);

} // namespace symauto

#endif
