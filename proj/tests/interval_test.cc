#include <algorithm>
#include <iterator>

#include <catch_amalgamated.hpp>

#include "oracles.hh"
#include "symauto/error.hh"
#include "symauto/interval.hh"

using namespace symauto;
using oracle::denote;

namespace {

using Items = std::vector<Interval>;

Items items(const IntervalList& l) { return {l.items().begin(), l.items().end()}; }

std::vector<CodePoint> set_op(const std::vector<CodePoint>& a, const std::vector<CodePoint>& b, char op) {
    std::vector<CodePoint> out;
    auto o = std::back_inserter(out);
    if (op == '&') { std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), o); }
    if (op == '-') { std::set_difference(a.begin(), a.end(), b.begin(), b.end(), o); }
    if (op == '|') { std::set_union(a.begin(), a.end(), b.begin(), b.end(), o); }
    return out;
}

} // namespace

TEST_CASE("denotation of small lists") {
    CHECK(denote(IntervalList{{1, 5}}) == std::vector<CodePoint>{1, 2, 3, 4, 5});
    CHECK(denote(IntervalList{}).empty());
    CHECK(denote(IntervalList{{1, 2}, {5, 5}}) == std::vector<CodePoint>{1, 2, 5});
}

TEST_CASE("emptiness") {
    CHECK(IntervalList{}.empty());
    CHECK_FALSE(IntervalList{{3, 3}}.empty());
    CHECK_FALSE(IntervalList::full().empty());
    CHECK_FALSE(IntervalList{}.nonempty());
    CHECK(IntervalList{{3, 3}}.nonempty());
    CHECK(IntervalList{{1, 2}, {9, 9}}.nonempty());
}

TEST_CASE("intersection") {
    CHECK(intersect({{1, 5}}, {{3, 4}}) == IntervalList{{3, 4}});
    CHECK(intersect({{1, 2}}, {{4, 6}}).empty());
    CHECK(items(intersect({{0, 9}, {20, 30}}, {{5, 25}})) == Items{{5, 9}, {20, 25}});
}

TEST_CASE("difference") {
    CHECK(items(difference({{1, 5}}, {{3, 4}})) == Items{{1, 2}, {5, 5}});
    CHECK(difference({{1, 5}}, {}) == IntervalList{{1, 5}});
    CHECK(difference({{1, 5}}, {{0, 9}}).empty());
}

TEST_CASE("union coalesces overlap and adjacency") {
    CHECK(items(unite({{1, 3}}, {{2, 6}})) == Items{{1, 6}});
    CHECK(items(unite({{1, 2}}, {{3, 4}})) == Items{{1, 4}});
    CHECK(items(unite({}, {{7, 7}})) == Items{{7, 7}});
}

TEST_CASE("membership") {
    CHECK(contains(IntervalList{{97, 122}}, 97));
    CHECK_FALSE(contains(IntervalList{{97, 122}}, 64));
    CHECK(contains(IntervalList{{1, 2}, {5, 5}}, 5));
    CHECK_FALSE(contains(IntervalList{{1, 2}, {5, 5}}, 3));
    CHECK_FALSE(contains(IntervalList{}, 0));
    CHECK(contains(IntervalList{{1, 9}}, IntervalList{{2, 3}, {7, 7}}));
    CHECK_FALSE(contains(IntervalList{{1, 5}}, IntervalList{{4, 6}}));
}

TEST_CASE("shift") {
    CHECK(shift({{97, 122}}, -32) == IntervalList{{65, 90}});
    CHECK_THROWS_AS(shift({{0, 0}}, -1), RangeError);
    CHECK_THROWS_AS(shift({{kMaxCodePoint, kMaxCodePoint}}, 1), RangeError);
    CHECK(shift({}, 5).empty());
    CHECK_FALSE(shift_in_range({{0, 0}}, -1));
    CHECK(shift_in_range({{1, 1}}, -1));
}

TEST_CASE("normalization") {
    CHECK(items(IntervalList::normalize({{5, 9}, {1, 6}})) == Items{{1, 9}});
    CHECK(items(IntervalList::normalize({{1, 2}, {3, 4}})) == Items{{1, 4}});
    CHECK(IntervalList::normalize({}).empty());
    CHECK_THROWS_AS(IntervalList::normalize({{4, 3}}), ValidationError);
    CHECK_THROWS_AS(IntervalList::normalize({{0, kMaxCodePoint + 1}}), ValidationError);
}

TEST_CASE("full set") {
    CHECK(items(IntervalList::full()) == Items{{0, 0x10FFFF}});
    CHECK(contains(IntervalList::full(), 0));
    CHECK(difference(IntervalList::full(), IntervalList::full()).empty());
    CHECK(complement(IntervalList{}) == IntervalList::full());
    CHECK(items(complement(IntervalList{{0, 9}, {20, 20}})) == Items{{10, 19}, {21, kMaxCodePoint}});
}

TEST_CASE("cardinality, bounds and element listing") {
    IntervalList l{{1, 2}, {5, 5}};
    CHECK(l.cardinality() == 3);
    CHECK(l.min() == 1);
    CHECK(l.max() == 5);
    CHECK(elements(l, 3) == std::vector<CodePoint>{1, 2, 5});
    CHECK_THROWS_AS(elements(l, 2), ResourceError);
    CHECK(IntervalList::full().cardinality() == 0x110000);
}

TEST_CASE("canonical form predicate") {
    CHECK(is_canonical(Items{}));
    CHECK(is_canonical(Items{{1, 2}, {4, 5}}));
    CHECK_FALSE(is_canonical(Items{{1, 2}, {3, 5}}));
    CHECK_FALSE(is_canonical(Items{{4, 5}, {1, 2}}));
    CHECK_FALSE(is_canonical(Items{{3, 2}}));
}

TEST_CASE("textual rendering") {
    CHECK(to_string(IntervalList{{'a', 'c'}, {'f', 'f'}}) == "[a-c f-f]");
    CHECK(to_string(IntervalList{}) == "[]");
    CHECK(to_string(IntervalList{{0, 0x1F600}}) == "[\\u{0}-\\u{1f600}]");
    CHECK(to_string(IntervalList{{'-', '-'}}) == "[\\u{2d}-\\u{2d}]");
}

TEST_CASE("set laws against the naive model on random lists") {
    oracle::Rng rng(1);
    std::uniform_int_distribution<int> delta(-300, 300);
    for (int round = 0; round < 2000; ++round) {
        IntervalList a = oracle::random_list(rng, 1000, 6);
        IntervalList b = oracle::random_list(rng, 1000, 6);
        auto sa = denote(a), sb = denote(b);

        for (char op : {'&', '-', '|'}) {
            IntervalList r = op == '&' ? intersect(a, b) : op == '-' ? difference(a, b) : unite(a, b);
            REQUIRE(is_canonical(r.items()));
            REQUIRE(denote(r) == set_op(sa, sb, op));
            // Unique normal form: rebuilding from the denotation gives the same items.
            REQUIRE(items(r) == oracle::runs(denote(r)));
        }
        for (CodePoint c = 0; c <= 1001; c += 7) {
            REQUIRE(contains(a, c) == std::binary_search(sa.begin(), sa.end(), c));
        }
        int d = delta(rng);
        bool in_range = sa.empty() || static_cast<int>(sa.front()) + d >= 0;
        if (in_range) {
            IntervalList s = shift(a, d);
            std::vector<CodePoint> expected;
            for (CodePoint c : sa) { expected.push_back(static_cast<CodePoint>(static_cast<int>(c) + d)); }
            REQUIRE(denote(s) == expected);
            REQUIRE(is_canonical(s.items()));
        } else {
            REQUIRE_THROWS_AS(shift(a, d), RangeError);
        }
        REQUIRE(a.empty() == sa.empty());
    }
}

TEST_CASE("normalize agrees with the naive model on unsorted overlapping input") {
    oracle::Rng rng(2);
    std::uniform_int_distribution<CodePoint> point(0, 200);
    for (int round = 0; round < 500; ++round) {
        std::vector<Interval> raw;
        std::vector<CodePoint> all;
        for (int k = point(rng) % 6; k > 0; --k) {
            CodePoint lo = point(rng), hi = lo + point(rng) % 15;
            raw.push_back({lo, hi});
            for (CodePoint c = lo; c <= hi; ++c) { all.push_back(c); }
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        IntervalList n = IntervalList::normalize(raw);
        REQUIRE(items(n) == oracle::runs(all));
    }
}
