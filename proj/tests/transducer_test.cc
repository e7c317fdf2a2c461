#include <algorithm>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "fixtures.hh"
#include "oracles.hh"
#include "symauto/dot.hh"
#include "symauto/error.hh"
#include "symauto/transducer.hh"

using namespace symauto;
using oracle::w;

TEST_CASE("pointwise output functions") {
    CHECK_FALSE(evaluate(out::Erase{}, CodePoint{53}).has_value());
    CHECK(evaluate(out::Const(IntervalList{{78, 78}}), std::nullopt) == IntervalList{{78, 78}});
    CHECK(evaluate(out::Const(IntervalList{{78, 78}}), CodePoint{5}) == IntervalList{{78, 78}});
    CHECK(evaluate(out::Offset{-32}, CodePoint{98}) == IntervalList{{66, 66}});
    CHECK(evaluate(out::Identity{}, CodePoint{7}) == IntervalList{{7, 7}});
    CHECK_FALSE(evaluate(out::Identity{}, std::nullopt).has_value());
    CHECK_FALSE(evaluate(out::Offset{3}, std::nullopt).has_value());
    CHECK_THROWS_AS(evaluate(out::Offset{-1}, CodePoint{0}), RangeError);
    CHECK_THROWS_AS(out::Const(IntervalList{}), ValidationError);
}

TEST_CASE("set lift") {
    CHECK(lift(out::Identity{}, {{48, 57}}) == IntervalList{{48, 57}});
    CHECK_FALSE(lift(out::Erase{}, {{48, 57}}).has_value());
    CHECK(lift(out::Offset{-32}, {{97, 122}}) == IntervalList{{65, 90}});
    CHECK(lift(out::Const(IntervalList{{1, 1}}), {{48, 57}}) == IntervalList{{1, 1}});
    CHECK_THROWS_AS(lift(out::Offset{-100}, {{97, 122}}), RangeError);
    CHECK_THROWS_AS(lift(out::Identity{}, IntervalList{}), ValidationError);
}

TEST_CASE("erasure check") {
    CHECK(may_erase(out::Erase{}, {{48, 57}}));
    CHECK_FALSE(may_erase(out::Identity{}, {{48, 57}}));
    CHECK_FALSE(may_erase(out::Const(IntervalList{{78, 78}}), {{0, 5}}));
    CHECK_FALSE(may_erase(out::Offset{1}, {{0, 5}}));
}

TEST_CASE("set lift agrees with pointwise evaluation") {
    oracle::Rng rng(21);
    for (int round = 0; round < 500; ++round) {
        IntervalList a = oracle::random_label(rng, 40);
        std::vector<OutputFn> fns{out::Erase{}, out::Identity{},
                                  out::Offset{static_cast<std::int32_t>(rng() % 10) - static_cast<std::int32_t>(a.min() % 10)},
                                  out::Const(oracle::random_label(rng, 40))};
        for (const OutputFn& f : fns) {
            std::vector<CodePoint> pointwise;
            bool some_absent = false;
            for (CodePoint x : oracle::denote(a)) {
                auto r = evaluate(f, x);
                if (!r) {
                    some_absent = true;
                    continue;
                }
                for (CodePoint y : oracle::denote(*r)) { pointwise.push_back(y); }
            }
            std::sort(pointwise.begin(), pointwise.end());
            pointwise.erase(std::unique(pointwise.begin(), pointwise.end()), pointwise.end());
            auto lifted = lift(f, a);
            REQUIRE(lifted.has_value() == !pointwise.empty());
            if (lifted) { REQUIRE(oracle::denote(*lifted) == pointwise); }
            REQUIRE(may_erase(f, a) == some_absent);
        }
    }
}

TEST_CASE("trace projections") {
    CHECK(input_word({{CodePoint{97}, CodePoint{65}}}) == Word{97});
    CHECK(input_word({{std::nullopt, CodePoint{78}}}).empty());
    CHECK(input_word({}).empty());
    CHECK(output_word({{CodePoint{97}, std::nullopt}}).empty());
    CHECK(output_word({{std::nullopt, CodePoint{78}}, {std::nullopt, CodePoint{85}}}) == Word{78, 85});
    CHECK(output_word({}).empty());

    Trace t{{CodePoint{1}, std::nullopt}, {std::nullopt, CodePoint{2}}, {std::nullopt, std::nullopt}, {CodePoint{3}, CodePoint{4}}};
    std::size_t absent = 0;
    for (const TraceStep& s : t) { absent += s.input ? 0 : 1; }
    CHECK(input_word(t).size() + absent == t.size());
}

TEST_CASE("bounded output language") {
    CHECK(output_language_bounded(fixture::case_swap(), literal(w("bigSMALL")), 10) == std::set<Word>{w("BIGsmall")});

    Sft no_accept(1);
    no_accept.add_function(out::Identity{});
    no_accept.add_transition(0, IntervalList{{'a', 'z'}}, 0, 0);
    no_accept.set_initial(0);
    CHECK(output_language_bounded(no_accept, literal(w("ab")), 10).empty());

    CHECK(output_language_bounded(fixture::digits_to_num(), literal(w("7x")), 8) == std::set<Word>{w("NUMx")});

    Sft wide(1);
    wide.add_function(out::Identity{});
    wide.add_transition(0, IntervalList::full(), 0, 0);
    wide.set_initial(0);
    wide.set_accepting(0);
    CHECK_THROWS_AS(output_language_bounded(wide, universal(), 2), ResourceError);
}

TEST_CASE("well-formedness") {
    CHECK(is_well_formed(fixture::case_swap()));
    CHECK(is_well_formed(fixture::digits_to_num()));

    Sft dangling(1);
    dangling.add_transition(0, IntervalList{{1, 1}}, 3, 0);
    CHECK_FALSE(is_well_formed(dangling));

    Sft underflow(1);
    underflow.add_transition(0, IntervalList{{0, 10}}, underflow.add_function(out::Offset{-5}), 0);
    CHECK_FALSE(is_well_formed(underflow));

    Sft bad_state(1);
    bad_state.set_initial(4);
    CHECK_FALSE(is_well_formed(bad_state));

    Sft empty_label(1);
    empty_label.add_transition(0, IntervalList{}, empty_label.add_function(out::Erase{}), 0);
    CHECK_FALSE(is_well_formed(empty_label));
    CHECK_THROWS_AS(output_language_bounded(underflow, universal(), 1), ValidationError);
}

TEST_CASE("function rendering and dot output") {
    CHECK(to_string(OutputFn{out::Erase{}}) == "erase");
    CHECK(to_string(OutputFn{out::Identity{}}) == "id");
    CHECK(to_string(OutputFn{out::Offset{-32}}) == "-32");
    CHECK(to_string(OutputFn{out::Offset{32}}) == "+32");
    CHECK(to_string(OutputFn{out::Const(IntervalList{{'N', 'N'}})}) == "const{[N-N]}");

    std::ostringstream os;
    write_dot(os, fixture::digits_to_num(), "replace");
    std::string s = os.str();
    CHECK(s.find("eps / erase") != std::string::npos);
    CHECK(s.find("/ id") != std::string::npos);
    CHECK(s.find("const{[N-N]}") != std::string::npos);
}
