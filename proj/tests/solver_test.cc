#include <sstream>

#include <catch_amalgamated.hpp>

#include "oracles.hh"
#include "symauto/error.hh"
#include "symauto/regex.hh"
#include "symauto/smtlib.hh"
#include "symauto/solver.hh"

using namespace symauto;
using namespace symauto::constraint;
using oracle::w;

namespace {

RegexPtr digits_re() { return re::plus(re::range('0', '9')); }

std::vector<StrConstraint> example() {
    return {VarEqConst{"a", w("2024,2025")}, VarEqConst{"b", w("2024,NUM")},
            VarEqReplaceRe{"b", "a", digits_re(), w("NUM")}};
}

} // namespace

TEST_CASE("dependency graph of the replacement example") {
    std::vector<StrVar> decls{"a", "b"};
    auto cs = example();
    DependencyGraph g = build_dependency_graph(decls, cs);
    CHECK(g.successors["a"] == std::multiset<StrVar>{"b"});
    CHECK(g.successors["b"].empty());
    CHECK(g.definitions["b"] == 2);
    CHECK(g.definitions["a"] == 1);
    CHECK(has_tree_property(g));
    CHECK(topological_order(g) == std::vector<StrVar>{"a", "b"});
}

TEST_CASE("dependency graph shapes") {
    std::vector<StrVar> decls{"x", "y", "z"};
    std::vector<StrConstraint> one{VarEqConst{"x", w("a")}};
    DependencyGraph g1 = build_dependency_graph(decls, one);
    for (const auto& v : decls) { CHECK(g1.successors[v].empty()); }

    std::vector<StrConstraint> shared{VarEqConcat{"z", "x", "x"}};
    CHECK_FALSE(has_tree_property(build_dependency_graph(decls, shared)));
    std::vector<StrConstraint> two_uses{VarEqVar{"y", "x"}, VarEqVar{"z", "x"}};
    CHECK_FALSE(has_tree_property(build_dependency_graph(decls, two_uses)));

    std::vector<StrConstraint> cyclic{VarEqConcat{"x", "y", "z"}, VarEqConcat{"y", "x", "z"}};
    DependencyGraph gc = build_dependency_graph(decls, cyclic);
    CHECK_FALSE(topological_order(gc).has_value());
    CHECK_FALSE(has_tree_property(gc));

    std::vector<StrConstraint> undeclared{VarEqVar{"x", "q"}};
    CHECK_THROWS_AS(build_dependency_graph(decls, undeclared), ValidationError);
    CHECK(source_vars(StrConstraint{VarEqConcat{"z", "x", "x"}}) == std::vector<StrVar>{"x", "x"});
    CHECK(defined_var(StrConstraint{VarInRe{"y", digits_re()}}) == "y");
}

TEST_CASE("forward propagation verdicts") {
    SECTION("replacement example is sat") {
        std::vector<StrVar> decls{"a", "b"};
        auto cs = example();
        Propagation p = forward_propagate(decls, cs);
        CHECK(p.result == SolveResult::Sat);
        CHECK(accepts(p.domains.at("b"), w("2024,NUM")));
        CHECK_FALSE(accepts(p.domains.at("b"), w("NUM,2025")));
    }
    SECTION("no-match replacement is unsat") {
        std::vector<StrVar> decls{"a", "b"};
        std::vector<StrConstraint> cs{VarEqConst{"a", w("abc")}, VarEqConst{"b", w("x")},
                                      VarEqReplace{"b", "a", w("d"), w("y")}};
        CHECK(forward_propagate(decls, cs).result == SolveResult::Unsat);
    }
    SECTION("no constraints is sat with universal domains") {
        std::vector<StrVar> decls{"a", "b"};
        Propagation p = forward_propagate(decls, {});
        CHECK(p.result == SolveResult::Sat);
        CHECK(accepts(p.domains.at("a"), w("anything")));
        CHECK(p.domains.size() == 2);
    }
    SECTION("membership conflict is unsat") {
        std::vector<StrVar> decls{"b"};
        std::vector<StrConstraint> cs{VarInRe{"b", re::plus(re::range('a', 'z'))}, VarEqConst{"b", w("A")}};
        CHECK(forward_propagate(decls, cs).result == SolveResult::Unsat);
    }
    SECTION("cycle is inconclusive") {
        std::vector<StrVar> decls{"x", "y", "z"};
        std::vector<StrConstraint> cs{VarEqConcat{"x", "y", "z"}, VarEqConcat{"y", "x", "z"}};
        Propagation p = forward_propagate(decls, cs);
        CHECK(p.result == SolveResult::Inconclusive);
        CHECK_FALSE(p.reason.empty());
    }
    SECTION("shared source is inconclusive even when satisfiable") {
        std::vector<StrVar> decls{"x", "y"};
        std::vector<StrConstraint> cs{VarEqConcat{"y", "x", "x"}, VarEqConst{"y", w("abab")}};
        CHECK(forward_propagate(decls, cs).result == SolveResult::Inconclusive);
    }
    SECTION("shared source can still be unsat") {
        std::vector<StrVar> decls{"x", "y"};
        std::vector<StrConstraint> cs{VarEqConst{"x", w("a")}, VarEqConcat{"y", "x", "x"}, VarEqConst{"y", w("ab")}};
        CHECK(forward_propagate(decls, cs).result == SolveResult::Unsat);
    }
    SECTION("state ceiling maps to inconclusive") {
        std::vector<StrVar> decls{"a", "b"};
        auto cs = example();
        SolverConfig config;
        config.limits.max_states = 3;
        Propagation p = forward_propagate(decls, cs, config);
        CHECK(p.result == SolveResult::Inconclusive);
        CHECK(p.reason.find("resource") != std::string::npos);
    }
    SECTION("epsilon-accepting pattern maps to inconclusive") {
        std::vector<StrVar> decls{"a", "b"};
        std::vector<StrConstraint> cs{VarEqReplaceRe{"b", "a", re::star(re::literal(w("a"))), w("x")}};
        CHECK(forward_propagate(decls, cs).result == SolveResult::Inconclusive);
    }
}

TEST_CASE("domains only shrink as definitions accumulate") {
    std::vector<StrVar> decls{"x", "y"};
    std::vector<StrConstraint> cs{VarInRe{"y", re::star(re::range('a', 'c'))}, VarInRe{"y", re::plus(re::literal(w("ab")))},
                                  VarEqConcat{"y", "x", "x"}};
    std::set<Word> previous;
    bool first = true;
    const auto words = oracle::all_words({'a', 'b', 'c'}, 4);
    for (std::size_t k = 1; k <= cs.size(); ++k) {
        std::vector<StrConstraint> prefix(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k));
        Propagation p = forward_propagate(decls, prefix);
        std::set<Word> now;
        for (const Word& x : words) {
            if (accepts(p.domains.at("y"), x)) { now.insert(x); }
        }
        if (!first) {
            for (const Word& x : now) { REQUIRE(previous.contains(x)); }
        }
        previous = now;
        first = false;
    }
    CHECK(previous == std::set<Word>{w("ab"), w("abab")});
}

TEST_CASE("diagnostics") {
    std::vector<StrVar> decls{"a", "b"};
    auto cs = example();
    std::ostringstream diag;
    SolverConfig config;
    config.verbosity = 1;
    config.diagnostics = &diag;
    forward_propagate(decls, cs, config);
    CHECK(diag.str().find("[propagate] b <-") != std::string::npos);
    CHECK(diag.str().find("states") != std::string::npos);

    std::ostringstream quiet;
    config.verbosity = 0;
    config.diagnostics = &quiet;
    forward_propagate(decls, cs, config);
    CHECK(quiet.str().empty());
}

TEST_CASE("verdict names") {
    CHECK(to_string(SolveResult::Sat) == "sat");
    CHECK(to_string(SolveResult::Unsat) == "unsat");
    CHECK(to_string(SolveResult::Inconclusive) == "unknown");
}

TEST_CASE("concrete evaluator") {
    std::map<std::string, Word> m{{"a", w("2024,2025")}, {"b", w("2024,NUM")}};
    for (const StrConstraint& c : example()) { CHECK(oracle::holds(c, m)); }
    m["b"] = w("2024,2025");
    CHECK_FALSE(oracle::holds(StrConstraint{VarEqReplaceRe{"b", "a", digits_re(), w("NUM")}}, m));
    CHECK(oracle::has_bounded_model({"x", "y"}, {VarEqConcat{"y", "x", "x"}, VarEqConst{"y", w("abab")}}, {'a', 'b'}, 4));
    CHECK_FALSE(oracle::has_bounded_model({"x", "y"}, {VarEqConcat{"y", "x", "x"}, VarEqConst{"y", w("aba")}}, {'a', 'b'}, 4));
}

TEST_CASE("unsat verdicts are confirmed and sat verdicts have witnesses") {
    oracle::Rng rng(41);
    int sat = 0, unsat = 0;
    for (int round = 0; round < 60; ++round) {
        std::string text = oracle::random_script(rng);
        INFO(text);
        smtlib::Script s = smtlib::parse_script(text);
        Propagation p = forward_propagate(s.decls, s.asserts);
        if (p.result == SolveResult::Unsat) {
            ++unsat;
            REQUIRE_FALSE(oracle::has_bounded_model(s.decls, s.asserts, oracle::letters('a', 'd'), 4));
        } else if (p.result == SolveResult::Sat) {
            ++sat;
            auto m = oracle::extract_witness(s.decls, s.asserts, p.domains);
            REQUIRE(m.has_value());
            for (const StrConstraint& c : s.asserts) { REQUIRE(oracle::holds(c, *m)); }
        }
    }
    CHECK(sat > 0);
    CHECK(unsat > 0);
}
