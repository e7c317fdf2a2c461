#include "symauto/solver.hh"

#include <fstream>
#include <iostream>

#include "symauto/dot.hh"
#include "symauto/error.hh"
#include "symauto/replace.hh"

namespace symauto {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

const char* kind_name(const StrConstraint& c) {
    return std::visit(overloaded{
                          [](const constraint::VarEqConst&) { return "const"; },
                          [](const constraint::VarEqVar&) { return "copy"; },
                          [](const constraint::VarEqConcat&) { return "str.++"; },
                          [](const constraint::VarEqReplace&) { return "str.replace"; },
                          [](const constraint::VarEqReplaceRe&) { return "str.replace_re"; },
                          [](const constraint::VarInRe&) { return "str.in_re"; },
                      },
                      c);
}

std::string file_stem(const StrVar& v) {
    std::string out;
    for (char c : v) {
        bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '-' || c == '.';
        out += keep ? c : '_';
    }
    return out.empty() ? "_" : out;
}

} // namespace

const StrVar& defined_var(const StrConstraint& c) {
    return std::visit(overloaded{
                          [](const constraint::VarInRe& x) -> const StrVar& { return x.var; },
                          [](const auto& x) -> const StrVar& { return x.lhs; },
                      },
                      c);
}

std::vector<StrVar> source_vars(const StrConstraint& c) {
    return std::visit(overloaded{
                          [](const constraint::VarEqConst&) { return std::vector<StrVar>{}; },
                          [](const constraint::VarEqVar& x) { return std::vector<StrVar>{x.rhs}; },
                          [](const constraint::VarEqConcat& x) { return std::vector<StrVar>{x.left, x.right}; },
                          [](const constraint::VarEqReplace& x) { return std::vector<StrVar>{x.src}; },
                          [](const constraint::VarEqReplaceRe& x) { return std::vector<StrVar>{x.src}; },
                          [](const constraint::VarInRe&) { return std::vector<StrVar>{}; },
                      },
                      c);
}

DependencyGraph build_dependency_graph(std::span<const StrVar> decls, std::span<const StrConstraint> cs) {
    DependencyGraph g;
    for (const StrVar& v : decls) {
        if (g.definitions.contains(v)) { continue; }
        g.vars.push_back(v);
        g.successors[v];
        g.definitions[v] = 0;
        g.uses[v] = 0;
    }
    auto check = [&g](const StrVar& v) {
        if (!g.definitions.contains(v)) { throw ValidationError("undeclared variable: " + v); }
    };
    for (const StrConstraint& c : cs) {
        const StrVar& lhs = defined_var(c);
        check(lhs);
        ++g.definitions[lhs];
        for (const StrVar& v : source_vars(c)) {
            check(v);
            ++g.uses[v];
            g.successors[v].insert(lhs);
        }
    }
    return g;
}

std::optional<std::vector<StrVar>> topological_order(const DependencyGraph& g) {
    std::map<StrVar, std::size_t> indegree;
    for (const StrVar& v : g.vars) { indegree[v]; }
    for (const auto& [v, succ] : g.successors) {
        for (const StrVar& s : succ) { ++indegree[s]; }
    }
    std::vector<StrVar> order;
    std::vector<bool> done(g.vars.size(), false);
    // Repeated scans keep declaration order among ready nodes; graphs are small.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < g.vars.size(); ++i) {
            if (done[i] || indegree[g.vars[i]] != 0) { continue; }
            done[i] = true;
            progress = true;
            order.push_back(g.vars[i]);
            for (const StrVar& s : g.successors.at(g.vars[i])) { --indegree[s]; }
        }
    }
    if (order.size() != g.vars.size()) { return std::nullopt; }
    return order;
}

bool has_tree_property(const DependencyGraph& g) {
    if (!topological_order(g)) { return false; }
    for (const auto& [v, n] : g.uses) {
        if (n > 1) { return false; }
    }
    return true;
}

std::string to_string(SolveResult r) {
    switch (r) {
    case SolveResult::Sat: return "sat";
    case SolveResult::Unsat: return "unsat";
    case SolveResult::Inconclusive: return "unknown";
    }
    return "unknown";
}

namespace {

class Propagator {
public:
    Propagator(const SolverConfig& config) : config_(config), diag_(config.diagnostics ? *config.diagnostics : std::cerr) {}

    Sfa image(const StrConstraint& c) const {
        return std::visit(
            overloaded{
                [](const constraint::VarEqConst& x) { return literal(x.value); },
                [this](const constraint::VarEqVar& x) { return domains.at(x.rhs); },
                [this](const constraint::VarEqConcat& x) {
                    return trim(concatenate(domains.at(x.left), domains.at(x.right)));
                },
                [this](const constraint::VarEqReplace& x) {
                    return replace_image(domains.at(x.src), literal(x.pattern), x.replacement, config_.limits);
                },
                [this](const constraint::VarEqReplaceRe& x) {
                    return replace_image(domains.at(x.src), from_regex(*x.pattern), x.replacement,
                                         config_.limits);
                },
                [](const constraint::VarInRe& x) { return from_regex(*x.re); },
            },
            c);
    }

    void report(const StrVar& v, const StrConstraint& c, const Sfa& d) const {
        if (config_.verbosity < 1) { return; }
        diag_ << "[propagate] " << v << " <- " << kind_name(c) << ": " << d.num_states() << " states, "
              << d.num_transitions() << " transitions\n";
    }

    void dump() const {
        if (!config_.dot_dir) { return; }
        std::filesystem::create_directories(*config_.dot_dir);
        for (const auto& [v, d] : domains) {
            std::ofstream os(*config_.dot_dir / (file_stem(v) + ".dot"));
            if (!os) { throw Error("cannot write DOT file for " + v); }
            write_dot(os, d, v);
        }
    }

    VarDomain domains;

private:
    const SolverConfig& config_;
    std::ostream& diag_;
};

} // namespace

Propagation forward_propagate(std::span<const StrVar> decls, std::span<const StrConstraint> cs,
                              const SolverConfig& config) {
    DependencyGraph g = build_dependency_graph(decls, cs);
    Propagation result;
    auto order = topological_order(g);
    if (!order) {
        result.reason = "dependency graph is cyclic";
        for (const StrVar& v : g.vars) { result.domains.emplace(v, universal()); }
        return result;
    }

    std::map<StrVar, std::vector<const StrConstraint*>> defining;
    for (const StrConstraint& c : cs) { defining[defined_var(c)].push_back(&c); }

    Propagator prop(config);
    try {
        for (const StrVar& v : *order) {
            std::optional<Sfa> domain;
            for (const StrConstraint* c : defining[v]) {
                Sfa img = prop.image(*c);
                domain = domain ? trim(intersect(*domain, img, config.limits)) : trim(img);
                prop.report(v, *c, *domain);
                if (is_empty(*domain)) { break; }
            }
            Sfa d = domain ? std::move(*domain) : universal();
            bool empty = is_empty(d);
            prop.domains.emplace(v, std::move(d));
            if (empty) {
                result.result = SolveResult::Unsat;
                break;
            }
        }
        if (result.result != SolveResult::Unsat) {
            if (has_tree_property(g)) {
                result.result = SolveResult::Sat;
            } else {
                result.reason = "constraints lack the tree property";
            }
        }
    } catch (const ResourceError& e) {
        result.result = SolveResult::Inconclusive;
        result.reason = std::string("resource limit: ") + e.what();
    } catch (const ValidationError& e) {
        result.result = SolveResult::Inconclusive;
        result.reason = std::string("unsupported instance: ") + e.what();
    }
    if (config.verbosity >= 1 && !result.reason.empty()) {
        (config.diagnostics ? *config.diagnostics : std::cerr) << "[propagate] inconclusive: " << result.reason << "\n";
    }
    prop.dump();
    result.domains = std::move(prop.domains);
    return result;
}

} // namespace symauto
