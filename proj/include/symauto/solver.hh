#ifndef SYMAUTO_SOLVER_HH
#define SYMAUTO_SOLVER_HH

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symauto/automata.hh"
#include "symauto/regex.hh"

namespace symauto {

using StrVar = std::string;

namespace constraint {

struct VarEqConst {
    StrVar lhs;
    Word value;
    friend bool operator==(const VarEqConst&, const VarEqConst&) = default;
};

struct VarEqVar {
    StrVar lhs;
    StrVar rhs;
    friend bool operator==(const VarEqVar&, const VarEqVar&) = default;
};

struct VarEqConcat {
    StrVar lhs;
    StrVar left;
    StrVar right;
    friend bool operator==(const VarEqConcat&, const VarEqConcat&) = default;
};

struct VarEqReplace {
    StrVar lhs;
    StrVar src;
    Word pattern;
    Word replacement;
    friend bool operator==(const VarEqReplace&, const VarEqReplace&) = default;
};

struct VarEqReplaceRe {
    StrVar lhs;
    StrVar src;
    RegexPtr pattern;
    Word replacement;
    friend bool operator==(const VarEqReplaceRe& a, const VarEqReplaceRe& b) {
        return a.lhs == b.lhs && a.src == b.src && *a.pattern == *b.pattern &&
               a.replacement == b.replacement;
    }
};

struct VarInRe {
    StrVar var;
    RegexPtr re;
    friend bool operator==(const VarInRe& a, const VarInRe& b) {
        return a.var == b.var && *a.re == *b.re;
    }
};

} // namespace constraint

using StrConstraint = std::variant<constraint::VarEqConst, constraint::VarEqVar, constraint::VarEqConcat,
                                   constraint::VarEqReplace, constraint::VarEqReplaceRe, constraint::VarInRe>;

/// The variable whose domain the constraint restricts.
const StrVar& defined_var(const StrConstraint& c);
/// Variables read by the constraint, with repetitions.
std::vector<StrVar> source_vars(const StrConstraint& c);

/// Nodes are variables; an edge v -> x for every occurrence of v on the
/// right-hand side of a constraint defining x.
struct DependencyGraph {
    std::vector<StrVar> vars;
    std::map<StrVar, std::multiset<StrVar>> successors;
    std::map<StrVar, std::size_t> definitions;
    /// Right-hand-side occurrences, counted with multiplicity.
    std::map<StrVar, std::size_t> uses;
};

/// Throws ValidationError when a constraint mentions an undeclared variable.
DependencyGraph build_dependency_graph(std::span<const StrVar> decls, std::span<const StrConstraint> cs);

/// Kahn order (declaration order among ready nodes), or nullopt on a cycle.
std::optional<std::vector<StrVar>> topological_order(const DependencyGraph& g);

/// Acyclic, and no variable occurs more than once across all right-hand
/// sides. Under this condition non-empty propagated domains admit a model.
bool has_tree_property(const DependencyGraph& g);

enum class SolveResult { Sat, Unsat, Inconclusive };

std::string to_string(SolveResult r);

using VarDomain = std::map<StrVar, Sfa>;

struct SolverConfig {
    Limits limits;
    /// 0: silent. 1: semantics notice and per-constraint domain sizes.
    int verbosity = 0;
    /// When set, one `<var>.dot` per propagated domain is written here.
    std::optional<std::filesystem::path> dot_dir;
    /// Diagnostics sink; nullptr means std::cerr.
    std::ostream* diagnostics = nullptr;
};

struct Propagation {
    VarDomain domains;
    SolveResult result = SolveResult::Inconclusive;
    /// Why the result is Inconclusive, when it is.
    std::string reason;
};

/**
 * Forward propagation. Variables are processed in topological order; each
 * domain is the intersection of the images of all constraints defining the
 * variable (Sigma* if there are none), trimmed after every step.
 *
 * Unsat as soon as a domain is empty. Sat if all domains are non-empty and
 * the tree property holds, Inconclusive otherwise, on a cyclic graph, or when
 * a construction exceeds the configured limits.
 */
Propagation forward_propagate(std::span<const StrVar> decls, std::span<const StrConstraint> cs,
                              const SolverConfig& config = {});

} // namespace symauto

#endif
