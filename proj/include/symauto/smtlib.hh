#ifndef SYMAUTO_SMTLIB_HH
#define SYMAUTO_SMTLIB_HH

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symauto/regex.hh"
#include "symauto/solver.hh"

namespace symauto::smtlib {

/// A parsed script, flattened into the solver's constraint forms.
struct Script {
    std::optional<std::string> logic;
    /// Declared variables followed, in creation order, by the fresh variables
    /// introduced while flattening nested terms.
    std::vector<StrVar> decls;
    std::vector<StrConstraint> asserts;
    bool has_check_sat = false;

    friend bool operator==(const Script&, const Script&) = default;
};

/**
 * Parses the supported SMT-LIB 2 subset: set-logic (QF_S, QF_SLIA),
 * declare-fun / declare-const of sort String, check-sat, and assertions built
 * from `and`, `=`, `str.++`, `str.replace`, `str.replace_re`, `str.in_re`
 * with regex terms `str.to_re`, `re.range`, `re.+`, `re.*`, `re.++`,
 * `re.union`, `re.opt`, `re.all`, `re.allchar`. set-info, set-option, and
 * exit are ignored.
 *
 * Throws ParseError naming the offending construct and its position.
 */
Script parse_script(std::string_view text);

/// Parses one regex term, e.g. `(re.+ (re.range "0" "9"))`.
RegexPtr parse_regex(std::string_view text);

/// Prints a script that parses back to an equal Script.
std::string print_script(const Script& s);
std::string print_regex(const Regex& r);
/// SMT-LIB string literal with `""` and `\u{...}` escapes.
std::string print_string_literal(const Word& w);

/// UTF-8 helpers for literals and diagnostics. Invalid input throws
/// ValidationError.
Word decode_utf8(std::string_view s);
std::string encode_utf8(const Word& w);

/// Notice printed at verbosity >= 1.
inline constexpr std::string_view kReplaceSemanticsNotice =
    "note: str.replace and str.replace_re replace any one matching occurrence, "
    "not necessarily the first one as SMT-LIB prescribes";

/// Forward propagation over the script's constraints.
SolveResult solve(const Script& s, const SolverConfig& config = {});

} // namespace symauto::smtlib

#endif
