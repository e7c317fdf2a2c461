#ifndef SYMAUTO_REGEX_HH
#define SYMAUTO_REGEX_HH

#include <memory>
#include <variant>

#include "symauto/automata.hh"
#include "symauto/interval.hh"

namespace symauto {

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

/// Regular expression syntax tree. Nodes are immutable and shared.
struct Regex {
    struct Literal { Word word; };
    struct Range { Interval interval; };
    struct Concat { RegexPtr left, right; };
    struct Union { RegexPtr left, right; };
    struct Star { RegexPtr inner; };
    struct Plus { RegexPtr inner; };
    struct AnyChar {};

    std::variant<Literal, Range, Concat, Union, Star, Plus, AnyChar> node;
};

namespace re {

RegexPtr literal(Word w);
/// Throws ValidationError when lo > hi.
RegexPtr range(CodePoint lo, CodePoint hi);
RegexPtr concat(RegexPtr left, RegexPtr right);
RegexPtr alt(RegexPtr left, RegexPtr right);
RegexPtr star(RegexPtr inner);
RegexPtr plus(RegexPtr inner);
RegexPtr any_char();

} // namespace re

/// Structural equality.
bool operator==(const Regex& a, const Regex& b);

/// Thompson construction into an EpsilonSfa.
EpsilonSfa thompson(const Regex& r);
/// Thompson construction followed by epsilon elimination.
Sfa from_regex(const Regex& r);

} // namespace symauto

#endif
