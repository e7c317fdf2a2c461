#include "symauto/regex.hh"

#include "symauto/error.hh"

namespace symauto {

namespace re {

RegexPtr literal(Word w) { return std::make_shared<const Regex>(Regex{Regex::Literal{std::move(w)}}); }

RegexPtr range(CodePoint lo, CodePoint hi) {
    if (lo > hi || hi > kMaxCodePoint) { throw ValidationError("malformed regex range"); }
    return std::make_shared<const Regex>(Regex{Regex::Range{{lo, hi}}});
}

RegexPtr concat(RegexPtr left, RegexPtr right) {
    return std::make_shared<const Regex>(Regex{Regex::Concat{std::move(left), std::move(right)}});
}

RegexPtr alt(RegexPtr left, RegexPtr right) {
    return std::make_shared<const Regex>(Regex{Regex::Union{std::move(left), std::move(right)}});
}

RegexPtr star(RegexPtr inner) { return std::make_shared<const Regex>(Regex{Regex::Star{std::move(inner)}}); }

RegexPtr plus(RegexPtr inner) { return std::make_shared<const Regex>(Regex{Regex::Plus{std::move(inner)}}); }

RegexPtr any_char() { return std::make_shared<const Regex>(Regex{Regex::AnyChar{}}); }

} // namespace re

bool operator==(const Regex& a, const Regex& b) {
    if (a.node.index() != b.node.index()) { return false; }
    return std::visit(
        [&b](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Regex::Literal>) {
                return x.word == y.word;
            } else if constexpr (std::is_same_v<T, Regex::Range>) {
                return x.interval == y.interval;
            } else if constexpr (std::is_same_v<T, Regex::Concat> || std::is_same_v<T, Regex::Union>) {
                return *x.left == *y.left && *x.right == *y.right;
            } else if constexpr (std::is_same_v<T, Regex::Star> || std::is_same_v<T, Regex::Plus>) {
                return *x.inner == *y.inner;
            } else {
                return true;
            }
        },
        a.node);
}

namespace {

struct Fragment {
    State start;
    State end;
};

class ThompsonBuilder {
public:
    Fragment build(const Regex& r) {
        return std::visit([this](const auto& n) { return build_node(n); }, r.node);
    }

    EpsilonSfa take() { return std::move(e_); }
    EpsilonSfa& automaton() { return e_; }

private:
    Fragment build_node(const Regex::Literal& n) {
        State start = e_.add_state();
        State cur = start;
        for (CodePoint c : n.word) {
            State next = e_.add_state();
            e_.add_transition(cur, IntervalList::single(c), next);
            cur = next;
        }
        return {start, cur};
    }

    Fragment build_node(const Regex::Range& n) { return letters(IntervalList::range(n.interval.lo, n.interval.hi)); }

    Fragment build_node(const Regex::AnyChar&) { return letters(IntervalList::full()); }

    Fragment build_node(const Regex::Concat& n) {
        Fragment l = build(*n.left);
        Fragment r = build(*n.right);
        e_.add_epsilon(l.end, r.start);
        return {l.start, r.end};
    }

    Fragment build_node(const Regex::Union& n) {
        State start = e_.add_state();
        Fragment l = build(*n.left);
        Fragment r = build(*n.right);
        State end = e_.add_state();
        e_.add_epsilon(start, l.start);
        e_.add_epsilon(start, r.start);
        e_.add_epsilon(l.end, end);
        e_.add_epsilon(r.end, end);
        return {start, end};
    }

    Fragment build_node(const Regex::Star& n) {
        State start = e_.add_state();
        Fragment in = build(*n.inner);
        State end = e_.add_state();
        e_.add_epsilon(start, in.start);
        e_.add_epsilon(start, end);
        e_.add_epsilon(in.end, in.start);
        e_.add_epsilon(in.end, end);
        return {start, end};
    }

    // r+ is r followed by r*.
    Fragment build_node(const Regex::Plus& n) {
        Fragment first = build(*n.inner);
        Fragment rest = build_node(Regex::Star{n.inner});
        e_.add_epsilon(first.end, rest.start);
        return {first.start, rest.end};
    }

    Fragment letters(IntervalList label) {
        State start = e_.add_state();
        State end = e_.add_state();
        e_.add_transition(start, std::move(label), end);
        return {start, end};
    }

    EpsilonSfa e_;
};

} // namespace

EpsilonSfa thompson(const Regex& r) {
    ThompsonBuilder b;
    Fragment f = b.build(r);
    b.automaton().set_initial(f.start);
    b.automaton().set_accepting(f.end);
    return b.take();
}

Sfa from_regex(const Regex& r) { return eliminate_epsilon(thompson(r)); }

} // namespace symauto
