#include "symauto/replace.hh"

#include <algorithm>

#include "symauto/error.hh"
#include "symauto/product.hh"

namespace symauto {

namespace {

void reject_empty_match(const Sfa& pattern) {
    if (accepts(pattern, Word{})) {
        throw ValidationError("replacement pattern must not match the empty word");
    }
}

/// Language-preserving copy of `p` whose only initial state has no incoming
/// edges. A copy loop on an initial state that the pattern can re-enter
/// would let a match resume after copied letters.
Sfa isolate_initial(const Sfa& p) {
    bool reentered = false;
    for (State q = 0; q < p.num_states() && !reentered; ++q) {
        for (const Edge& e : p.out(q)) {
            if (p.initial().contains(e.dst)) {
                reentered = true;
                break;
            }
        }
    }
    if (!reentered && p.initial().size() <= 1) { return p; }

    Sfa out(p.num_states());
    for (const Transition& t : p.transitions()) { out.add_transition(t.src, t.label, t.dst); }
    for (State q : p.accepting()) { out.set_accepting(q); }
    State start = out.add_state();
    for (State i : p.initial()) {
        for (const Edge& e : p.out(i)) { out.merge_transition(start, e.label, e.dst); }
    }
    out.set_initial(start);
    return trim(out);
}

} // namespace

Sft pattern_to_eraser(const Sfa& pattern) {
    reject_empty_match(pattern);
    Sft t(pattern.num_states());
    FnIndex erase = t.add_function(out::Erase{});
    for (const Transition& tr : pattern.transitions()) { t.add_transition(tr.src, tr.label, erase, tr.dst); }
    for (State q : pattern.initial()) { t.set_initial(q); }
    for (State q : pattern.accepting()) { t.set_accepting(q); }
    return t;
}

Sft const_to_emitter(const Word& r) {
    Sft t(r.size() + 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
        FnIndex g = t.add_function(out::Const(IntervalList::single(r[k])));
        t.add_transition(static_cast<State>(k), std::nullopt, g, static_cast<State>(k + 1));
    }
    t.set_initial(0);
    t.set_accepting(static_cast<State>(r.size()));
    return t;
}

Sft build_replace_sft(const Sfa& pattern, const Word& r) {
    reject_empty_match(pattern);
    Sfa p = isolate_initial(trim(pattern));

    Sft t(p.num_states());
    FnIndex erase = t.add_function(out::Erase{});
    FnIndex identity = t.add_function(out::Identity{});
    for (const Transition& tr : p.transitions()) { t.add_transition(tr.src, tr.label, erase, tr.dst); }

    const State base = static_cast<State>(p.num_states());
    for (std::size_t k = 0; k <= r.size(); ++k) { t.add_state(); }
    for (std::size_t k = 0; k < r.size(); ++k) {
        FnIndex g = t.add_function(out::Const(IntervalList::single(r[k])));
        t.add_transition(base + static_cast<State>(k), std::nullopt, g, base + static_cast<State>(k + 1));
    }
    const State last = base + static_cast<State>(r.size());

    for (State f : p.accepting()) { t.add_transition(f, std::nullopt, erase, base); }
    for (State i : p.initial()) {
        t.add_transition(i, IntervalList::full(), identity, i);
        t.set_initial(i);
    }
    t.add_transition(last, IntervalList::full(), identity, last);
    t.set_accepting(last);
    return t;
}

Sfa contains_pattern(const Sfa& pattern) {
    return concatenate(universal(), concatenate(pattern, universal()));
}

Sfa replace_image(const Sfa& a, const Sfa& pattern, const Word& r, const Limits& limits) {
    Sfa matched = product_image(build_replace_sft(pattern, r), a, limits);
    Sfa unmatched = intersect(a, complement(contains_pattern(pattern), limits), limits);
    return trim(unite(matched, trim(unmatched)));
}

} // namespace symauto
