// Automata and transducers that appear as running examples.

#ifndef SYMAUTO_TESTS_FIXTURES_HH
#define SYMAUTO_TESTS_FIXTURES_HH

#include "symauto/automata.hh"
#include "symauto/replace.hh"
#include "symauto/transducer.hh"

namespace fixture {

using namespace symauto;

/// Digit strings, /[0-9]+/: q0 -[0-9]-> q1, q1 -[0-9]-> q1, q1 accepting.
inline Sfa digits() {
    Sfa a(2);
    a.add_transition(0, IntervalList{{'0', '9'}}, 1);
    a.add_transition(1, IntervalList{{'0', '9'}}, 1);
    a.set_initial(0);
    a.set_accepting(1);
    return a;
}

/// Case swapper: one state, lower case shifted up, upper case shifted down.
inline Sft case_swap() {
    Sft t(1);
    FnIndex upper = t.add_function(out::Offset{-32});
    FnIndex lower = t.add_function(out::Offset{32});
    t.add_transition(0, IntervalList{{'a', 'z'}}, upper, 0);
    t.add_transition(0, IntervalList{{'A', 'Z'}}, lower, 0);
    t.set_initial(0);
    t.set_accepting(0);
    return t;
}

/// Replaces one run of digits with "NUM".
inline Sft digits_to_num() {
    Word num{'N', 'U', 'M'};
    return build_replace_sft(digits(), num);
}

} // namespace fixture

#endif
