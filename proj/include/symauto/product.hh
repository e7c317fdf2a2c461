#ifndef SYMAUTO_PRODUCT_HH
#define SYMAUTO_PRODUCT_HH

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symauto/automata.hh"
#include "symauto/transducer.hh"

namespace symauto {

/// Bijection between (transducer state, automaton state) pairs and the dense
/// states of a product automaton.
class PairStateMap {
public:
    /// Id of the pair, assigning the next free id if the pair is new.
    State insert(State t, State a);
    std::optional<State> find(State t, State a) const;
    std::pair<State, State> pair_of(State q) const { return pairs_.at(q); }
    std::size_t size() const { return pairs_.size(); }

private:
    static std::uint64_t key(State t, State a) { return (std::uint64_t{t} << 32) | a; }

    std::unordered_map<std::uint64_t, State> index_;
    std::vector<std::pair<State, State>> pairs_;
};

struct ProductAutomaton {
    EpsilonSfa automaton;
    PairStateMap pairs;
};

/**
 * Product of a transducer and an automaton, built as a direct set
 * comprehension over the full state product Q_t x Q_a:
 *
 *  - an input-free transducer edge (p, -, f, q) yields, for every automaton
 *    state p', a labeled edge (p,p') -> (q,p') with label evaluate(f, -) when that
 *    is present, and an epsilon edge otherwise;
 *  - a reading edge (p, s1, f, q) and an automaton edge (p', s2, q') with
 *    s1 & s2 non-empty yield a labeled edge (p,p') -> (q,q') with label
 *    lift(f, s1 & s2) when present, and an epsilon edge when
 *    may_erase(f, s1 & s2).
 *
 * Pair (p, p') gets id p * |Q_a| + p'. Reference implementation; quadratic
 * in the state counts regardless of reachability.
 */
ProductAutomaton product_abstract(const Sft& t, const Sfa& a);

/// Same edges as product_abstract, restricted to pairs reachable from the
/// initial pairs. Breadth-first, single-threaded. Throws ResourceError past
/// `limits.max_states` pairs.
ProductAutomaton product_loop_serial(const Sft& t, const Sfa& a, const Limits& limits = {});

/// product_loop_serial with each breadth-first level expanded in parallel.
/// The result, including state numbering, is identical to the serial one.
ProductAutomaton product_loop(const Sft& t, const Sfa& a, const Limits& limits = {});

/// Output language of `t` over L(a) as a trimmed SFA.
Sfa product_image(const Sft& t, const Sfa& a, const Limits& limits = {});

/// Trims the automaton and carries the pair map along.
ProductAutomaton trim(const ProductAutomaton& p);

/// Equality of state sets, labeled edges, epsilon edges, initial and
/// accepting states, all compared through their state pairs.
bool isomorphic(const ProductAutomaton& x, const ProductAutomaton& y);

} // namespace symauto

#endif
