#ifndef SYMAUTO_AUTOMATA_HH
#define SYMAUTO_AUTOMATA_HH

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "symauto/interval.hh"

namespace symauto {

/// Dense, automaton-local state identifier.
using State = std::uint32_t;

/// Size limits shared by the constructions that can blow up.
struct Limits {
    std::size_t max_states = 100000;
};

struct Edge {
    IntervalList label;
    State dst;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Transition {
    State src;
    IntervalList label;
    State dst;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/**
 * Symbolic finite automaton over interval-list labels.
 *
 * Transitions form a set: adding an identical (src, label, dst) twice keeps
 * one copy. Labels are always canonical and non-empty.
 */
class Sfa {
public:
    Sfa() = default;
    explicit Sfa(std::size_t num_states) : out_(num_states) {}

    State add_state();
    std::size_t num_states() const { return out_.size(); }

    /// Throws ValidationError on an empty label or an unknown endpoint.
    void add_transition(State src, IntervalList label, State dst);
    /// Like add_transition, but unions `label` into an existing src->dst edge.
    void merge_transition(State src, const IntervalList& label, State dst);

    void set_initial(State q);
    void set_accepting(State q, bool accepting = true);

    const std::vector<Edge>& out(State q) const { return out_[q]; }
    const std::set<State>& initial() const { return initial_; }
    const std::set<State>& accepting() const { return accepting_; }
    bool is_accepting(State q) const { return accepting_.contains(q); }

    std::size_t num_transitions() const;
    /// All transitions, sorted.
    std::vector<Transition> transitions() const;

private:
    void check_state(State q) const;

    std::vector<std::vector<Edge>> out_;
    std::set<State> initial_;
    std::set<State> accepting_;
};

/// SFA extended with unlabeled epsilon edges.
class EpsilonSfa {
public:
    EpsilonSfa() = default;
    explicit EpsilonSfa(std::size_t num_states) : labeled_(num_states), eps_(num_states) {}

    State add_state();
    std::size_t num_states() const { return labeled_.num_states(); }

    void add_transition(State src, IntervalList label, State dst) {
        labeled_.add_transition(src, std::move(label), dst);
    }
    void add_epsilon(State src, State dst);
    void set_initial(State q) { labeled_.set_initial(q); }
    void set_accepting(State q, bool accepting = true) { labeled_.set_accepting(q, accepting); }

    const std::vector<Edge>& out(State q) const { return labeled_.out(q); }
    const std::set<State>& eps_out(State q) const { return eps_[q]; }
    const std::set<State>& initial() const { return labeled_.initial(); }
    const std::set<State>& accepting() const { return labeled_.accepting(); }
    bool is_accepting(State q) const { return labeled_.is_accepting(q); }

    /// The automaton without its epsilon edges.
    const Sfa& labeled() const { return labeled_; }
    std::vector<Transition> transitions() const { return labeled_.transitions(); }
    std::size_t num_epsilons() const;

private:
    Sfa labeled_;
    std::vector<std::set<State>> eps_;
};

/// States reachable from `q` through epsilon edges, including `q`.
std::set<State> epsilon_closure(const EpsilonSfa& e, State q);

bool accepts(const Sfa& a, const Word& w);

/// Epsilon elimination through closures; the result is trimmed.
Sfa eliminate_epsilon(const EpsilonSfa& e);

/// Language {w}.
Sfa literal(const Word& w);
/// Language of all words whose letters lie in `letters` (Sigma* by default).
Sfa universal(const IntervalList& letters = IntervalList::full());
/// Automaton with no states.
Sfa empty_language();
/// Words of length at most `n` over the full alphabet.
Sfa words_up_to(std::size_t n);

/// Reachable-pair product. Throws ResourceError past `limits.max_states`.
Sfa intersect(const Sfa& a, const Sfa& b, const Limits& limits = {});
/// Disjoint union.
Sfa unite(const Sfa& a, const Sfa& b);
Sfa concatenate(const Sfa& a, const Sfa& b);

/// Subset construction over minterms; the result is deterministic and
/// complete, with an explicit sink when needed.
Sfa determinize(const Sfa& a, const Limits& limits = {});
Sfa complement(const Sfa& a, const Limits& limits = {});

/// No accepting state reachable from an initial state.
bool is_empty(const Sfa& a);
/// Drops states that are unreachable or cannot reach an accepting state.
Sfa trim(const Sfa& a);
/// Same for epsilon automata. When `kept` is given, it receives the original
/// id of each surviving state, indexed by its new id.
EpsilonSfa trim(const EpsilonSfa& e, std::vector<State>* kept = nullptr);

bool is_deterministic(const Sfa& a);
/// Every state's outgoing labels cover the full alphabet.
bool is_complete(const Sfa& a);

/// A shortest accepted word, if any. Among shortest words, letters are
/// chosen as the minimum of each label.
std::optional<Word> shortest_word(const Sfa& a);

} // namespace symauto

#endif
