#ifndef SYMAUTO_TRANSDUCER_HH
#define SYMAUTO_TRANSDUCER_HH

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "symauto/automata.hh"
#include "symauto/interval.hh"

namespace symauto {

namespace out {

/// Emits nothing.
struct Erase {
    friend bool operator==(const Erase&, const Erase&) = default;
};

/// Copies the consumed letter.
struct Identity {
    friend bool operator==(const Identity&, const Identity&) = default;
};

/// Emits the consumed letter shifted by `delta` (toUpper on a-z is -32).
struct Offset {
    std::int32_t delta;
    friend bool operator==(const Offset&, const Offset&) = default;
};

/// Emits any letter of a fixed non-empty set, with or without input.
class Const {
public:
    /// Throws ValidationError on an empty set.
    explicit Const(IntervalList set);
    const IntervalList& set() const { return set_; }
    friend bool operator==(const Const&, const Const&) = default;

private:
    IntervalList set_;
};

} // namespace out

/// Output function of a transducer transition. A result of nullopt stands for
/// the empty output (epsilon); a present result is the set of letters that
/// may be emitted.
using OutputFn = std::variant<out::Erase, out::Identity, out::Offset, out::Const>;

using FnIndex = std::uint32_t;

struct SftTransition {
    State src;
    /// nullopt: the transition consumes no input.
    std::optional<IntervalList> input;
    FnIndex fn;
    State dst;

    friend auto operator<=>(const SftTransition&, const SftTransition&) = default;
};

/**
 * Symbolic finite transducer. Transitions refer to output functions through
 * an index into the function table, so one function can label many edges.
 *
 * Mutators do not validate; use is_well_formed() before running algorithms
 * (the product constructions check it themselves).
 */
class Sft {
public:
    Sft() = default;
    explicit Sft(std::size_t num_states) : num_states_(num_states) {}

    State add_state() { return static_cast<State>(num_states_++); }
    std::size_t num_states() const { return num_states_; }

    FnIndex add_function(OutputFn f);
    void add_transition(State src, std::optional<IntervalList> input, FnIndex fn, State dst);
    void set_initial(State q) { initial_.insert(q); }
    void set_accepting(State q) { accepting_.insert(q); }

    const std::vector<SftTransition>& transitions() const { return transitions_; }
    const std::vector<OutputFn>& functions() const { return functions_; }
    const OutputFn& function(FnIndex i) const { return functions_.at(i); }
    const std::set<State>& initial() const { return initial_; }
    const std::set<State>& accepting() const { return accepting_; }

private:
    std::size_t num_states_ = 0;
    std::vector<SftTransition> transitions_;
    std::vector<OutputFn> functions_;
    std::set<State> initial_;
    std::set<State> accepting_;
};

/// Output of `f` on one optional input letter. Identity and Offset return
/// nullopt on a missing input; Const ignores the input.
/// Throws RangeError when an Offset leaves the code point range.
std::optional<IntervalList> evaluate(const OutputFn& f, std::optional<CodePoint> x);

/// Set lift: the union of evaluate(f, x) over x in `letters`, or nullopt when
/// every x yields the empty output. Requires non-empty `letters`.
std::optional<IntervalList> lift(const OutputFn& f, const IntervalList& letters);

/// Whether some x in `letters` yields the empty output.
bool may_erase(const OutputFn& f, const IntervalList& letters);

std::string to_string(const OutputFn& f);

/// One step of a run: consumed letter (if any) and emitted letter (if any).
struct TraceStep {
    std::optional<CodePoint> input;
    std::optional<CodePoint> output;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using Trace = std::vector<TraceStep>;

Word input_word(const Trace& t);
Word output_word(const Trace& t);

/// Structural checks: endpoints, function indices, non-empty input labels,
/// and that every Offset stays in range on its input label.
bool is_well_formed(const Sft& t);

/**
 * Output words of all accepting traces of `t` with at most `max_trace_len`
 * steps whose input word is accepted by `a`. Exhaustive enumeration, meant
 * as a reference for small instances: input letters are drawn from what `a`
 * can read at that point, and any label or output set still larger than
 * `max_label_span` letters raises ResourceError.
 */
std::set<Word> output_language_bounded(const Sft& t, const Sfa& a, std::size_t max_trace_len,
                                       std::uint64_t max_label_span = 256);

} // namespace symauto

#endif
