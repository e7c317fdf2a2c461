#include "symauto/transducer.hh"

#include <tuple>

#include "symauto/error.hh"

namespace symauto {

out::Const::Const(IntervalList set) : set_(std::move(set)) {
    if (set_.empty()) { throw ValidationError("constant output set must be non-empty"); }
}

FnIndex Sft::add_function(OutputFn f) {
    functions_.push_back(std::move(f));
    return static_cast<FnIndex>(functions_.size() - 1);
}

void Sft::add_transition(State src, std::optional<IntervalList> input, FnIndex fn, State dst) {
    transitions_.push_back({src, std::move(input), fn, dst});
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

std::optional<IntervalList> evaluate(const OutputFn& f, std::optional<CodePoint> x) {
    return std::visit(
        overloaded{
            [](const out::Erase&) -> std::optional<IntervalList> { return std::nullopt; },
            [&x](const out::Identity&) -> std::optional<IntervalList> {
                if (!x) { return std::nullopt; }
                return IntervalList::single(*x);
            },
            [&x](const out::Offset& o) -> std::optional<IntervalList> {
                if (!x) { return std::nullopt; }
                return shift(IntervalList::single(*x), o.delta);
            },
            [](const out::Const& c) -> std::optional<IntervalList> { return c.set(); },
        },
        f);
}

std::optional<IntervalList> lift(const OutputFn& f, const IntervalList& letters) {
    if (letters.empty()) { throw ValidationError("cannot lift an output function over an empty label"); }
    return std::visit(
        overloaded{
            [](const out::Erase&) -> std::optional<IntervalList> { return std::nullopt; },
            [&letters](const out::Identity&) -> std::optional<IntervalList> { return letters; },
            [&letters](const out::Offset& o) -> std::optional<IntervalList> { return shift(letters, o.delta); },
            [](const out::Const& c) -> std::optional<IntervalList> { return c.set(); },
        },
        f);
}

bool may_erase(const OutputFn& f, const IntervalList&) {
    return std::holds_alternative<out::Erase>(f);
}

std::string to_string(const OutputFn& f) {
    return std::visit(
        overloaded{
            [](const out::Erase&) -> std::string { return "erase"; },
            [](const out::Identity&) -> std::string { return "id"; },
            [](const out::Offset& o) -> std::string {
                return (o.delta >= 0 ? "+" : "") + std::to_string(o.delta);
            },
            [](const out::Const& c) -> std::string { return "const{" + to_string(c.set()) + "}"; },
        },
        f);
}

Word input_word(const Trace& t) {
    Word w;
    for (const TraceStep& s : t) {
        if (s.input) { w.push_back(*s.input); }
    }
    return w;
}

Word output_word(const Trace& t) {
    Word w;
    for (const TraceStep& s : t) {
        if (s.output) { w.push_back(*s.output); }
    }
    return w;
}

bool is_well_formed(const Sft& t) {
    auto in_range = [&t](State q) { return q < t.num_states(); };
    for (State q : t.initial()) {
        if (!in_range(q)) { return false; }
    }
    for (State q : t.accepting()) {
        if (!in_range(q)) { return false; }
    }
    for (const SftTransition& tr : t.transitions()) {
        if (!in_range(tr.src) || !in_range(tr.dst)) { return false; }
        if (tr.fn >= t.functions().size()) { return false; }
        if (!tr.input) { continue; }
        if (tr.input->empty()) { return false; }
        if (const auto* o = std::get_if<out::Offset>(&t.function(tr.fn))) {
            if (!shift_in_range(*tr.input, o->delta)) { return false; }
        }
    }
    return true;
}

namespace {

std::set<State> step(const Sfa& a, const std::set<State>& from, CodePoint c) {
    std::set<State> next;
    for (State q : from) {
        for (const Edge& e : a.out(q)) {
            if (contains(e.label, c)) { next.insert(e.dst); }
        }
    }
    return next;
}

class TraceEnumerator {
public:
    TraceEnumerator(const Sft& t, const Sfa& a, std::size_t max_len, std::uint64_t span)
        : t_(t), a_(a), max_len_(max_len), span_(span), by_src_(t.num_states()) {
        for (const SftTransition& tr : t.transitions()) { by_src_[tr.src].push_back(&tr); }
    }

    std::set<Word> run() {
        for (State q : t_.initial()) { visit(q, a_.initial(), 0, Word{}); }
        return std::move(results_);
    }

private:
    // The automaton state set tracks the input prefix read so far; an empty
    // set means no extension of the trace can have its input accepted.
    void visit(State q, const std::set<State>& reading, std::size_t len, const Word& output) {
        if (reading.empty()) { return; }
        if (!seen_.emplace(q, reading, len, output).second) { return; }
        if (t_.accepting().contains(q)) {
            for (State p : reading) {
                if (a_.is_accepting(p)) {
                    results_.insert(output);
                    break;
                }
            }
        }
        if (len == max_len_) { return; }
        for (const SftTransition* tr : by_src_[q]) {
            const OutputFn& f = t_.function(tr->fn);
            if (!tr->input) {
                emit(tr->dst, reading, len, output, evaluate(f, std::nullopt));
                continue;
            }
            for (CodePoint x : elements(intersect(*tr->input, readable(reading)), span_)) {
                std::set<State> next = step(a_, reading, x);
                if (next.empty()) { continue; }
                emit(tr->dst, next, len, output, evaluate(f, x));
            }
        }
    }

    IntervalList readable(const std::set<State>& reading) const {
        IntervalList letters;
        for (State p : reading) {
            for (const Edge& e : a_.out(p)) { letters = unite(letters, e.label); }
        }
        return letters;
    }

    void emit(State dst, const std::set<State>& reading, std::size_t len, const Word& output,
              const std::optional<IntervalList>& produced) {
        if (!produced) {
            visit(dst, reading, len + 1, output);
            return;
        }
        for (CodePoint y : elements(*produced, span_)) {
            Word extended = output;
            extended.push_back(y);
            visit(dst, reading, len + 1, extended);
        }
    }

    const Sft& t_;
    const Sfa& a_;
    std::size_t max_len_;
    std::uint64_t span_;
    std::vector<std::vector<const SftTransition*>> by_src_;
    std::set<std::tuple<State, std::set<State>, std::size_t, Word>> seen_;
    std::set<Word> results_;
};

} // namespace

std::set<Word> output_language_bounded(const Sft& t, const Sfa& a, std::size_t max_trace_len,
                                       std::uint64_t max_label_span) {
    if (!is_well_formed(t)) { throw ValidationError("transducer is not well-formed"); }
    return TraceEnumerator(t, a, max_trace_len, max_label_span).run();
}

} // namespace symauto
