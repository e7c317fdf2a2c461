#include "symauto/product.hh"

#include <exception>
#include <set>
#include <tuple>

#include <omp.h>

#include "symauto/error.hh"

namespace symauto {

State PairStateMap::insert(State t, State a) {
    auto [it, inserted] = index_.try_emplace(key(t, a), static_cast<State>(pairs_.size()));
    if (inserted) { pairs_.emplace_back(t, a); }
    return it->second;
}

std::optional<State> PairStateMap::find(State t, State a) const {
    auto it = index_.find(key(t, a));
    if (it == index_.end()) { return std::nullopt; }
    return it->second;
}

namespace {

void require_well_formed(const Sft& t) {
    if (!is_well_formed(t)) { throw ValidationError("transducer is not well-formed"); }
}

} // namespace

ProductAutomaton product_abstract(const Sft& t, const Sfa& a) {
    require_well_formed(t);
    const std::size_t na = a.num_states();
    ProductAutomaton result;
    result.automaton = EpsilonSfa(t.num_states() * na);
    for (State p = 0; p < t.num_states(); ++p) {
        for (State pa = 0; pa < na; ++pa) { result.pairs.insert(p, pa); }
    }
    auto id = [na](State p, State pa) { return static_cast<State>(p * na + pa); };
    EpsilonSfa& e = result.automaton;

    for (const SftTransition& tr : t.transitions()) {
        const OutputFn& f = t.function(tr.fn);
        if (!tr.input) {
            std::optional<IntervalList> produced = evaluate(f, std::nullopt);
            for (State pa = 0; pa < na; ++pa) {
                if (produced) {
                    e.add_transition(id(tr.src, pa), *produced, id(tr.dst, pa));
                } else {
                    e.add_epsilon(id(tr.src, pa), id(tr.dst, pa));
                }
            }
            continue;
        }
        for (const Transition& ta : a.transitions()) {
            IntervalList common = intersect(*tr.input, ta.label);
            if (common.empty()) { continue; }
            if (auto produced = lift(f, common)) {
                e.add_transition(id(tr.src, ta.src), *produced, id(tr.dst, ta.dst));
            }
            if (may_erase(f, common)) { e.add_epsilon(id(tr.src, ta.src), id(tr.dst, ta.dst)); }
        }
    }
    for (State p : t.initial()) {
        for (State pa : a.initial()) { e.set_initial(id(p, pa)); }
    }
    for (State p : t.accepting()) {
        for (State pa : a.accepting()) { e.set_accepting(id(p, pa)); }
    }
    return result;
}

namespace {

/// Outgoing product edge before the target pair has been numbered.
struct PendingEdge {
    std::optional<IntervalList> label; // nullopt: epsilon edge
    State t_dst;
    State a_dst;
};

/// Shared machinery of the two loop variants.
class LoopProduct {
public:
    LoopProduct(const Sft& t, const Sfa& a, const Limits& limits)
        : t_(t), a_(a), limits_(limits), by_src_(t.num_states()) {
        require_well_formed(t);
        for (const SftTransition& tr : t.transitions()) { by_src_[tr.src].push_back(&tr); }
    }

    /// Edges leaving (p, pa): the input-free case keeps the automaton in
    /// place, the reading case synchronizes with every automaton edge.
    std::vector<PendingEdge> expand(State p, State pa) const {
        std::vector<PendingEdge> d;
        for (const SftTransition* tr : by_src_[p]) {
            const OutputFn& f = t_.function(tr->fn);
            if (!tr->input) {
                d.push_back({evaluate(f, std::nullopt), tr->dst, pa});
                continue;
            }
            for (const Edge& ea : a_.out(pa)) {
                IntervalList common = intersect(*tr->input, ea.label);
                if (common.empty()) { continue; }
                if (auto produced = lift(f, common)) { d.push_back({std::move(produced), tr->dst, ea.dst}); }
                if (may_erase(f, common)) { d.push_back({std::nullopt, tr->dst, ea.dst}); }
            }
        }
        return d;
    }

    /// Numbers the pair, creating the state when new. Returns the id and
    /// whether it was created.
    std::pair<State, bool> get(State p, State pa) {
        std::size_t before = result_.pairs.size();
        State q = result_.pairs.insert(p, pa);
        if (result_.pairs.size() == before) { return {q, false}; }
        if (result_.pairs.size() > limits_.max_states) {
            throw ResourceError("product exceeds the state ceiling of " + std::to_string(limits_.max_states));
        }
        result_.automaton.add_state();
        if (t_.accepting().contains(p) && a_.is_accepting(pa)) { result_.automaton.set_accepting(q); }
        return {q, true};
    }

    /// Numbers the initial pairs, in order.
    std::vector<State> seed() {
        std::vector<State> frontier;
        for (State p : t_.initial()) {
            for (State pa : a_.initial()) {
                auto [q, created] = get(p, pa);
                result_.automaton.set_initial(q);
                if (created) { frontier.push_back(q); }
            }
        }
        return frontier;
    }

    /// Adds the edges of `src`, appending newly created targets to `next`.
    void commit(State src, const std::vector<PendingEdge>& edges, std::vector<State>& next) {
        for (const PendingEdge& pe : edges) {
            auto [dst, created] = get(pe.t_dst, pe.a_dst);
            if (created) { next.push_back(dst); }
            if (pe.label) {
                result_.automaton.add_transition(src, *pe.label, dst);
            } else {
                result_.automaton.add_epsilon(src, dst);
            }
        }
    }

    std::pair<State, State> pair_of(State q) const { return result_.pairs.pair_of(q); }
    ProductAutomaton take() { return std::move(result_); }

private:
    const Sft& t_;
    const Sfa& a_;
    Limits limits_;
    std::vector<std::vector<const SftTransition*>> by_src_;
    ProductAutomaton result_;
};

} // namespace

ProductAutomaton product_loop_serial(const Sft& t, const Sfa& a, const Limits& limits) {
    LoopProduct lp(t, a, limits);
    std::vector<State> queue = lp.seed();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        State q = queue[head];
        auto [p, pa] = lp.pair_of(q);
        lp.commit(q, lp.expand(p, pa), queue);
    }
    return lp.take();
}

ProductAutomaton product_loop(const Sft& t, const Sfa& a, const Limits& limits) {
    LoopProduct lp(t, a, limits);
    std::vector<State> level = lp.seed();
    while (!level.empty()) {
        std::vector<std::pair<State, State>> pairs(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) { pairs[i] = lp.pair_of(level[i]); }

        std::vector<std::vector<PendingEdge>> expanded(level.size());
        std::exception_ptr failure;
        const auto n = static_cast<std::int64_t>(level.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                expanded[i] = lp.expand(pairs[i].first, pairs[i].second);
            } catch (...) {
#pragma omp critical
                if (!failure) { failure = std::current_exception(); }
            }
        }
        if (failure) { std::rethrow_exception(failure); }

        std::vector<State> next;
        for (std::size_t i = 0; i < level.size(); ++i) { lp.commit(level[i], expanded[i], next); }
        level = std::move(next);
    }
    return lp.take();
}

Sfa product_image(const Sft& t, const Sfa& a, const Limits& limits) {
    return eliminate_epsilon(product_loop(t, a, limits).automaton);
}

ProductAutomaton trim(const ProductAutomaton& p) {
    std::vector<State> kept;
    ProductAutomaton out;
    out.automaton = trim(p.automaton, &kept);
    for (State old : kept) {
        auto [t, a] = p.pairs.pair_of(old);
        out.pairs.insert(t, a);
    }
    return out;
}

namespace {

using PairKey = std::pair<State, State>;

struct PairView {
    std::set<PairKey> states;
    std::set<std::tuple<PairKey, IntervalList, PairKey>> edges;
    std::set<std::pair<PairKey, PairKey>> epsilons;
    std::set<PairKey> initial;
    std::set<PairKey> accepting;

    friend bool operator==(const PairView&, const PairView&) = default;
};

PairView view(const ProductAutomaton& p) {
    PairView v;
    const EpsilonSfa& e = p.automaton;
    for (State q = 0; q < e.num_states(); ++q) {
        PairKey k = p.pairs.pair_of(q);
        v.states.insert(k);
        for (const Edge& edge : e.out(q)) { v.edges.emplace(k, edge.label, p.pairs.pair_of(edge.dst)); }
        for (State r : e.eps_out(q)) { v.epsilons.emplace(k, p.pairs.pair_of(r)); }
    }
    for (State q : e.initial()) { v.initial.insert(p.pairs.pair_of(q)); }
    for (State q : e.accepting()) { v.accepting.insert(p.pairs.pair_of(q)); }
    return v;
}

} // namespace

bool isomorphic(const ProductAutomaton& x, const ProductAutomaton& y) {
    if (x.automaton.num_states() != y.automaton.num_states()) { return false; }
    return view(x) == view(y);
}

} // namespace symauto
