#include "symauto/automata.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "symauto/error.hh"

namespace symauto {

// ---------------------------------------------------------------------------
// Sfa / EpsilonSfa

State Sfa::add_state() {
    out_.emplace_back();
    return static_cast<State>(out_.size() - 1);
}

void Sfa::check_state(State q) const {
    if (q >= out_.size()) {
        throw ValidationError("state " + std::to_string(q) + " out of range (" +
                              std::to_string(out_.size()) + " states)");
    }
}

void Sfa::add_transition(State src, IntervalList label, State dst) {
    check_state(src);
    check_state(dst);
    if (label.empty()) { throw ValidationError("transition label must be non-empty"); }
    auto& edges = out_[src];
    for (const Edge& e : edges) {
        if (e.dst == dst && e.label == label) { return; }
    }
    edges.push_back({std::move(label), dst});
}

void Sfa::merge_transition(State src, const IntervalList& label, State dst) {
    check_state(src);
    check_state(dst);
    if (label.empty()) { throw ValidationError("transition label must be non-empty"); }
    for (Edge& e : out_[src]) {
        if (e.dst == dst) {
            e.label = unite(e.label, label);
            return;
        }
    }
    out_[src].push_back({label, dst});
}

void Sfa::set_initial(State q) {
    check_state(q);
    initial_.insert(q);
}

void Sfa::set_accepting(State q, bool accepting) {
    check_state(q);
    if (accepting) {
        accepting_.insert(q);
    } else {
        accepting_.erase(q);
    }
}

std::size_t Sfa::num_transitions() const {
    std::size_t n = 0;
    for (const auto& edges : out_) { n += edges.size(); }
    return n;
}

std::vector<Transition> Sfa::transitions() const {
    std::vector<Transition> out;
    out.reserve(num_transitions());
    for (State q = 0; q < out_.size(); ++q) {
        for (const Edge& e : out_[q]) { out.push_back({q, e.label, e.dst}); }
    }
    std::sort(out.begin(), out.end());
    return out;
}

State EpsilonSfa::add_state() {
    eps_.emplace_back();
    return labeled_.add_state();
}

void EpsilonSfa::add_epsilon(State src, State dst) {
    if (src >= num_states() || dst >= num_states()) {
        throw ValidationError("epsilon edge endpoint out of range");
    }
    eps_[src].insert(dst);
}

std::size_t EpsilonSfa::num_epsilons() const {
    std::size_t n = 0;
    for (const auto& s : eps_) { n += s.size(); }
    return n;
}

// ---------------------------------------------------------------------------
// Language membership and epsilon elimination

bool accepts(const Sfa& a, const Word& w) {
    std::set<State> current = a.initial();
    for (CodePoint c : w) {
        std::set<State> next;
        for (State q : current) {
            for (const Edge& e : a.out(q)) {
                if (contains(e.label, c)) { next.insert(e.dst); }
            }
        }
        if (next.empty()) { return false; }
        current = std::move(next);
    }
    return std::any_of(current.begin(), current.end(),
                       [&a](State q) { return a.is_accepting(q); });
}

std::set<State> epsilon_closure(const EpsilonSfa& e, State q) {
    std::set<State> seen{q};
    std::vector<State> stack{q};
    while (!stack.empty()) {
        State p = stack.back();
        stack.pop_back();
        for (State r : e.eps_out(p)) {
            if (seen.insert(r).second) { stack.push_back(r); }
        }
    }
    return seen;
}

Sfa eliminate_epsilon(const EpsilonSfa& e) {
    Sfa out(e.num_states());
    for (State q = 0; q < e.num_states(); ++q) {
        for (State p : epsilon_closure(e, q)) {
            if (e.is_accepting(p)) { out.set_accepting(q); }
            for (const Edge& edge : e.out(p)) { out.merge_transition(q, edge.label, edge.dst); }
        }
    }
    for (State q : e.initial()) { out.set_initial(q); }
    return trim(out);
}

// ---------------------------------------------------------------------------
// Basic languages

Sfa literal(const Word& w) {
    Sfa a(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        a.add_transition(static_cast<State>(i), IntervalList::single(w[i]), static_cast<State>(i + 1));
    }
    a.set_initial(0);
    a.set_accepting(static_cast<State>(w.size()));
    return a;
}

Sfa universal(const IntervalList& letters) {
    Sfa a(1);
    if (letters.nonempty()) { a.add_transition(0, letters, 0); }
    a.set_initial(0);
    a.set_accepting(0);
    return a;
}

Sfa empty_language() { return Sfa{}; }

Sfa words_up_to(std::size_t n) {
    Sfa a(n + 1);
    for (State q = 0; q <= n; ++q) {
        a.set_accepting(q);
        if (q < n) { a.add_transition(q, IntervalList::full(), q + 1); }
    }
    a.set_initial(0);
    return a;
}

// ---------------------------------------------------------------------------
// Boolean operations

Sfa intersect(const Sfa& a, const Sfa& b, const Limits& limits) {
    Sfa out;
    std::unordered_map<std::uint64_t, State> index;
    std::deque<std::pair<State, State>> work;
    auto key = [](State p, State q) { return (std::uint64_t{p} << 32) | q; };
    auto get = [&](State p, State q) {
        auto [it, inserted] = index.try_emplace(key(p, q), 0);
        if (inserted) {
            if (index.size() > limits.max_states) {
                throw ResourceError("intersection exceeds the state ceiling of " +
                                    std::to_string(limits.max_states));
            }
            it->second = out.add_state();
            if (a.is_accepting(p) && b.is_accepting(q)) { out.set_accepting(it->second); }
            work.emplace_back(p, q);
        }
        return it->second;
    };
    for (State p : a.initial()) {
        for (State q : b.initial()) { out.set_initial(get(p, q)); }
    }
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop_front();
        State src = index.at(key(p, q));
        for (const Edge& ea : a.out(p)) {
            for (const Edge& eb : b.out(q)) {
                IntervalList label = intersect(ea.label, eb.label);
                if (label.empty()) { continue; }
                State dst = get(ea.dst, eb.dst);
                out.merge_transition(src, label, dst);
            }
        }
    }
    return out;
}

namespace {

/// Copies `a` into `out` at offset `base` (states must already exist).
template <typename Target>
void copy_into(Target& out, const Sfa& a, State base) {
    for (State q = 0; q < a.num_states(); ++q) {
        for (const Edge& e : a.out(q)) { out.add_transition(base + q, e.label, base + e.dst); }
    }
}

} // namespace

Sfa unite(const Sfa& a, const Sfa& b) {
    Sfa out(a.num_states() + b.num_states());
    State base = static_cast<State>(a.num_states());
    copy_into(out, a, 0);
    copy_into(out, b, base);
    for (State q : a.initial()) { out.set_initial(q); }
    for (State q : a.accepting()) { out.set_accepting(q); }
    for (State q : b.initial()) { out.set_initial(base + q); }
    for (State q : b.accepting()) { out.set_accepting(base + q); }
    return out;
}

Sfa concatenate(const Sfa& a, const Sfa& b) {
    EpsilonSfa e(a.num_states() + b.num_states());
    State base = static_cast<State>(a.num_states());
    copy_into(e, a, 0);
    copy_into(e, b, base);
    for (State q : a.initial()) { e.set_initial(q); }
    for (State q : b.accepting()) { e.set_accepting(base + q); }
    for (State f : a.accepting()) {
        for (State i : b.initial()) { e.add_epsilon(f, base + i); }
    }
    return eliminate_epsilon(e);
}

Sfa determinize(const Sfa& a, const Limits& limits) {
    Sfa src = trim(a);
    Sfa out;
    std::map<std::set<State>, State> index;
    std::deque<std::set<State>> work;
    auto get = [&](const std::set<State>& subset) {
        auto [it, inserted] = index.try_emplace(subset, 0);
        if (inserted) {
            if (index.size() > limits.max_states) {
                throw ResourceError("determinization exceeds the state ceiling of " +
                                    std::to_string(limits.max_states));
            }
            it->second = out.add_state();
            if (std::any_of(subset.begin(), subset.end(),
                            [&src](State q) { return src.is_accepting(q); })) {
                out.set_accepting(it->second);
            }
            work.push_back(subset);
        }
        return it->second;
    };
    out.set_initial(get(src.initial()));

    while (!work.empty()) {
        std::set<State> subset = std::move(work.front());
        work.pop_front();
        State from = index.at(subset);

        // Refine Sigma into minterms of the outgoing labels, tracking which
        // targets each minterm reaches.
        std::vector<std::pair<IntervalList, std::set<State>>> parts{{IntervalList::full(), {}}};
        for (State q : subset) {
            for (const Edge& e : src.out(q)) {
                std::vector<std::pair<IntervalList, std::set<State>>> next;
                next.reserve(parts.size() * 2);
                for (auto& [part, targets] : parts) {
                    IntervalList inside = intersect(part, e.label);
                    if (inside.empty()) {
                        next.emplace_back(std::move(part), std::move(targets));
                        continue;
                    }
                    IntervalList outside = difference(part, e.label);
                    if (outside.nonempty()) { next.emplace_back(std::move(outside), targets); }
                    targets.insert(e.dst);
                    next.emplace_back(std::move(inside), std::move(targets));
                }
                parts = std::move(next);
            }
        }
        std::map<std::set<State>, IntervalList> by_target;
        for (auto& [part, targets] : parts) {
            auto& label = by_target[targets];
            label = unite(label, part);
        }
        for (const auto& [targets, label] : by_target) {
            State to = get(targets);
            out.add_transition(from, label, to);
        }
    }
    return out;
}

Sfa complement(const Sfa& a, const Limits& limits) {
    Sfa d = determinize(a, limits);
    for (State q = 0; q < d.num_states(); ++q) { d.set_accepting(q, !d.is_accepting(q)); }
    return d;
}

// ---------------------------------------------------------------------------
// Reachability

namespace {

std::vector<bool> forward_reachable(const Sfa& a, const std::vector<std::set<State>>* eps) {
    std::vector<bool> seen(a.num_states(), false);
    std::vector<State> stack(a.initial().begin(), a.initial().end());
    for (State q : stack) { seen[q] = true; }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        auto visit = [&](State r) {
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
        };
        for (const Edge& e : a.out(q)) { visit(e.dst); }
        if (eps != nullptr) {
            for (State r : (*eps)[q]) { visit(r); }
        }
    }
    return seen;
}

std::vector<bool> backward_reachable(const Sfa& a, const std::vector<std::set<State>>* eps) {
    std::vector<std::vector<State>> rev(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) {
        for (const Edge& e : a.out(q)) { rev[e.dst].push_back(q); }
        if (eps != nullptr) {
            for (State r : (*eps)[q]) { rev[r].push_back(q); }
        }
    }
    std::vector<bool> seen(a.num_states(), false);
    std::vector<State> stack(a.accepting().begin(), a.accepting().end());
    for (State q : stack) { seen[q] = true; }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : rev[q]) {
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
        }
    }
    return seen;
}

/// New id per old state, or nullopt for dropped states.
std::vector<std::optional<State>> useful_renaming(const Sfa& a,
                                                  const std::vector<std::set<State>>* eps,
                                                  std::vector<State>* kept) {
    auto fwd = forward_reachable(a, eps);
    auto bwd = backward_reachable(a, eps);
    std::vector<std::optional<State>> rename(a.num_states());
    State next = 0;
    for (State q = 0; q < a.num_states(); ++q) {
        if (fwd[q] && bwd[q]) {
            rename[q] = next++;
            if (kept != nullptr) { kept->push_back(q); }
        }
    }
    return rename;
}

template <typename Target>
void copy_renamed(Target& out, const Sfa& a, const std::vector<std::optional<State>>& rename) {
    for (State q = 0; q < a.num_states(); ++q) {
        if (!rename[q]) { continue; }
        for (const Edge& e : a.out(q)) {
            if (rename[e.dst]) { out.add_transition(*rename[q], e.label, *rename[e.dst]); }
        }
        if (a.initial().contains(q)) { out.set_initial(*rename[q]); }
        if (a.is_accepting(q)) { out.set_accepting(*rename[q]); }
    }
}

std::size_t count_renamed(const std::vector<std::optional<State>>& rename) {
    return static_cast<std::size_t>(
        std::count_if(rename.begin(), rename.end(), [](const auto& r) { return r.has_value(); }));
}

} // namespace

bool is_empty(const Sfa& a) {
    auto fwd = forward_reachable(a, nullptr);
    return std::none_of(a.accepting().begin(), a.accepting().end(),
                        [&fwd](State q) { return fwd[q]; });
}

Sfa trim(const Sfa& a) {
    auto rename = useful_renaming(a, nullptr, nullptr);
    Sfa out(count_renamed(rename));
    copy_renamed(out, a, rename);
    return out;
}

EpsilonSfa trim(const EpsilonSfa& e, std::vector<State>* kept) {
    std::vector<std::set<State>> eps(e.num_states());
    for (State q = 0; q < e.num_states(); ++q) { eps[q] = e.eps_out(q); }
    if (kept != nullptr) { kept->clear(); }
    auto rename = useful_renaming(e.labeled(), &eps, kept);
    EpsilonSfa out(count_renamed(rename));
    copy_renamed(out, e.labeled(), rename);
    for (State q = 0; q < e.num_states(); ++q) {
        if (!rename[q]) { continue; }
        for (State r : eps[q]) {
            if (rename[r]) { out.add_epsilon(*rename[q], *rename[r]); }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Predicates and witnesses

bool is_deterministic(const Sfa& a) {
    if (a.initial().size() != 1) { return false; }
    for (State q = 0; q < a.num_states(); ++q) {
        IntervalList seen;
        for (const Edge& e : a.out(q)) {
            if (intersect(seen, e.label).nonempty()) { return false; }
            seen = unite(seen, e.label);
        }
    }
    return true;
}

bool is_complete(const Sfa& a) {
    for (State q = 0; q < a.num_states(); ++q) {
        IntervalList covered;
        for (const Edge& e : a.out(q)) { covered = unite(covered, e.label); }
        if (covered != IntervalList::full()) { return false; }
    }
    return true;
}

std::optional<Word> shortest_word(const Sfa& a) {
    struct Parent {
        State from;
        CodePoint letter;
    };
    std::vector<std::optional<Parent>> parent(a.num_states());
    std::vector<bool> seen(a.num_states(), false);
    std::deque<State> queue;
    for (State q : a.initial()) {
        seen[q] = true;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        if (a.is_accepting(q)) {
            Word w;
            for (State s = q; parent[s]; s = parent[s]->from) { w.push_back(parent[s]->letter); }
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (const Edge& e : a.out(q)) {
            if (!seen[e.dst]) {
                seen[e.dst] = true;
                parent[e.dst] = Parent{q, e.label.min()};
                queue.push_back(e.dst);
            }
        }
    }
    return std::nullopt;
}

} // namespace symauto
