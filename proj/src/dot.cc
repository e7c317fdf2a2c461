#include "symauto/dot.hh"

#include <set>
#include <string>

namespace symauto {

namespace {

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') { out += '\\'; }
        out += c;
    }
    out += '"';
    return out;
}

void header(std::ostream& os, std::string_view name, std::size_t num_states,
            const std::set<State>& initial, const std::set<State>& accepting) {
    os << "digraph " << quoted(name) << " {\n  rankdir=LR;\n";
    for (State q = 0; q < num_states; ++q) {
        os << "  " << q << " [shape=" << (accepting.contains(q) ? "doublecircle" : "circle") << "];\n";
    }
    for (State q : initial) {
        os << "  init" << q << " [shape=point, style=invis];\n";
        os << "  init" << q << " -> " << q << ";\n";
    }
}

void labeled_edges(std::ostream& os, const Sfa& a) {
    for (const Transition& t : a.transitions()) {
        os << "  " << t.src << " -> " << t.dst << " [label=" << quoted(to_string(t.label)) << "];\n";
    }
}

} // namespace

void write_dot(std::ostream& os, const Sfa& a, std::string_view name) {
    header(os, name, a.num_states(), a.initial(), a.accepting());
    labeled_edges(os, a);
    os << "}\n";
}

void write_dot(std::ostream& os, const EpsilonSfa& e, std::string_view name) {
    header(os, name, e.num_states(), e.initial(), e.accepting());
    labeled_edges(os, e.labeled());
    for (State q = 0; q < e.num_states(); ++q) {
        for (State r : e.eps_out(q)) { os << "  " << q << " -> " << r << " [style=dashed];\n"; }
    }
    os << "}\n";
}

void write_dot(std::ostream& os, const Sft& t, std::string_view name) {
    header(os, name, t.num_states(), t.initial(), t.accepting());
    for (const SftTransition& tr : t.transitions()) {
        std::string input = tr.input ? to_string(*tr.input) : "eps";
        std::string fn = tr.fn < t.functions().size() ? to_string(t.function(tr.fn)) : "?";
        os << "  " << tr.src << " -> " << tr.dst << " [label=" << quoted(input + " / " + fn);
        if (!tr.input) { os << ", style=dashed"; }
        os << "];\n";
    }
    os << "}\n";
}

} // namespace symauto
