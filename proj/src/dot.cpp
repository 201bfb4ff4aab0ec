#include "monoreg/dot.hpp"

#include "monoreg/rational.hpp"

namespace monoreg {

namespace {

std::string quoted(const std::string& id) {
    std::string out = "\"";
    for (const char c : id) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string automaton_to_dot(const Nfa& a) {
    std::string out = "digraph automaton {\n  rankdir=LR;\n";
    out += "  __start [shape=none, label=\"\"];\n";
    for (const StateId& q : a.states) {
        out += "  " + quoted(q) + " [shape=" +
               (a.accepting.count(q) ? "doublecircle" : "circle") + "];\n";
    }
    out += "  __start -> " + quoted(a.start) + ";\n";
    for (const Transition& t : a.transitions) {
        out += "  " + quoted(t.from) + " -> " + quoted(t.to) + " [label=" +
               quoted(symbol_str(t.symbol)) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string network_to_dot(const PositiveNetwork& net) {
    std::string out = "digraph network {\n  rankdir=LR;\n";
    for (const NeuronId& u : net.inputs)
        out += "  " + quoted(u) + " [shape=box];\n";
    for (const NeuronId& u : net.outputs)
        out += "  " + quoted(u) + " [shape=ellipse];\n";
    for (const NeuronId& u : net.auxiliary)
        out += "  " + quoted(u) + " [shape=ellipse];\n";
    for (const auto& [edge, w] : net.weights) {
        out += "  " + quoted(edge.first) + " -> " + quoted(edge.second) + " [label=" +
               quoted(rational_str(w)) + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace monoreg
