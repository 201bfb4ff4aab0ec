#include "monoreg/compiler.hpp"

#include <cassert>

namespace monoreg {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string joined_members(const Symbol& sym) {
    std::string out;
    for (std::size_t i = 0; i < sym.members().size(); ++i) {
        if (i > 0)
            out += ",";
        out += sym.members()[i];
    }
    return out;
}

void require_clean_founded(const NeuronId& output, const Nfa& a,
                           const std::set<NeuronId>& inputs) {
    check_automaton(a);
    for (const NeuronId& u : a.inputs) {
        if (!inputs.count(u))
            throw ValidationError("automaton for \"" + output + "\" uses input \"" + u +
                                  "\" outside the network input set");
    }
    const auto violations = clean_violations(a);
    if (!violations.empty())
        throw ValidationError("automaton for \"" + output + "\" is not clean: " +
                              join(violations, "; "));
    if (const auto witness = foundedness_witness(a))
        throw ValidationError("automaton for \"" + output + "\" is not founded: it accepts \"" +
                              string_str(*witness) + "\"");
}

void add_aux(PositiveNetwork& net, const NeuronId& id) {
    if (net.inputs.count(id) || net.outputs.count(id) || !net.auxiliary.insert(id).second)
        throw ValidationError("generated neuron name \"" + id + "\" collides");
}

void set_weight(PositiveNetwork& net, const NeuronId& from, const NeuronId& to,
                const Rational& w) {
    [[maybe_unused]] const bool inserted = net.weights.emplace(std::make_pair(from, to), w).second;
    assert(inserted && "duplicate weight assignment");
}

PositiveNetwork new_network(const BehaviorAutomata& behavior, const std::set<NeuronId>& inputs) {
    PositiveNetwork net;
    net.inputs = inputs;
    for (const auto& [output, automaton] : behavior) {
        if (!is_valid_neuron_id(output))
            throw ValidationError("malformed output token \"" + output + "\"");
        if (inputs.count(output))
            throw ValidationError("output \"" + output + "\" is also an input");
        net.outputs.insert(output);
        require_clean_founded(output, automaton, inputs);
    }
    return net;
}

// Wires the pair neurons of one output's automaton: symbol detection for
// triggers, or/and over context and symbol for the rest.  The caller decides
// what feeds the output neuron.  When `symbol_source` is set, pair neurons
// read that neuron (the output's preprocessor for their symbol) instead of
// the symbol members, with weights adjusted per its rules.
struct PairWiring {
    bool through_preprocessors = false;
};

std::map<StateSymbolPair, NeuronId>
wire_pairs(PositiveNetwork& net, const NeuronId& output, const Nfa& a, const PairSet& ps,
           const PairWiring& wiring) {
    std::map<StateSymbolPair, NeuronId> name;
    for (const StateSymbolPair& p : ps.pairs) {
        name[p] = pair_neuron_name(output, p);
        add_aux(net, name[p]);
    }

    std::map<Symbol, NeuronId> pre;
    if (wiring.through_preprocessors) {
        for (const StateSymbolPair& p : ps.pairs) {
            if (p.symbol.empty() || pre.count(p.symbol))
                continue;
            const NeuronId id = preprocessor_neuron_name(output, p.symbol);
            add_aux(net, id);
            pre[p.symbol] = id;
            for (const NeuronId& u : p.symbol.members())
                set_weight(net, u, id, rational(1, static_cast<std::int64_t>(p.symbol.size())));
        }
    }

    for (const StateSymbolPair& p : ps.pairs) {
        if (ps.triggers.count(p)) {
            // Reachable straight from the start state: fires on the symbol
            // alone.  Clean automata never trigger on the empty symbol.
            assert(!p.symbol.empty());
            if (wiring.through_preprocessors) {
                set_weight(net, pre.at(p.symbol), name[p], rational(1, 1));
            } else {
                for (const NeuronId& u : p.symbol.members())
                    set_weight(net, u, name[p],
                               rational(1, static_cast<std::int64_t>(p.symbol.size())));
            }
            continue;
        }
        const auto& context = ps.contexts.at(p);
        assert(!context.empty() && "non-trigger pair of a clean automaton has context");
        const std::size_t m = context.size();
        if (p.symbol.empty()) {
            // Nothing to read from the inputs: any context pair suffices.
            for (const StateSymbolPair& c : context)
                set_weight(net, name.at(c), name[p], rational(1, 1));
        } else if (wiring.through_preprocessors) {
            // One alternative (the preprocessor) plus m context choices.
            const std::int64_t den = static_cast<std::int64_t>(m) + 1;
            set_weight(net, pre.at(p.symbol), name[p],
                       rational(static_cast<std::int64_t>(m), den));
            for (const StateSymbolPair& c : context)
                set_weight(net, name.at(c), name[p], rational(1, den));
        } else {
            const std::size_t n = p.symbol.size();
            for (const StateSymbolPair& c : context)
                set_weight(net, name.at(c), name[p], w_or(m, n));
            for (const NeuronId& u : p.symbol.members())
                set_weight(net, u, name[p], w_and(m, n));
        }
    }

    (void)a;
    return name;
}

} // namespace

PairSet pair_set(const Nfa& a) {
    const auto violations = clean_violations(a);
    if (!violations.empty())
        throw ValidationError("pair_set requires a clean automaton: " + join(violations, "; "));

    PairSet ps;
    for (const Transition& t : a.transitions) {
        if (t.to != a.start)
            ps.pairs.insert({t.to, t.symbol});
        if (t.from == a.start && t.to != a.start)
            ps.triggers.insert({t.to, t.symbol});
    }
    for (const StateSymbolPair& p : ps.pairs) {
        auto& context = ps.contexts[p];
        for (const Transition& t : a.transitions) {
            if (t.to != p.state || t.symbol != p.symbol || t.from == a.start)
                continue;
            // Any pair that puts the automaton in t.from can precede p.
            for (const StateSymbolPair& c : ps.pairs) {
                if (c.state == t.from)
                    context.insert(c);
            }
        }
    }
    return ps;
}

Rational w_or(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1)
        throw InputDomainError("w_or needs m >= 1 and n >= 1");
    return rational(1, static_cast<std::int64_t>(n * m + 1));
}

Rational w_and(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1)
        throw InputDomainError("w_and needs m >= 1 and n >= 1");
    return rational(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n * m + 1));
}

bool claim1_check(std::size_t m, std::size_t n) {
    const Rational or_w = w_or(m, n);
    const Rational and_w = w_and(m, n);
    const Rational mq(static_cast<long>(m)), nq(static_cast<long>(n));
    return mq * or_w + (nq - 1) * and_w < 1 && or_w + nq * and_w >= 1 && nq * and_w < 1;
}

std::string construction_str(Construction c) {
    switch (c) {
    case Construction::delay1: return "delay1";
    case Construction::preprocessor: return "preprocessor";
    case Construction::zero_delay_converging: return "zero_delay_converging";
    case Construction::single_string_chain: return "single_string_chain";
    }
    return "";
}

std::string pair_neuron_name(const NeuronId& output, const StateSymbolPair& p) {
    return output + ":(" + p.state + "|" + joined_members(p.symbol) + ")";
}

std::string preprocessor_neuron_name(const NeuronId& output, const Symbol& sym) {
    return output + ":pre[" + joined_members(sym) + "]";
}

std::string chain_neuron_name(const NeuronId& output, std::size_t index) {
    return output + ":y" + std::to_string(index);
}

CompilationResult compile_delay1(const BehaviorAutomata& behavior,
                                 const std::set<NeuronId>& inputs) {
    CompilationResult result;
    result.network = new_network(behavior, inputs);
    result.delay = 1;
    result.construction = Construction::delay1;
    for (const auto& [output, automaton] : behavior) {
        const PairSet ps = pair_set(automaton);
        const auto name = wire_pairs(result.network, output, automaton, ps, {});
        for (const StateSymbolPair& p : ps.pairs) {
            if (automaton.accepting.count(p.state))
                set_weight(result.network, name.at(p), output, rational(1, 1));
        }
    }
    result.aux_count = result.network.auxiliary.size();
    return result;
}

CompilationResult compile_preprocessor(const BehaviorAutomata& behavior,
                                       const std::set<NeuronId>& inputs) {
    CompilationResult result;
    result.network = new_network(behavior, inputs);
    result.delay = 2;
    result.construction = Construction::preprocessor;
    for (const auto& [output, automaton] : behavior) {
        const PairSet ps = pair_set(automaton);
        const auto name =
            wire_pairs(result.network, output, automaton, ps, {.through_preprocessors = true});
        for (const StateSymbolPair& p : ps.pairs) {
            if (automaton.accepting.count(p.state))
                set_weight(result.network, name.at(p), output, rational(1, 1));
        }
    }
    result.aux_count = result.network.auxiliary.size();
    return result;
}

CompilationResult compile_zero_delay_converging(const BehaviorAutomata& behavior,
                                                const std::set<NeuronId>& inputs) {
    CompilationResult result;
    result.network = new_network(behavior, inputs);
    result.delay = 0;
    result.construction = Construction::zero_delay_converging;
    for (const auto& [output, automaton] : behavior) {
        const Convergence conv = is_converging(automaton);
        if (conv.kind == Convergence::Kind::not_converging)
            throw PreconditionError(
                "language for \"" + output + "\" is not converging: accepted strings end with " +
                symbol_str(conv.witness_a) + " and with " + symbol_str(conv.witness_b));

        const PairSet ps = pair_set(automaton);
        const auto name = wire_pairs(result.network, output, automaton, ps, {});
        if (conv.kind == Convergence::Kind::vacuous)
            continue; // empty language: the output neuron never fires

        const Symbol& terminal = conv.terminal;
        // States that accept after one more read of the terminal symbol.
        std::set<StateId> pivotal;
        for (const Transition& t : automaton.transitions) {
            if (t.symbol == terminal && automaton.accepting.count(t.to))
                pivotal.insert(t.from);
        }
        if (pivotal.count(automaton.start)) {
            // The terminal symbol alone is accepted, so by monotonicity the
            // behavior collapses to "last symbol covers the terminal":
            // detect it directly on the output neuron.
            assert(!terminal.empty());
            for (const NeuronId& z : terminal.members())
                set_weight(result.network, z, output,
                           rational(1, static_cast<std::int64_t>(terminal.size())));
            continue;
        }
        std::set<StateSymbolPair> candidates;
        for (const StateSymbolPair& p : ps.pairs) {
            if (pivotal.count(p.state))
                candidates.insert(p);
        }
        assert(!candidates.empty() && "nonempty converging language has candidate pairs");
        if (terminal.empty()) {
            for (const StateSymbolPair& c : candidates)
                set_weight(result.network, name.at(c), output, rational(1, 1));
        } else {
            const std::size_t m = candidates.size();
            const std::size_t n = terminal.size();
            for (const StateSymbolPair& c : candidates)
                set_weight(result.network, name.at(c), output, w_or(m, n));
            for (const NeuronId& z : terminal.members())
                set_weight(result.network, z, output, w_and(m, n));
        }
    }
    result.aux_count = result.network.auxiliary.size();
    return result;
}

CompilationResult compile_single_string(const std::map<NeuronId, InputString>& behavior,
                                        const std::set<NeuronId>& inputs) {
    CompilationResult result;
    result.network.inputs = inputs;
    result.delay = 0;
    result.construction = Construction::single_string_chain;
    PositiveNetwork& net = result.network;
    for (const auto& [output, s] : behavior) {
        if (!is_valid_neuron_id(output))
            throw ValidationError("malformed output token \"" + output + "\"");
        if (inputs.count(output))
            throw ValidationError("output \"" + output + "\" is also an input");
        net.outputs.insert(output);
        if (s.empty())
            throw ValidationError("string for \"" + output + "\" is empty");
        if (s.front().empty())
            throw ValidationError("string for \"" + output + "\" starts with the empty symbol");
        for (const Symbol& sym : s) {
            for (const NeuronId& u : sym.members()) {
                if (!inputs.count(u))
                    throw ValidationError("string for \"" + output + "\" uses input \"" + u +
                                          "\" outside the network input set");
            }
        }

        const std::size_t n = s.size();
        if (n == 1) {
            for (const NeuronId& u : s[0].members())
                set_weight(net, u, output, rational(1, static_cast<std::int64_t>(s[0].size())));
            continue;
        }
        // Chain neuron i fires once the first i symbols have just been seen
        // in order; each link needs its predecessor plus all of its symbol.
        std::vector<NeuronId> link(n); // link[i] tracks the first i symbols; link[n-1] feeds x
        for (std::size_t i = 1; i < n; ++i) {
            link[i] = chain_neuron_name(output, i);
            add_aux(net, link[i]);
        }
        for (const NeuronId& u : s[0].members())
            set_weight(net, u, link[1], rational(1, static_cast<std::int64_t>(s[0].size())));
        for (std::size_t i = 2; i <= n; ++i) {
            const Symbol& sym = s[i - 1];
            const NeuronId& target = i == n ? output : link[i];
            const Rational w = rational(1, static_cast<std::int64_t>(sym.size()) + 1);
            set_weight(net, link[i - 1], target, w);
            for (const NeuronId& u : sym.members())
                set_weight(net, u, target, w);
        }
    }
    result.aux_count = net.auxiliary.size();
    return result;
}

} // namespace monoreg
