#include "monoreg/automata.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

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

void require_string_over_inputs(const Nfa& a, const InputString& alpha) {
    for (const Symbol& sym : alpha) {
        for (const NeuronId& u : sym.members()) {
            if (!a.inputs.count(u))
                throw InputDomainError("symbol " + symbol_str(sym) +
                                       " is not over the automaton's input set");
        }
    }
}

// Backward closure: states from which some accepting state is reachable
// (accepting states themselves included).
std::set<StateId> coaccessible_states(const Nfa& a) {
    std::set<StateId> result = a.accepting;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Transition& t : a.transitions) {
            if (result.count(t.to) && !result.count(t.from))
                changed = result.insert(t.from).second;
        }
    }
    return result;
}

} // namespace

std::vector<std::string> automaton_violations(const Nfa& a) {
    std::vector<std::string> out;
    for (const StateId& q : a.states) {
        if (!is_valid_neuron_id(q))
            out.push_back("malformed state token \"" + q + "\"");
    }
    for (const NeuronId& u : a.inputs) {
        if (!is_valid_neuron_id(u))
            out.push_back("malformed input token \"" + u + "\"");
    }
    if (!a.states.count(a.start))
        out.push_back("start state \"" + a.start + "\" is not a state");
    for (const StateId& q : a.accepting) {
        if (!a.states.count(q))
            out.push_back("accepting state \"" + q + "\" is not a state");
    }
    for (const Transition& t : a.transitions) {
        if (!a.states.count(t.from))
            out.push_back("transition from unknown state \"" + t.from + "\"");
        if (!a.states.count(t.to))
            out.push_back("transition to unknown state \"" + t.to + "\"");
        for (const NeuronId& u : t.symbol.members()) {
            if (!a.inputs.count(u))
                out.push_back("transition symbol " + symbol_str(t.symbol) +
                              " uses unknown input \"" + u + "\"");
        }
    }
    return out;
}

void check_automaton(const Nfa& a) {
    const auto violations = automaton_violations(a);
    if (!violations.empty())
        throw ValidationError("invalid automaton: " + join(violations, "; "));
}

std::vector<std::set<StateId>> run_parallel(const Nfa& a, const InputString& alpha) {
    require_string_over_inputs(a, alpha);
    std::vector<std::set<StateId>> sets;
    sets.reserve(alpha.size() + 1);
    sets.push_back({a.start});
    for (const Symbol& sym : alpha) {
        std::set<StateId> next;
        for (const Transition& t : a.transitions) {
            if (t.symbol == sym && sets.back().count(t.from))
                next.insert(t.to);
        }
        sets.push_back(std::move(next));
    }
    return sets;
}

bool accepts(const Nfa& a, const InputString& alpha) {
    const auto sets = run_parallel(a, alpha);
    return std::any_of(sets.back().begin(), sets.back().end(),
                       [&](const StateId& q) { return a.accepting.count(q) > 0; });
}

std::set<StateId> reachable_states(const Nfa& a) {
    std::set<StateId> seen{a.start};
    std::deque<StateId> queue{a.start};
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (const Transition& t : a.transitions) {
            if (t.from == q && seen.insert(t.to).second)
                queue.push_back(t.to);
        }
    }
    return seen;
}

bool is_founded(const Nfa& a) {
    return !foundedness_witness(a).has_value();
}

std::optional<InputString> foundedness_witness(const Nfa& a) {
    if (a.accepting.count(a.start))
        return InputString{};
    const auto useful = coaccessible_states(a);
    // Shortest path to acceptance from any state entered on the empty symbol
    // from start, found by breadth-first search.
    std::map<StateId, std::pair<StateId, Symbol>> parent; // state -> (prev, symbol read)
    std::deque<StateId> queue;
    for (const Transition& t : a.transitions) {
        if (t.from == a.start && t.symbol.empty() && useful.count(t.to) &&
            !parent.count(t.to)) {
            parent.emplace(t.to, std::make_pair(StateId{}, Symbol{}));
            queue.push_back(t.to);
        }
    }
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        if (a.accepting.count(q)) {
            InputString witness;
            for (StateId at = q; !at.empty() && parent.count(at);) {
                const auto& [prev, sym] = parent.at(at);
                witness.push_back(sym);
                at = prev;
            }
            std::reverse(witness.begin(), witness.end());
            return witness; // starts with the empty symbol
        }
        for (const Transition& t : a.transitions) {
            if (t.from == q && useful.count(t.to) && !parent.count(t.to)) {
                parent.emplace(t.to, std::make_pair(q, t.symbol));
                queue.push_back(t.to);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::string> clean_violations(const Nfa& a) {
    std::vector<std::string> out;
    for (const Transition& t : a.transitions) {
        if (t.from == t.to)
            out.push_back("self-loop on \"" + t.from + "\" reading " + symbol_str(t.symbol));
        if (t.from == a.start && t.symbol.empty())
            out.push_back("transition from start on the empty symbol to \"" + t.to + "\"");
    }
    const auto reachable = reachable_states(a);
    for (const StateId& q : a.states) {
        if (!reachable.count(q))
            out.push_back("unreachable state \"" + q + "\"");
    }
    return out;
}

bool is_clean(const Nfa& a) {
    return clean_violations(a).empty();
}

namespace {

StateId fresh_copy_name(const StateId& q, const std::set<StateId>& taken) {
    StateId name = q + "'";
    while (taken.count(name))
        name += "'";
    return name;
}

} // namespace

Nfa remove_self_loops(const Nfa& a, CleanReport* report) {
    std::set<StateId> looping;
    for (const Transition& t : a.transitions) {
        if (t.from == t.to)
            looping.insert(t.from);
    }

    std::map<StateId, StateId> copy;
    std::set<StateId> taken = a.states;
    for (const StateId& q : looping) {
        copy[q] = fresh_copy_name(q, taken);
        taken.insert(copy[q]);
    }

    Nfa out;
    out.inputs = a.inputs;
    out.start = a.start;
    out.states = taken;
    out.accepting = a.accepting;
    for (const StateId& q : looping) {
        if (a.accepting.count(q))
            out.accepting.insert(copy.at(q));
    }
    for (const Transition& t : a.transitions) {
        if (t.from == t.to) {
            // The loop now lands on the copy instead of the state itself.
            out.transitions.insert({t.from, t.symbol, copy.at(t.from)});
            if (report)
                ++report->removed_self_loops;
        } else {
            out.transitions.insert(t);
        }
        if (looping.count(t.from)) {
            // The copy inherits every outgoing transition unchanged; a loop
            // target stays the original state, so the pair stays loop-free.
            out.transitions.insert({copy.at(t.from), t.symbol, t.to});
        }
    }
    if (report)
        report->duplicated_states = copy;
    return out;
}

Nfa restrict_founded_start(const Nfa& a, CleanReport* report) {
    Nfa out = a;
    out.transitions.clear();
    for (const Transition& t : a.transitions) {
        if (t.from == a.start && t.symbol.empty()) {
            if (report)
                report->blocked_empty_from_start = true;
            continue;
        }
        out.transitions.insert(t);
    }
    return out;
}

Nfa prune_unreachable(const Nfa& a, CleanReport* report) {
    const auto reachable = reachable_states(a);
    Nfa out;
    out.inputs = a.inputs;
    out.start = a.start;
    for (const StateId& q : a.states) {
        if (reachable.count(q))
            out.states.insert(q);
        else if (report)
            report->pruned_states.insert(q);
    }
    for (const StateId& q : a.accepting) {
        if (reachable.count(q))
            out.accepting.insert(q);
    }
    for (const Transition& t : a.transitions) {
        if (reachable.count(t.from) && reachable.count(t.to))
            out.transitions.insert(t);
    }
    return out;
}

std::pair<Nfa, CleanReport> clean(const Nfa& a) {
    check_automaton(a);
    if (const auto witness = foundedness_witness(a)) {
        throw ValidationError("automaton is not founded: it accepts \"" +
                              string_str(*witness) + "\"");
    }
    CleanReport report;
    Nfa out = remove_self_loops(a, &report);
    out = restrict_founded_start(out, &report);
    out = prune_unreachable(out, &report);
    return {std::move(out), std::move(report)};
}

Convergence is_converging(const Nfa& a) {
    const auto violations = clean_violations(a);
    if (!violations.empty())
        throw ValidationError("is_converging requires a clean automaton: " +
                              join(violations, "; "));
    std::set<Symbol> terminal;
    for (const Transition& t : a.transitions) {
        if (a.accepting.count(t.to))
            terminal.insert(t.symbol);
    }
    Convergence result;
    if (terminal.empty()) {
        result.kind = Convergence::Kind::vacuous;
    } else if (terminal.size() == 1) {
        result.kind = Convergence::Kind::converging;
        result.terminal = *terminal.begin();
    } else {
        result.kind = Convergence::Kind::not_converging;
        auto it = terminal.begin();
        result.witness_a = *it++;
        result.witness_b = *it;
    }
    return result;
}

Nfa single_string_automaton(const InputString& s, const std::set<NeuronId>& inputs) {
    if (s.empty())
        throw ValidationError("single-string language needs a nonempty string");
    if (s.front().empty())
        throw ValidationError("single-string language needs a nonempty first symbol");
    Nfa out;
    out.inputs = inputs;
    for (const Symbol& sym : s) {
        for (const NeuronId& u : sym.members()) {
            if (!inputs.count(u))
                throw ValidationError("string symbol " + symbol_str(sym) +
                                      " is not over the input set");
        }
    }
    const auto name = [](std::size_t i) { return "s" + std::to_string(i); };
    out.start = name(0);
    out.states.insert(out.start);
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.states.insert(name(i + 1));
        out.transitions.insert({name(i), s[i], name(i + 1)});
    }
    out.accepting.insert(name(s.size()));
    return out;
}

} // namespace monoreg
