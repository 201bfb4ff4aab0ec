#include "monoreg/extractor.hpp"

#include <deque>

namespace monoreg {

namespace {

std::string subset_state_name(const NetworkEvaluator& eval,
                              const std::vector<std::uint8_t>& flags) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (!flags[i])
            continue;
        if (!first)
            name += ",";
        name += eval.neurons()[i];
        first = false;
    }
    name += "}";
    return name;
}

} // namespace

Nfa extract_automaton(const PositiveNetwork& net, const NeuronId& x,
                      std::size_t state_budget) {
    check_network(net);
    if (!net.outputs.count(x))
        throw InputDomainError("\"" + x + "\" is not an output neuron");
    const std::size_t non_inputs = net.outputs.size() + net.auxiliary.size();
    if (non_inputs >= 62 ||
        (std::size_t{1} << non_inputs) + 2 > state_budget)
        throw SizeError("extraction needs up to 2^" + std::to_string(non_inputs) +
                        " + 2 states, beyond the budget of " + std::to_string(state_budget));

    const NetworkEvaluator eval(net);
    const std::vector<Symbol> alphabet = powerset(net.inputs);
    std::vector<std::vector<std::uint8_t>> presented;
    presented.reserve(alphabet.size());
    for (const Symbol& sym : alphabet) {
        std::vector<std::uint8_t> flags(eval.inputs().size(), 0);
        for (const NeuronId& u : sym.members())
            flags[eval.input_index(u)] = 1;
        presented.push_back(std::move(flags));
    }

    const StateId start = "start";
    const StateId halt = "halt";
    Nfa out;
    out.inputs = net.inputs;
    out.start = start;
    out.states = {start, halt};

    const std::size_t x_index = eval.neuron_index(x);
    std::map<std::vector<std::uint8_t>, StateId> names;
    std::deque<std::vector<std::uint8_t>> queue;
    const auto state_of = [&](const std::vector<std::uint8_t>& flags) {
        const auto it = names.find(flags);
        if (it != names.end())
            return it->second;
        const StateId name = subset_state_name(eval, flags);
        names.emplace(flags, name);
        out.states.insert(name);
        if (flags[x_index])
            out.accepting.insert(name);
        queue.push_back(flags);
        return name;
    };

    // From the start state the empty symbol leads to the non-accepting sink
    // (founded languages have no strings starting empty), and every other
    // symbol to the activation set it produces from rest.
    std::vector<std::uint8_t> next;
    const std::vector<std::uint8_t> rest(eval.neurons().size(), 0);
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
        if (alphabet[s].empty()) {
            out.transitions.insert({start, alphabet[s], halt});
        } else {
            eval.step(rest, presented[s], next);
            out.transitions.insert({start, alphabet[s], state_of(next)});
        }
        out.transitions.insert({halt, alphabet[s], halt});
    }
    while (!queue.empty()) {
        const std::vector<std::uint8_t> flags = queue.front();
        queue.pop_front();
        const StateId from = names.at(flags);
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
            eval.step(flags, presented[s], next);
            out.transitions.insert({from, alphabet[s], state_of(next)});
        }
    }
    return out;
}

std::map<NeuronId, Nfa> extract_all(const PositiveNetwork& net, std::size_t state_budget) {
    std::map<NeuronId, Nfa> result;
    for (const NeuronId& x : net.outputs)
        result.emplace(x, extract_automaton(net, x, state_budget));
    return result;
}

} // namespace monoreg
