#ifndef MONOREG_EXTRACTOR_HPP
#define MONOREG_EXTRACTOR_HPP

#include <cstddef>
#include <map>

#include "monoreg/automata.hpp"
#include "monoreg/network.hpp"

namespace monoreg {

// Deterministic automaton whose language induces, via the embedding
// semantics, exactly the zero-delay behavior of output neuron x in the
// network: subset states track the non-input activation set, the start
// state feeds them, and reading the empty symbol from start leads to a
// non-accepting sink.  Only subsets reachable from the start are
// materialized; 2^(non-input neurons) + 2 must not exceed state_budget.
Nfa extract_automaton(const PositiveNetwork& net, const NeuronId& x,
                      std::size_t state_budget = std::size_t{1} << 20);

// One extracted automaton per output neuron.
std::map<NeuronId, Nfa> extract_all(const PositiveNetwork& net,
                                    std::size_t state_budget = std::size_t{1} << 20);

} // namespace monoreg

#endif
