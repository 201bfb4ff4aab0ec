#ifndef MONOREG_DOT_HPP
#define MONOREG_DOT_HPP

#include <string>

#include "monoreg/automata.hpp"
#include "monoreg/network.hpp"

namespace monoreg {

// Graphviz text, byte-stable: nodes and edges in canonical order.
// Automata: circles, double circles for accepting states, a source-less
// arrow into the start state, symbol sets as edge labels.
std::string automaton_to_dot(const Nfa& a);

// Networks: boxes for inputs, ellipses for the rest, weights as "num/den"
// edge labels.
std::string network_to_dot(const PositiveNetwork& net);

} // namespace monoreg

#endif
