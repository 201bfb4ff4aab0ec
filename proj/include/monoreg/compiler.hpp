#ifndef MONOREG_COMPILER_HPP
#define MONOREG_COMPILER_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "monoreg/automata.hpp"
#include "monoreg/network.hpp"
#include "monoreg/rational.hpp"

namespace monoreg {

// A (state, symbol) pair: the automaton is in `state` and just read `symbol`.
// The compilers allocate one auxiliary neuron per pair.
struct StateSymbolPair {
    StateId state;
    Symbol symbol;

    auto operator<=>(const StateSymbolPair&) const = default;
};

// The pairs of a clean automaton: every (q, sigma) with q != start entered
// by some sigma-transition.  Triggers are the pairs reachable directly from
// start; the context of a pair (q, sigma) holds the pairs (q', sigma') with
// q in delta(q', sigma), i.e. the possible predecessors one step earlier.
struct PairSet {
    std::set<StateSymbolPair> pairs;
    std::set<StateSymbolPair> triggers;
    std::map<StateSymbolPair, std::set<StateSymbolPair>> contexts;
};

// Pre: the automaton is clean.
PairSet pair_set(const Nfa& a);

// Weights for an or/and gate on one neuron: m alternatives at w_or plus n
// jointly required sources at w_and.  Any single alternative with all n
// required sources reaches the threshold; all alternatives with one required
// source missing stay below it.
Rational w_or(std::size_t m, std::size_t n);   // 1/(n*m + 1)
Rational w_and(std::size_t m, std::size_t n);  // m/(n*m + 1)

// True iff the three inequalities behind w_or/w_and hold for this m, n:
//   m*w_or + (n-1)*w_and < 1,  w_or + n*w_and >= 1,  n*w_and < 1.
bool claim1_check(std::size_t m, std::size_t n);

enum class Construction { delay1, preprocessor, zero_delay_converging, single_string_chain };

std::string construction_str(Construction c);

struct CompilationResult {
    PositiveNetwork network;
    int delay = 0;
    Construction construction = Construction::delay1;
    std::size_t aux_count = 0; // |network.auxiliary|
};

// One clean founded automaton per output neuron, all over subsets of the
// shared input set.
using BehaviorAutomata = std::map<NeuronId, Nfa>;

// Network computing each output's behavior with delay 1: one auxiliary
// neuron per pair; triggers read their symbol directly, other pairs read
// their context pairs and symbol through or/and weights, and accepting
// pairs drive the output neuron.
CompilationResult compile_delay1(const BehaviorAutomata& behavior,
                                 const std::set<NeuronId>& inputs);

// Delay-2 variant that first collects each used symbol in a dedicated
// preprocessor neuron, so pair neurons read one neuron per symbol instead
// of the symbol members themselves.
CompilationResult compile_preprocessor(const BehaviorAutomata& behavior,
                                       const std::set<NeuronId>& inputs);

// Zero-delay network for languages whose strings all end with one common
// terminal symbol.  Throws PreconditionError when some language is not
// converging; an empty language leaves its output without incoming weights.
CompilationResult compile_zero_delay_converging(const BehaviorAutomata& behavior,
                                                const std::set<NeuronId>& inputs);

// Zero-delay network for single-string languages, built as a chain of
// auxiliary neurons tracking how much of the string has been seen.
CompilationResult compile_single_string(const std::map<NeuronId, InputString>& behavior,
                                        const std::set<NeuronId>& inputs);

// Canonical generated neuron names, prefixed by the output neuron so that
// the per-output networks stay disjoint when united.
std::string pair_neuron_name(const NeuronId& output, const StateSymbolPair& p);
std::string preprocessor_neuron_name(const NeuronId& output, const Symbol& sym);
std::string chain_neuron_name(const NeuronId& output, std::size_t index);

} // namespace monoreg

#endif
