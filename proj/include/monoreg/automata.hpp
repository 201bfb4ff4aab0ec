#ifndef MONOREG_AUTOMATA_HPP
#define MONOREG_AUTOMATA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monoreg/symbol.hpp"

namespace monoreg {

// Automaton states are opaque string tokens, like neurons.
using StateId = std::string;

struct Transition {
    StateId from;
    Symbol symbol;
    StateId to;

    auto operator<=>(const Transition&) const = default;
};

// Nondeterministic finite automaton over the powerset alphabet of `inputs`.
// A transition (from, sigma, to) fires only on an exact symbol match.
struct Nfa {
    std::set<StateId> states;
    std::set<NeuronId> inputs;
    StateId start;
    std::set<StateId> accepting;
    std::set<Transition> transitions;
};

// All structural problems with the automaton (unknown endpoints, symbols
// outside the input set, malformed tokens); empty means well-formed.
std::vector<std::string> automaton_violations(const Nfa& a);

// Throws ValidationError when automaton_violations is nonempty.
void check_automaton(const Nfa& a);

// State sets P_1..P_{n+1} of the parallel run on alpha: P_1 = {start} and
// P_{i+1} is the image of P_i under the transitions matching alpha_i.
std::vector<std::set<StateId>> run_parallel(const Nfa& a, const InputString& alpha);

// True iff the last parallel-run set meets the accepting states.
bool accepts(const Nfa& a, const InputString& alpha);

// States reachable from the start state via any transitions.
std::set<StateId> reachable_states(const Nfa& a);

// The language is founded iff it contains no empty string and no string
// whose first symbol is empty.  Checked on the graph: start must not accept,
// and no state reached from start on the empty symbol may reach acceptance.
bool is_founded(const Nfa& a);

// A witness string breaking foundedness (empty, or starting with the empty
// symbol), or nullopt when the automaton is founded.
std::optional<InputString> foundedness_witness(const Nfa& a);

// Clean: no self-loops, no transitions from start on the empty symbol,
// every state reachable.
std::vector<std::string> clean_violations(const Nfa& a);
bool is_clean(const Nfa& a);

struct CleanReport {
    std::size_t removed_self_loops = 0;           // self-loop triples rewritten
    std::map<StateId, StateId> duplicated_states; // looping state -> fresh copy
    std::set<StateId> pruned_states;
    bool blocked_empty_from_start = false;
};

// Replaces each self-looping state q by a loop-free pair q, f(q): the loop
// (q, sigma, q) is redirected to the copy and the copy inherits all outgoing
// transitions of q.  Accepts the same language; at most doubles the states.
Nfa remove_self_loops(const Nfa& a, CleanReport* report = nullptr);

// Drops transitions from the start state on the empty symbol.  Preserves
// founded languages (their strings never begin with the empty symbol).
Nfa restrict_founded_start(const Nfa& a, CleanReport* report = nullptr);

// Keeps exactly the states reachable from start, and their transitions.
Nfa prune_unreachable(const Nfa& a, CleanReport* report = nullptr);

// remove_self_loops, restrict_founded_start and prune_unreachable in order.
// Requires a founded automaton; otherwise throws ValidationError naming a
// witness string.
std::pair<Nfa, CleanReport> clean(const Nfa& a);

// Whether all accepted strings end with one common symbol.  `vacuous` means
// the language is empty (no transition enters an accepting state).
struct Convergence {
    enum class Kind { converging, not_converging, vacuous };

    Kind kind = Kind::vacuous;
    Symbol terminal;              // set when converging
    Symbol witness_a, witness_b;  // two distinct terminal symbols otherwise
};

// Pre: is_clean(a).
Convergence is_converging(const Nfa& a);

// Chain automaton accepting exactly {s}; s must be founded (nonempty with a
// nonempty first symbol) and its symbols must lie within `inputs`.
Nfa single_string_automaton(const InputString& s, const std::set<NeuronId>& inputs);

} // namespace monoreg

#endif
