#ifndef MONOREG_VERIFIER_HPP
#define MONOREG_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "monoreg/automata.hpp"
#include "monoreg/network.hpp"

namespace monoreg {

// A behavior given by one founded language per output neuron: after any
// nonempty string alpha, output x must be active iff alpha embeds some
// string of x's language (i.e. an accepted string sits symbol-wise inside
// the tail of alpha).
struct BehaviorOracle {
    std::set<NeuronId> inputs;
    std::map<NeuronId, Nfa> languages;
};

// Validates the languages (well-formed, founded, over subsets of `inputs`).
BehaviorOracle make_oracle(std::map<NeuronId, Nfa> languages, std::set<NeuronId> inputs);

// Oracle over the union of the automata's input sets.
BehaviorOracle induced_behavior(std::map<NeuronId, Nfa> languages);

// True iff alpha embeds some string accepted by `a`.  One pass over alpha:
// a run may begin at every position (each tail of alpha can host a match),
// so the start state is injected as alive at each step; transitions match
// when their symbol is a subset of alpha's symbol.
bool embed_accepts(const Nfa& a, const InputString& alpha);

// Same question answered by enumerating every candidate string up to
// |alpha| symbols over the automaton's input set.  Exponential; only for
// cross-checking on small instances (throws SizeError beyond them).
bool brute_force_embed_accepts(const Nfa& a, const InputString& alpha);

// Output neurons required after alpha (nonempty, over the oracle inputs).
std::set<NeuronId> behavior_eval(const BehaviorOracle& oracle, const InputString& alpha);

struct Counterexample {
    InputString input;
    std::set<NeuronId> expected;
    std::set<NeuronId> actual;
};

struct ConformanceResult {
    bool pass = true;
    std::optional<Counterexample> counterexample; // first in enumeration order
    std::uint64_t strings_checked = 0;
    int delay = 0;
    std::size_t max_len = 0;
    std::optional<std::uint64_t> seed;
};

struct VerifyOptions {
    // Symbols strings are built from; defaults to the full powerset of the
    // network's inputs.
    std::optional<std::vector<Symbol>> pool;
    // Hard cap on the number of strings; exceeding it is a SizeError.
    std::uint64_t budget = 10'000'000;
};

// Checks that the network computes the oracle's behavior with the given
// delay on every string of length 1..max_len over the pool, enumerated
// shortest first and in symbol order within a length.  With delay k the
// expected output after alpha is empty for |alpha| <= k and otherwise the
// oracle's answer on alpha without its last k symbols.
ConformanceResult verify_delay(const PositiveNetwork& net, const BehaviorOracle& oracle,
                               int delay, std::size_t max_len,
                               const VerifyOptions& options = {});

// Same check on `samples` random strings (length uniform in 1..max_len,
// symbols uniform over the pool), reproducible from the seed.
ConformanceResult verify_delay_sampled(const PositiveNetwork& net, const BehaviorOracle& oracle,
                                       int delay, std::size_t max_len, std::uint64_t samples,
                                       std::uint64_t seed, const VerifyOptions& options = {});

} // namespace monoreg

#endif
