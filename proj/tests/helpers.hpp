#ifndef MONOREG_TESTS_HELPERS_HPP
#define MONOREG_TESTS_HELPERS_HPP

// Shared fixtures and oracles for the test suites.
//
// The recurring example is a four-state automaton over {a,b,c,d} accepting
// the strings <{a,b,c}, {b,c}*, {a,d}> (q1 and q2 alternate on {b,c} and
// both exit on {a,d}), together with the delay-1 network wired for it by
// hand.  The network is frozen here independently of the compiler so the
// tests can catch weight regressions.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monoreg/automata.hpp"
#include "monoreg/compiler.hpp"
#include "monoreg/network.hpp"
#include "monoreg/verifier.hpp"

namespace monoreg::testing {

inline Symbol sym_abc() { return Symbol{"a", "b", "c"}; }
inline Symbol sym_bc() { return Symbol{"b", "c"}; }
inline Symbol sym_ad() { return Symbol{"a", "d"}; }

inline std::set<NeuronId> abcd_inputs() { return {"a", "b", "c", "d"}; }

// Accepts <{a,b,c}, {b,c}*, {a,d}>: q1/q2 alternate on {b,c}, and {a,d}
// accepts from either.  Clean and founded by construction.
inline Nfa alternating_nfa() {
    Nfa a;
    a.states = {"q0", "q1", "q2", "q3"};
    a.inputs = abcd_inputs();
    a.start = "q0";
    a.accepting = {"q3"};
    a.transitions = {
        {"q0", sym_abc(), "q1"},
        {"q1", sym_bc(), "q2"},
        {"q2", sym_bc(), "q1"},
        {"q1", sym_ad(), "q3"},
        {"q2", sym_ad(), "q3"},
    };
    return a;
}

// The delay-1 network for alternating_nfa, weights written out by hand:
// one auxiliary neuron per (state, symbol) pair, or/and weights 1/(nm+1)
// and m/(nm+1) per pair, accepting pair wired to x at weight 1.
inline PositiveNetwork alternating_net() {
    PositiveNetwork net;
    net.inputs = abcd_inputs();
    net.outputs = {"x"};
    const NeuronId trigger = "x:(q1|a,b,c)"; // reachable straight from start
    const NeuronId loop_in = "x:(q2|b,c)";   // entered on {b,c} from q1
    const NeuronId loop_back = "x:(q1|b,c)"; // entered on {b,c} from q2
    const NeuronId accept = "x:(q3|a,d)";    // entered on {a,d}; accepting
    net.auxiliary = {trigger, loop_in, loop_back, accept};

    auto w = [&net](const NeuronId& from, const NeuronId& to, std::int64_t num,
                    std::int64_t den) { net.weights[{from, to}] = rational(num, den); };

    // Trigger: the full symbol {a,b,c} alone reaches the threshold.
    w("a", trigger, 1, 3);
    w("b", trigger, 1, 3);
    w("c", trigger, 1, 3);
    // (q2|b,c): m=2 context neurons, n=2 symbol members.
    w(trigger, loop_in, 1, 5);
    w(loop_back, loop_in, 1, 5);
    w("b", loop_in, 2, 5);
    w("c", loop_in, 2, 5);
    // (q1|b,c): m=1, n=2.
    w(loop_in, loop_back, 1, 3);
    w("b", loop_back, 1, 3);
    w("c", loop_back, 1, 3);
    // (q3|a,d): m=3, n=2.
    w(trigger, accept, 1, 7);
    w(loop_in, accept, 1, 7);
    w(loop_back, accept, 1, 7);
    w("a", accept, 3, 7);
    w("d", accept, 3, 7);
    // Accepting pair drives the output.
    w(accept, "x", 1, 1);
    return net;
}

inline BehaviorOracle alternating_oracle() {
    return make_oracle({{"x", alternating_nfa()}}, abcd_inputs());
}

// A network with no auxiliary neurons and a heavier weight on the shared
// input b: fires x exactly when the last symbol covers {a,b} or {b,c}.
inline PositiveNetwork bias_net() {
    PositiveNetwork net;
    net.inputs = {"a", "b", "c"};
    net.outputs = {"x"};
    net.weights[{"a", "x"}] = rational(1, 3);
    net.weights[{"b", "x"}] = rational(2, 3);
    net.weights[{"c", "x"}] = rational(1, 3);
    return net;
}

// Accepts exactly the two one-symbol strings <s1> and <s2>.
inline Nfa choice_nfa(const Symbol& s1, const Symbol& s2, const std::set<NeuronId>& inputs) {
    Nfa a;
    a.states = {"s", "f"};
    a.inputs = inputs;
    a.start = "s";
    a.accepting = {"f"};
    a.transitions = {{"s", s1, "f"}, {"s", s2, "f"}};
    return a;
}

inline BehaviorOracle bias_oracle() {
    return make_oracle({{"x", choice_nfa(Symbol{"a", "b"}, Symbol{"b", "c"}, {"a", "b", "c"})}},
                       {"a", "b", "c"});
}

// Accepts exactly {<{p},{q}>, <{r},{s}>}: two disjoint two-symbol strings.
inline Nfa cross_pair_nfa() {
    Nfa a;
    a.states = {"s0", "m1", "m2", "f"};
    a.inputs = {"p", "q", "r", "s"};
    a.start = "s0";
    a.accepting = {"f"};
    a.transitions = {
        {"s0", Symbol{"p"}, "m1"},
        {"m1", Symbol{"q"}, "f"},
        {"s0", Symbol{"r"}, "m2"},
        {"m2", Symbol{"s"}, "f"},
    };
    return a;
}

// Acceptance by explicit nondeterministic runs: depth-first search over the
// transition choices, independent of the parallel state-set semantics.
inline bool explicit_accepts_from(const Nfa& a, const StateId& state, const InputString& alpha,
                                  std::size_t i) {
    if (i == alpha.size())
        return a.accepting.count(state) > 0;
    for (const Transition& t : a.transitions) {
        if (t.from == state && t.symbol == alpha[i] &&
            explicit_accepts_from(a, t.to, alpha, i + 1))
            return true;
    }
    return false;
}

inline bool explicit_accepts(const Nfa& a, const InputString& alpha) {
    return explicit_accepts_from(a, a.start, alpha, 0);
}

// Deterministic, seedable randomness for the property tests.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
    bool coin() { return (eng() & 1) != 0; }
};

inline std::vector<NeuronId> letter_pool(std::size_t n) {
    std::vector<NeuronId> pool;
    for (std::size_t i = 0; i < n; ++i)
        pool.emplace_back(1, static_cast<char>('a' + i));
    return pool;
}

inline Symbol random_symbol(Rng& rng, const std::vector<NeuronId>& pool) {
    std::vector<NeuronId> members;
    for (const NeuronId& id : pool) {
        if (rng.coin())
            members.push_back(id);
    }
    return Symbol{std::move(members)};
}

inline Symbol random_nonempty_symbol(Rng& rng, const std::vector<NeuronId>& pool) {
    for (;;) {
        Symbol s = random_symbol(rng, pool);
        if (!s.empty())
            return s;
    }
}

inline InputString random_string(Rng& rng, const std::vector<NeuronId>& pool,
                                 std::size_t max_len) {
    InputString alpha(1 + rng.below(max_len));
    for (Symbol& s : alpha)
        s = random_symbol(rng, pool);
    return alpha;
}

// Nonempty first symbol, so the one-string language {alpha} is founded.
inline InputString random_founded_string(Rng& rng, const std::vector<NeuronId>& pool,
                                         std::size_t max_len) {
    InputString alpha = random_string(rng, pool, max_len);
    alpha.front() = random_nonempty_symbol(rng, pool);
    return alpha;
}

// Founded by construction: the start state never accepts and never reads
// the empty symbol.  A transition spine from the start keeps a reasonable
// fraction of the states reachable; `self_loops` forces that many loop
// transitions onto non-start states.
inline Nfa random_founded_nfa(Rng& rng, std::size_t max_states, std::size_t n_inputs,
                              std::size_t max_transitions, std::size_t self_loops) {
    const std::vector<NeuronId> pool = letter_pool(n_inputs);
    Nfa a;
    const std::size_t n = 2 + rng.below(max_states - 1);
    for (std::size_t i = 0; i < n; ++i)
        a.states.insert("q" + std::to_string(i));
    a.inputs = std::set<NeuronId>(pool.begin(), pool.end());
    a.start = "q0";
    // Accepting states among the non-start ones; at least one.
    a.accepting.insert("q" + std::to_string(1 + rng.below(n - 1)));
    for (std::size_t i = 1; i < n; ++i) {
        if (rng.below(4) == 0)
            a.accepting.insert("q" + std::to_string(i));
    }
    auto state = [&](std::size_t i) { return "q" + std::to_string(i); };
    // Spine q0 -> q1 -> ... so the automaton is mostly connected.
    for (std::size_t i = 0; i + 1 < n && a.transitions.size() < max_transitions; ++i)
        a.transitions.insert({state(i), random_nonempty_symbol(rng, pool), state(i + 1)});
    while (a.transitions.size() < max_transitions && rng.below(4) != 0) {
        const std::size_t from = rng.below(n);
        const std::size_t to = rng.below(n);
        Symbol sym = random_symbol(rng, pool);
        if (from == 0 && sym.empty())
            continue; // would break foundedness
        a.transitions.insert({state(from), std::move(sym), state(to)});
    }
    for (std::size_t k = 0; k < self_loops; ++k) {
        const std::size_t q = 1 + rng.below(n - 1);
        a.transitions.insert({state(q), random_symbol(rng, pool), state(q)});
    }
    return a;
}

// A clean founded automaton: generate without self-loops, then prune so
// every remaining state is reachable.
inline Nfa random_clean_nfa(Rng& rng, std::size_t max_states, std::size_t n_inputs,
                            std::size_t max_transitions) {
    for (;;) {
        Nfa a = random_founded_nfa(rng, max_states, n_inputs, max_transitions, 0);
        std::set<Transition> kept;
        for (const Transition& t : a.transitions) {
            if (t.from != t.to)
                kept.insert(t);
        }
        a.transitions = std::move(kept);
        a = prune_unreachable(a);
        for (auto it = a.accepting.begin(); it != a.accepting.end();)
            it = a.states.count(*it) ? std::next(it) : a.accepting.erase(it);
        if (is_clean(a) && is_founded(a))
            return a;
    }
}

// A random positive network: every allowed edge appears with probability
// ~1/3, with small-denominator weights (1 is included so exact-threshold
// firing shows up often).
inline PositiveNetwork random_network(Rng& rng, std::size_t n_inputs, std::size_t n_outputs,
                                      std::size_t n_aux) {
    static const std::vector<std::pair<std::int64_t, std::int64_t>> weight_pool = {
        {1, 1}, {1, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5},
    };
    PositiveNetwork net;
    const std::vector<NeuronId> in_pool = letter_pool(n_inputs);
    net.inputs = std::set<NeuronId>(in_pool.begin(), in_pool.end());
    for (std::size_t i = 0; i < n_outputs; ++i)
        net.outputs.insert("x" + std::to_string(i));
    for (std::size_t i = 0; i < n_aux; ++i)
        net.auxiliary.insert("h" + std::to_string(i));
    auto maybe_connect = [&](const NeuronId& from, const NeuronId& to) {
        if (rng.below(3) != 0)
            return;
        const auto [num, den] = weight_pool[rng.below(weight_pool.size())];
        net.weights[{from, to}] = rational(num, den);
    };
    for (const NeuronId& from : net.inputs) {
        for (const NeuronId& to : net.outputs)
            maybe_connect(from, to);
        for (const NeuronId& to : net.auxiliary)
            maybe_connect(from, to);
    }
    for (const NeuronId& from : net.auxiliary) {
        for (const NeuronId& to : net.outputs)
            maybe_connect(from, to);
        for (const NeuronId& to : net.auxiliary) {
            if (from != to)
                maybe_connect(from, to);
        }
    }
    return net;
}

// All rationals in (0,1] with denominator at most max_den, ascending.
inline std::vector<Rational> weight_grid(int max_den) {
    std::vector<Rational> grid;
    for (int den = 1; den <= max_den; ++den) {
        for (int num = 1; num <= den; ++num)
            grid.push_back(rational(num, den));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

inline bool same_nfa(const Nfa& a, const Nfa& b) {
    return a.states == b.states && a.inputs == b.inputs && a.start == b.start &&
           a.accepting == b.accepting && a.transitions == b.transitions;
}

inline bool same_network(const PositiveNetwork& a, const PositiveNetwork& b) {
    return a.inputs == b.inputs && a.outputs == b.outputs && a.auxiliary == b.auxiliary &&
           a.weights == b.weights;
}

// Calls fn on every string of length 1..max_len over the symbol pool, in
// canonical order (shortest first, symbol order within a length).
template <typename Fn>
void for_all_strings(const std::vector<Symbol>& pool, std::size_t max_len, Fn&& fn) {
    InputString alpha;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        for (;;) {
            alpha.clear();
            for (std::size_t i : idx)
                alpha.push_back(pool[i]);
            fn(alpha);
            std::size_t pos = len;
            while (pos > 0 && idx[pos - 1] + 1 == pool.size())
                idx[--pos] = 0;
            if (pos == 0)
                break;
            ++idx[pos - 1];
        }
    }
}

} // namespace monoreg::testing

#endif
