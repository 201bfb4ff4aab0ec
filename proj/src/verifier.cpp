#include "monoreg/verifier.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace monoreg {

namespace {

void require_founded_language(const NeuronId& output, const Nfa& a,
                              const std::set<NeuronId>& inputs) {
    check_automaton(a);
    for (const NeuronId& u : a.inputs) {
        if (!inputs.count(u))
            throw ValidationError("language for \"" + output + "\" uses input \"" + u +
                                  "\" outside the oracle input set");
    }
    if (const auto witness = foundedness_witness(a))
        throw ValidationError("language for \"" + output + "\" is not founded: it accepts \"" +
                              string_str(*witness) + "\"");
}

} // namespace

BehaviorOracle make_oracle(std::map<NeuronId, Nfa> languages, std::set<NeuronId> inputs) {
    BehaviorOracle oracle{std::move(inputs), std::move(languages)};
    for (const auto& [output, a] : oracle.languages)
        require_founded_language(output, a, oracle.inputs);
    return oracle;
}

BehaviorOracle induced_behavior(std::map<NeuronId, Nfa> languages) {
    std::set<NeuronId> inputs;
    for (const auto& [output, a] : languages)
        inputs.insert(a.inputs.begin(), a.inputs.end());
    return make_oracle(std::move(languages), std::move(inputs));
}

bool embed_accepts(const Nfa& a, const InputString& alpha) {
    if (a.accepting.count(a.start))
        return true; // the empty string embeds in everything
    std::set<StateId> alive;
    for (const Symbol& sym : alpha) {
        std::set<StateId> next;
        for (const Transition& t : a.transitions) {
            if ((t.from == a.start || alive.count(t.from)) && t.symbol.subset_of(sym))
                next.insert(t.to);
        }
        alive = std::move(next);
    }
    return std::any_of(alive.begin(), alive.end(),
                       [&](const StateId& q) { return a.accepting.count(q) > 0; });
}

bool brute_force_embed_accepts(const Nfa& a, const InputString& alpha) {
    if (a.inputs.size() > 4)
        throw SizeError("brute-force embedding over " + std::to_string(a.inputs.size()) +
                        " inputs is too large");
    if (alpha.size() > 6)
        throw SizeError("brute-force embedding against a string of length " +
                        std::to_string(alpha.size()) + " is too large");
    const std::vector<Symbol> symbols = powerset(a.inputs);
    InputString beta;
    // Depth-first over all strings of length 0..|alpha|.
    const auto search = [&](const auto& self) -> bool {
        if (embeds(alpha, beta) && accepts(a, beta))
            return true;
        if (beta.size() == alpha.size())
            return false;
        for (const Symbol& sym : symbols) {
            beta.push_back(sym);
            if (self(self))
                return true;
            beta.pop_back();
        }
        return false;
    };
    return search(search);
}

namespace {

// Indexed form of one oracle language for sweeping many strings: states and
// transition symbols become bit positions and masks over the oracle inputs.
struct CompiledLanguage {
    struct Arrow {
        std::uint32_t from;
        std::uint32_t to;
        std::uint64_t mask;
    };

    std::size_t state_count = 0;
    std::uint32_t start = 0;
    std::vector<std::uint8_t> accepting;
    std::vector<Arrow> arrows;
    bool accepts_empty = false;

    CompiledLanguage(const Nfa& a, const std::map<NeuronId, std::size_t>& input_bit) {
        std::map<StateId, std::uint32_t> index;
        for (const StateId& q : a.states)
            index.emplace(q, static_cast<std::uint32_t>(index.size()));
        state_count = index.size();
        start = index.at(a.start);
        accepting.assign(state_count, 0);
        for (const StateId& q : a.accepting)
            accepting[index.at(q)] = 1;
        accepts_empty = a.accepting.count(a.start) > 0;
        for (const Transition& t : a.transitions) {
            std::uint64_t mask = 0;
            for (const NeuronId& u : t.symbol.members())
                mask |= std::uint64_t{1} << input_bit.at(u);
            arrows.push_back({index.at(t.from), index.at(t.to), mask});
        }
    }

    // alive' = image of alive plus a fresh run from start, under the
    // transitions whose symbol is covered by the read symbol.
    void advance(const std::vector<std::uint8_t>& alive, std::uint64_t symbol_mask,
                 std::vector<std::uint8_t>& next) const {
        next.assign(state_count, 0);
        for (const Arrow& arrow : arrows) {
            if ((arrow.mask & ~symbol_mask) == 0 &&
                (arrow.from == start || alive[arrow.from]))
                next[arrow.to] = 1;
        }
    }

    bool fired(const std::vector<std::uint8_t>& alive) const {
        if (accepts_empty)
            return true;
        for (std::size_t q = 0; q < state_count; ++q) {
            if (alive[q] && accepting[q])
                return true;
        }
        return false;
    }
};

struct CompiledOracle {
    std::map<NeuronId, std::size_t> input_bit;
    std::vector<NeuronId> outputs; // sorted
    std::vector<CompiledLanguage> languages;

    explicit CompiledOracle(const BehaviorOracle& oracle) {
        if (oracle.inputs.size() > 64)
            throw SizeError("oracle over " + std::to_string(oracle.inputs.size()) +
                            " inputs is too large to sweep");
        for (const NeuronId& u : oracle.inputs)
            input_bit.emplace(u, input_bit.size());
        for (const auto& [output, a] : oracle.languages) {
            outputs.push_back(output);
            languages.emplace_back(a, input_bit);
        }
    }

    std::uint64_t symbol_mask(const Symbol& sym) const {
        std::uint64_t mask = 0;
        for (const NeuronId& u : sym.members()) {
            const auto it = input_bit.find(u);
            if (it == input_bit.end())
                throw InputDomainError("symbol " + symbol_str(sym) +
                                       " is not over the oracle's input set");
            mask |= std::uint64_t{1} << it->second;
        }
        return mask;
    }
};

// Layered evaluation state for one candidate string, reusing the work done
// for a shared prefix.  Layer t holds everything known after t symbols.
struct Sweep {
    const NetworkEvaluator& eval;
    const CompiledOracle& oracle;

    std::vector<std::vector<std::uint8_t>> net_active;            // per layer
    std::vector<std::vector<std::vector<std::uint8_t>>> alive;    // per layer, per language
    std::vector<std::vector<std::uint8_t>> fired;                 // per layer, per output

    Sweep(const NetworkEvaluator& eval, const CompiledOracle& oracle, std::size_t max_len)
        : eval(eval), oracle(oracle) {
        net_active.assign(max_len + 1, std::vector<std::uint8_t>(eval.neurons().size(), 0));
        alive.resize(max_len + 1);
        fired.assign(max_len + 1, std::vector<std::uint8_t>(oracle.outputs.size(), 0));
        for (std::size_t t = 0; t <= max_len; ++t) {
            for (const CompiledLanguage& lang : oracle.languages)
                alive[t].emplace_back(lang.state_count, 0);
        }
        for (std::size_t x = 0; x < oracle.languages.size(); ++x)
            fired[0][x] = oracle.languages[x].fired(alive[0][x]) ? 1 : 0;
    }

    // Recomputes layer t+1 from layer t under the given symbol.
    void extend(std::size_t t, const std::vector<std::uint8_t>& presented,
                std::uint64_t symbol_mask) {
        eval.step(net_active[t], presented, net_active[t + 1]);
        for (std::size_t x = 0; x < oracle.languages.size(); ++x) {
            oracle.languages[x].advance(alive[t][x], symbol_mask, alive[t + 1][x]);
            fired[t + 1][x] = oracle.languages[x].fired(alive[t + 1][x]) ? 1 : 0;
        }
    }

    // Expected output flags after a string of length len under delay k:
    // nothing while len <= k, the oracle's verdict k symbols ago otherwise.
    const std::vector<std::uint8_t>* expected(std::size_t len, std::size_t k) const {
        if (len <= k)
            return nullptr;
        return &fired[len - k];
    }

    bool matches(std::size_t len, std::size_t k) const {
        const std::vector<std::uint8_t>* want = expected(len, k);
        const std::vector<std::uint8_t>& active = net_active[len];
        const auto& out_idx = eval.output_indices();
        for (std::size_t x = 0; x < out_idx.size(); ++x) {
            const bool actual = active[out_idx[x]] != 0;
            const bool exp = want != nullptr && (*want)[x] != 0;
            if (actual != exp)
                return false;
        }
        return true;
    }

    Counterexample counterexample(const InputString& alpha, std::size_t k) const {
        Counterexample ce;
        ce.input = alpha;
        const std::size_t len = alpha.size();
        const std::vector<std::uint8_t>* want = expected(len, k);
        const auto& out_idx = eval.output_indices();
        for (std::size_t x = 0; x < out_idx.size(); ++x) {
            if (want != nullptr && (*want)[x])
                ce.expected.insert(oracle.outputs[x]);
            if (net_active[len][out_idx[x]])
                ce.actual.insert(oracle.outputs[x]);
        }
        return ce;
    }
};

struct VerifySetup {
    NetworkEvaluator eval;
    CompiledOracle oracle;
    std::vector<Symbol> pool;
    std::vector<std::vector<std::uint8_t>> pool_presented; // per pool symbol
    std::vector<std::uint64_t> pool_masks;

    VerifySetup(const PositiveNetwork& net, const BehaviorOracle& oracle_in,
                const VerifyOptions& options)
        : eval(net), oracle(oracle_in) {
        check_network(net);
        if (net.inputs != oracle_in.inputs)
            throw ValidationError("network and oracle have different input sets");
        std::set<NeuronId> oracle_outputs;
        for (const auto& [output, a] : oracle_in.languages)
            oracle_outputs.insert(output);
        if (net.outputs != oracle_outputs)
            throw ValidationError("network and oracle have different output sets");

        if (options.pool) {
            pool = *options.pool;
            std::sort(pool.begin(), pool.end());
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        } else {
            pool = powerset(net.inputs);
        }
        for (const Symbol& sym : pool) {
            std::vector<std::uint8_t> presented(eval.inputs().size(), 0);
            for (const NeuronId& u : sym.members()) {
                if (!net.inputs.count(u))
                    throw ValidationError("pool symbol " + symbol_str(sym) +
                                          " is not over the network's input set");
                presented[eval.input_index(u)] = 1;
            }
            pool_presented.push_back(std::move(presented));
            pool_masks.push_back(oracle.symbol_mask(sym));
        }
    }
};

ConformanceResult make_result(int delay, std::size_t max_len) {
    ConformanceResult result;
    result.delay = delay;
    result.max_len = max_len;
    return result;
}

} // namespace

ConformanceResult verify_delay(const PositiveNetwork& net, const BehaviorOracle& oracle,
                               int delay, std::size_t max_len, const VerifyOptions& options) {
    if (delay < 0)
        throw InputDomainError("delay must be nonnegative");
    const VerifySetup setup(net, oracle, options);
    const std::size_t k = static_cast<std::size_t>(delay);
    const std::size_t p = setup.pool.size();

    unsigned __int128 total = 0;
    unsigned __int128 level = 1;
    for (std::size_t len = 1; len <= max_len && p > 0; ++len) {
        level *= p;
        total += level;
        if (total > options.budget)
            throw SizeError("enumeration over the pool needs more than " +
                            std::to_string(options.budget) + " strings");
    }

    ConformanceResult result = make_result(delay, max_len);
    Sweep sweep(setup.eval, setup.oracle, max_len);
    InputString alpha;
    std::vector<std::size_t> idx;
    for (std::size_t len = 1; len <= max_len && p > 0; ++len) {
        idx.assign(len, 0);
        alpha.assign(len, setup.pool[0]);
        for (std::size_t t = 0; t < len; ++t)
            sweep.extend(t, setup.pool_presented[0], setup.pool_masks[0]);
        for (;;) {
            ++result.strings_checked;
            if (!sweep.matches(len, k)) {
                result.pass = false;
                result.counterexample = sweep.counterexample(alpha, k);
                return result;
            }
            // Odometer step: bump the last position, carrying left; then
            // recompute the layers from the first changed position on.
            std::size_t pos = len;
            while (pos > 0 && idx[pos - 1] + 1 == p)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t t = pos; t < len; ++t)
                idx[t] = 0;
            for (std::size_t t = pos - 1; t < len; ++t) {
                alpha[t] = setup.pool[idx[t]];
                sweep.extend(t, setup.pool_presented[idx[t]], setup.pool_masks[idx[t]]);
            }
        }
    }
    return result;
}

ConformanceResult verify_delay_sampled(const PositiveNetwork& net, const BehaviorOracle& oracle,
                                       int delay, std::size_t max_len, std::uint64_t samples,
                                       std::uint64_t seed, const VerifyOptions& options) {
    if (delay < 0)
        throw InputDomainError("delay must be nonnegative");
    if (max_len == 0)
        throw InputDomainError("sampling needs max_len >= 1");
    const VerifySetup setup(net, oracle, options);
    if (setup.pool.empty())
        throw InputDomainError("sampling needs a nonempty symbol pool");
    if (samples > options.budget)
        throw SizeError("sample count exceeds the budget of " +
                        std::to_string(options.budget) + " strings");
    const std::size_t k = static_cast<std::size_t>(delay);

    ConformanceResult result = make_result(delay, max_len);
    result.seed = seed;
    Sweep sweep(setup.eval, setup.oracle, max_len);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::size_t len = 1 + static_cast<std::size_t>(rng() % max_len);
        InputString alpha;
        alpha.reserve(len);
        for (std::size_t t = 0; t < len; ++t) {
            const std::size_t i = static_cast<std::size_t>(rng() % setup.pool.size());
            alpha.push_back(setup.pool[i]);
            sweep.extend(t, setup.pool_presented[i], setup.pool_masks[i]);
        }
        ++result.strings_checked;
        if (!sweep.matches(len, k)) {
            result.pass = false;
            result.counterexample = sweep.counterexample(alpha, k);
            return result;
        }
    }
    return result;
}

std::set<NeuronId> behavior_eval(const BehaviorOracle& oracle, const InputString& alpha) {
    if (alpha.empty())
        throw InputDomainError("behavior_eval needs a nonempty string");
    for (const Symbol& sym : alpha) {
        for (const NeuronId& u : sym.members()) {
            if (!oracle.inputs.count(u))
                throw InputDomainError("symbol " + symbol_str(sym) +
                                       " is not over the oracle's input set");
        }
    }
    std::set<NeuronId> result;
    for (const auto& [output, a] : oracle.languages) {
        if (embed_accepts(a, alpha))
            result.insert(output);
    }
    return result;
}

} // namespace monoreg
