#include "monoreg/network.hpp"

#include <algorithm>
#include <limits>

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

} // namespace

std::vector<std::string> network_violations(const PositiveNetwork& net) {
    std::vector<std::string> out;
    const auto check_tokens = [&](const std::set<NeuronId>& ids, const char* role) {
        for (const NeuronId& id : ids) {
            if (!is_valid_neuron_id(id))
                out.push_back(std::string("malformed ") + role + " token \"" + id + "\"");
        }
    };
    check_tokens(net.inputs, "input");
    check_tokens(net.outputs, "output");
    check_tokens(net.auxiliary, "auxiliary");

    const auto overlap = [&](const std::set<NeuronId>& a, const std::set<NeuronId>& b,
                             const char* what) {
        for (const NeuronId& id : a) {
            if (b.count(id))
                out.push_back(std::string("neuron \"") + id + "\" is " + what);
        }
    };
    overlap(net.inputs, net.outputs, "both an input and an output");
    overlap(net.inputs, net.auxiliary, "both an input and auxiliary");
    overlap(net.outputs, net.auxiliary, "both an output and auxiliary");

    for (const auto& [edge, w] : net.weights) {
        const auto& [from, to] = edge;
        const std::string name = "weight \"" + from + "\" -> \"" + to + "\"";
        const bool from_input = net.inputs.count(from) > 0;
        const bool from_aux = net.auxiliary.count(from) > 0;
        const bool to_output = net.outputs.count(to) > 0;
        const bool to_aux = net.auxiliary.count(to) > 0;
        if (!from_input && !from_aux)
            out.push_back(name + " does not leave an input or auxiliary neuron");
        if (!to_output && !to_aux)
            out.push_back(name + " does not enter an output or auxiliary neuron");
        if (from_aux && to_aux && from == to)
            out.push_back(name + " is a self-connection");
        if (w <= 0)
            out.push_back(name + " is not positive (" + rational_str(w) + ")");
        else if (w > 1)
            out.push_back(name + " exceeds 1 (" + rational_str(w) + ")");
    }
    return out;
}

void check_network(const PositiveNetwork& net) {
    const auto violations = network_violations(net);
    if (!violations.empty())
        throw ValidationError("invalid network: " + join(violations, "; "));
}

NetworkEvaluator::NetworkEvaluator(const PositiveNetwork& net) {
    neurons_.reserve(net.outputs.size() + net.auxiliary.size());
    for (const NeuronId& id : net.outputs)
        neurons_.push_back(id);
    for (const NeuronId& id : net.auxiliary)
        neurons_.push_back(id);
    std::sort(neurons_.begin(), neurons_.end());
    inputs_.assign(net.inputs.begin(), net.inputs.end());

    for (std::size_t i = 0; i < neurons_.size(); ++i) {
        neuron_index_[neurons_[i]] = i;
        if (net.outputs.count(neurons_[i]))
            output_indices_.push_back(i);
    }
    for (std::size_t i = 0; i < inputs_.size(); ++i)
        input_index_[inputs_[i]] = i;

    incoming_.resize(neurons_.size());
    for (const auto& [edge, w] : net.weights) {
        const auto& [from, to] = edge;
        const auto to_it = neuron_index_.find(to);
        if (to_it == neuron_index_.end())
            continue; // ill-formed edge; reported by network_violations
        Incoming& in = incoming_[to_it->second];
        if (const auto from_neuron = neuron_index_.find(from);
            from_neuron != neuron_index_.end()) {
            in.from_neuron.push_back(static_cast<std::uint32_t>(from_neuron->second));
            in.neuron_exact.push_back(w);
        } else if (const auto from_input = input_index_.find(from);
                   from_input != input_index_.end()) {
            in.from_input.push_back(static_cast<std::uint32_t>(from_input->second));
            in.input_exact.push_back(w);
        }
    }

    // Try to rescale each neuron's incoming weights to one 64-bit
    // denominator so that stepping avoids rational arithmetic.
    for (Incoming& in : incoming_) {
        in.exact_only = true;
        in.threshold = 1;
        mpz_class denom(1);
        for (const Rational& w : in.neuron_exact)
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.get_den().get_mpz_t());
        for (const Rational& w : in.input_exact)
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.get_den().get_mpz_t());
        if (!denom.fits_slong_p())
            continue;
        const auto scale = [&](const Rational& w, std::int64_t& result) {
            mpz_class scaled = w.get_num() * (denom / w.get_den());
            if (scaled < 0 || !scaled.fits_slong_p())
                return false;
            result = scaled.get_si();
            return true;
        };
        std::uint64_t total = 0;
        bool ok = true;
        std::vector<std::int64_t> neuron_scaled(in.neuron_exact.size());
        std::vector<std::int64_t> input_scaled(in.input_exact.size());
        for (std::size_t i = 0; ok && i < in.neuron_exact.size(); ++i) {
            ok = scale(in.neuron_exact[i], neuron_scaled[i]);
            if (ok)
                total += static_cast<std::uint64_t>(neuron_scaled[i]);
        }
        for (std::size_t i = 0; ok && i < in.input_exact.size(); ++i) {
            ok = scale(in.input_exact[i], input_scaled[i]);
            if (ok)
                total += static_cast<std::uint64_t>(input_scaled[i]);
        }
        if (!ok || total > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            continue;
        in.exact_only = false;
        in.threshold = denom.get_si();
        in.neuron_scaled = std::move(neuron_scaled);
        in.input_scaled = std::move(input_scaled);
    }
}

std::size_t NetworkEvaluator::neuron_index(const NeuronId& id) const {
    const auto it = neuron_index_.find(id);
    if (it == neuron_index_.end())
        throw InputDomainError("\"" + id + "\" is not an output or auxiliary neuron");
    return it->second;
}

std::size_t NetworkEvaluator::input_index(const NeuronId& id) const {
    const auto it = input_index_.find(id);
    if (it == input_index_.end())
        throw InputDomainError("\"" + id + "\" is not an input neuron");
    return it->second;
}

void NetworkEvaluator::step(const std::vector<std::uint8_t>& active,
                            const std::vector<std::uint8_t>& presented,
                            std::vector<std::uint8_t>& next) const {
    next.assign(neurons_.size(), 0);
    for (std::size_t y = 0; y < incoming_.size(); ++y) {
        const Incoming& in = incoming_[y];
        if (!in.exact_only) {
            std::int64_t sum = 0;
            for (std::size_t i = 0; i < in.from_neuron.size(); ++i) {
                if (active[in.from_neuron[i]])
                    sum += in.neuron_scaled[i];
            }
            for (std::size_t i = 0; i < in.from_input.size(); ++i) {
                if (presented[in.from_input[i]])
                    sum += in.input_scaled[i];
            }
            next[y] = sum >= in.threshold ? 1 : 0;
        } else {
            Rational sum(0);
            for (std::size_t i = 0; i < in.from_neuron.size(); ++i) {
                if (active[in.from_neuron[i]])
                    sum += in.neuron_exact[i];
            }
            for (std::size_t i = 0; i < in.from_input.size(); ++i) {
                if (presented[in.from_input[i]])
                    sum += in.input_exact[i];
            }
            next[y] = sum >= 1 ? 1 : 0;
        }
    }
}

namespace {

std::vector<std::uint8_t> neuron_flags(const NetworkEvaluator& eval,
                                       const std::set<NeuronId>& source) {
    std::vector<std::uint8_t> flags(eval.neurons().size(), 0);
    for (const NeuronId& id : source)
        flags[eval.neuron_index(id)] = 1;
    return flags;
}

std::vector<std::uint8_t> input_flags(const NetworkEvaluator& eval, const Symbol& symbol) {
    std::vector<std::uint8_t> flags(eval.inputs().size(), 0);
    for (const NeuronId& id : symbol.members())
        flags[eval.input_index(id)] = 1;
    return flags;
}

std::set<NeuronId> flags_to_set(const NetworkEvaluator& eval,
                                const std::vector<std::uint8_t>& flags) {
    std::set<NeuronId> out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i])
            out.insert(eval.neurons()[i]);
    }
    return out;
}

} // namespace

std::set<NeuronId> step(const PositiveNetwork& net, const std::set<NeuronId>& source,
                        const Symbol& symbol) {
    const NetworkEvaluator eval(net);
    std::vector<std::uint8_t> next;
    eval.step(neuron_flags(eval, source), input_flags(eval, symbol), next);
    return flags_to_set(eval, next);
}

NetworkRun run(const PositiveNetwork& net, const InputString& alpha) {
    const NetworkEvaluator eval(net);
    NetworkRun result;
    result.input = alpha;
    result.activations.push_back({});
    std::vector<std::uint8_t> active(eval.neurons().size(), 0);
    std::vector<std::uint8_t> next;
    for (const Symbol& sym : alpha) {
        eval.step(active, input_flags(eval, sym), next);
        active = next;
        result.activations.push_back(flags_to_set(eval, active));
    }
    return result;
}

std::set<NeuronId> output(const PositiveNetwork& net, const InputString& alpha) {
    if (alpha.empty())
        throw InputDomainError("output needs a nonempty input string");
    const NetworkRun r = run(net, alpha);
    std::set<NeuronId> out;
    for (const NeuronId& id : r.activations.back()) {
        if (net.outputs.count(id))
            out.insert(id);
    }
    return out;
}

} // namespace monoreg
