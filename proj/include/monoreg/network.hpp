#ifndef MONOREG_NETWORK_HPP
#define MONOREG_NETWORK_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monoreg/rational.hpp"
#include "monoreg/symbol.hpp"

namespace monoreg {

// A positive neural network: disjoint input, output and auxiliary neuron
// sets, and exact rational weights in (0, 1] on the allowed connections
// (input->output, input->auxiliary, auxiliary->output, and edges between
// distinct auxiliary neurons).  A missing weight entry means weight zero;
// the firing threshold is always 1.
struct PositiveNetwork {
    std::set<NeuronId> inputs;
    std::set<NeuronId> outputs;
    std::set<NeuronId> auxiliary;
    std::map<std::pair<NeuronId, NeuronId>, Rational> weights;
};

// All structural problems (overlapping neuron sets, weights outside (0,1],
// edges off the allowed connection relation); empty means well-formed.
std::vector<std::string> network_violations(const PositiveNetwork& net);

// Throws ValidationError when network_violations is nonempty.
void check_network(const PositiveNetwork& net);

// One synchronous step: a non-input neuron y fires iff the weights from its
// presynaptic neurons that are active (in `source`) or currently presented
// (in `symbol`) sum to at least 1.  Sums are exact.
std::set<NeuronId> step(const PositiveNetwork& net, const std::set<NeuronId>& source,
                        const Symbol& symbol);

struct NetworkRun {
    InputString input;
    std::vector<std::set<NeuronId>> activations; // S_1..S_{n+1}, S_1 empty
};

// The run on alpha from the empty initial activation.
NetworkRun run(const PositiveNetwork& net, const InputString& alpha);

// Output neurons active after reading alpha (alpha must be nonempty):
// the last activation set of the run, restricted to outputs.
std::set<NeuronId> output(const PositiveNetwork& net, const InputString& alpha);

// Index-based stepping for tight loops (conformance sweeps, extraction).
// Where possible each neuron's incoming weights are rescaled to a common
// 64-bit denominator so a step is pure integer arithmetic; neurons whose
// weights do not fit fall back to full rational sums.  Both paths are exact.
class NetworkEvaluator {
public:
    explicit NetworkEvaluator(const PositiveNetwork& net);

    const std::vector<NeuronId>& neurons() const { return neurons_; }  // sorted outputs+auxiliary
    const std::vector<NeuronId>& inputs() const { return inputs_; }    // sorted inputs
    const std::vector<std::size_t>& output_indices() const { return output_indices_; }

    std::size_t neuron_index(const NeuronId& id) const;
    std::size_t input_index(const NeuronId& id) const;

    // active/presented are 0/1 flags over neurons()/inputs(); next is
    // resized and overwritten.
    void step(const std::vector<std::uint8_t>& active,
              const std::vector<std::uint8_t>& presented,
              std::vector<std::uint8_t>& next) const;

private:
    struct Incoming {
        bool exact_only;                  // common denominator exceeded 64 bits
        std::int64_t threshold;           // scaled threshold (the value of 1)
        std::vector<std::uint32_t> from_neuron;  // presynaptic neuron indices
        std::vector<std::uint32_t> from_input;   // presynaptic input indices
        std::vector<std::int64_t> neuron_scaled; // weights scaled to threshold
        std::vector<std::int64_t> input_scaled;
        std::vector<Rational> neuron_exact;
        std::vector<Rational> input_exact;
    };

    std::vector<NeuronId> neurons_;
    std::vector<NeuronId> inputs_;
    std::vector<std::size_t> output_indices_;
    std::map<NeuronId, std::size_t> neuron_index_;
    std::map<NeuronId, std::size_t> input_index_;
    std::vector<Incoming> incoming_;
};

} // namespace monoreg

#endif
