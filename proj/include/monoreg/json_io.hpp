#ifndef MONOREG_JSON_IO_HPP
#define MONOREG_JSON_IO_HPP

#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "monoreg/automata.hpp"
#include "monoreg/compiler.hpp"
#include "monoreg/network.hpp"
#include "monoreg/verifier.hpp"

namespace monoreg {

// All documents are plain JSON objects with alphabetically sorted keys and
// canonically sorted arrays, so serialization is byte-stable.  Parsers
// throw ParseError for malformed or mis-shaped documents and
// ValidationError for structurally invalid objects.

nlohmann::json automaton_to_json(const Nfa& a);
Nfa automaton_from_json(const nlohmann::json& doc);

nlohmann::json network_to_json(const PositiveNetwork& net);
PositiveNetwork network_from_json(const nlohmann::json& doc);

// A compiled network: the network document plus delay, construction and
// aux_count fields.  network_from_json accepts these documents as well.
nlohmann::json compilation_to_json(const CompilationResult& result);

nlohmann::json clean_report_to_json(const CleanReport& report);
nlohmann::json conformance_to_json(const ConformanceResult& result);

nlohmann::json string_to_json(const InputString& alpha);
InputString string_from_json(const nlohmann::json& doc);

// A behavior bundle: the shared input set plus one language per output
// neuron, given either as an automaton or as a single string.
struct BehaviorBundle {
    std::set<NeuronId> inputs;
    std::map<NeuronId, Nfa> automata;
    std::map<NeuronId, InputString> strings;
};

nlohmann::json bundle_to_json(const BehaviorBundle& bundle);
BehaviorBundle bundle_from_json(const nlohmann::json& doc);

// Every language of the bundle as an automaton (strings become chains).
std::map<NeuronId, Nfa> bundle_languages(const BehaviorBundle& bundle);

// Reads a whole file as JSON; ParseError carries the position on failure.
nlohmann::json load_json_file(const std::string& path);

// Canonical text form: two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& doc);

} // namespace monoreg

#endif
