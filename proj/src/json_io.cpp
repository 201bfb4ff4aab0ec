#include "monoreg/json_io.hpp"

#include <fstream>

namespace monoreg {

using nlohmann::json;

namespace {

// Wraps nlohmann's type/member errors into ParseError so callers see one
// error family for malformed documents.
template <typename F>
auto shaped(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
}

json symbol_to_json(const Symbol& sym) {
    json arr = json::array();
    for (const NeuronId& u : sym.members())
        arr.push_back(u);
    return arr;
}

Symbol symbol_from_json(const json& doc) {
    return Symbol(doc.get<std::vector<NeuronId>>());
}

template <typename T>
json set_to_json(const std::set<T>& values) {
    json arr = json::array();
    for (const T& v : values)
        arr.push_back(v);
    return arr;
}

} // namespace

json automaton_to_json(const Nfa& a) {
    json doc;
    doc["states"] = set_to_json(a.states);
    doc["inputs"] = set_to_json(a.inputs);
    doc["start"] = a.start;
    doc["accepting"] = set_to_json(a.accepting);
    json transitions = json::array();
    for (const Transition& t : a.transitions) {
        json entry;
        entry["from"] = t.from;
        entry["symbol"] = symbol_to_json(t.symbol);
        entry["to"] = t.to;
        transitions.push_back(std::move(entry));
    }
    doc["transitions"] = std::move(transitions);
    return doc;
}

Nfa automaton_from_json(const json& doc) {
    Nfa a = shaped("automaton", [&] {
        Nfa out;
        for (const auto& q : doc.at("states"))
            out.states.insert(q.get<StateId>());
        for (const auto& u : doc.at("inputs"))
            out.inputs.insert(u.get<NeuronId>());
        out.start = doc.at("start").get<StateId>();
        for (const auto& q : doc.at("accepting"))
            out.accepting.insert(q.get<StateId>());
        for (const auto& entry : doc.at("transitions")) {
            out.transitions.insert({entry.at("from").get<StateId>(),
                                    symbol_from_json(entry.at("symbol")),
                                    entry.at("to").get<StateId>()});
        }
        return out;
    });
    check_automaton(a);
    return a;
}

json network_to_json(const PositiveNetwork& net) {
    json doc;
    doc["inputs"] = set_to_json(net.inputs);
    doc["outputs"] = set_to_json(net.outputs);
    doc["auxiliary"] = set_to_json(net.auxiliary);
    json weights = json::array();
    for (const auto& [edge, w] : net.weights) {
        json entry;
        entry["from"] = edge.first;
        entry["to"] = edge.second;
        entry["num"] = rational_num_i64(w);
        entry["den"] = rational_den_i64(w);
        weights.push_back(std::move(entry));
    }
    doc["weights"] = std::move(weights);
    return doc;
}

PositiveNetwork network_from_json(const json& doc) {
    PositiveNetwork net = shaped("network", [&] {
        PositiveNetwork out;
        for (const auto& u : doc.at("inputs"))
            out.inputs.insert(u.get<NeuronId>());
        for (const auto& u : doc.at("outputs"))
            out.outputs.insert(u.get<NeuronId>());
        for (const auto& u : doc.at("auxiliary"))
            out.auxiliary.insert(u.get<NeuronId>());
        for (const auto& entry : doc.at("weights")) {
            const auto from = entry.at("from").get<NeuronId>();
            const auto to = entry.at("to").get<NeuronId>();
            const auto num = entry.at("num").get<std::int64_t>();
            const auto den = entry.at("den").get<std::int64_t>();
            if (den <= 0)
                throw ValidationError("weight \"" + from + "\" -> \"" + to +
                                      "\" has nonpositive denominator");
            if (num == 0)
                continue; // weight zero encodes a missing connection
            if (!out.weights.emplace(std::make_pair(from, to), rational(num, den)).second)
                throw ValidationError("duplicate weight entry \"" + from + "\" -> \"" + to + "\"");
        }
        return out;
    });
    check_network(net);
    return net;
}

json compilation_to_json(const CompilationResult& result) {
    json doc = network_to_json(result.network);
    doc["delay"] = result.delay;
    doc["construction"] = construction_str(result.construction);
    doc["aux_count"] = result.aux_count;
    return doc;
}

json clean_report_to_json(const CleanReport& report) {
    json doc;
    doc["removed_self_loops"] = report.removed_self_loops;
    doc["duplicated_states"] = json::object();
    for (const auto& [original, copy] : report.duplicated_states)
        doc["duplicated_states"][original] = copy;
    doc["pruned_states"] = set_to_json(report.pruned_states);
    doc["blocked_empty_from_start"] = report.blocked_empty_from_start;
    return doc;
}

json string_to_json(const InputString& alpha) {
    json arr = json::array();
    for (const Symbol& sym : alpha)
        arr.push_back(symbol_to_json(sym));
    return arr;
}

InputString string_from_json(const json& doc) {
    return shaped("input string", [&] {
        InputString alpha;
        for (const auto& sym : doc)
            alpha.push_back(symbol_from_json(sym));
        return alpha;
    });
}

json conformance_to_json(const ConformanceResult& result) {
    json doc;
    doc["verdict"] = result.pass ? "pass" : "fail";
    doc["strings_checked"] = result.strings_checked;
    doc["delay"] = result.delay;
    doc["max_len"] = result.max_len;
    if (result.seed)
        doc["seed"] = *result.seed;
    if (result.counterexample) {
        json ce;
        ce["input"] = string_to_json(result.counterexample->input);
        ce["expected"] = set_to_json(result.counterexample->expected);
        ce["actual"] = set_to_json(result.counterexample->actual);
        doc["counterexample"] = std::move(ce);
    }
    return doc;
}

json bundle_to_json(const BehaviorBundle& bundle) {
    json doc;
    doc["inputs"] = set_to_json(bundle.inputs);
    json outputs = json::array();
    std::set<NeuronId> neurons;
    for (const auto& [x, a] : bundle.automata)
        neurons.insert(x);
    for (const auto& [x, s] : bundle.strings)
        neurons.insert(x);
    for (const NeuronId& x : neurons) {
        json entry;
        entry["neuron"] = x;
        if (const auto it = bundle.automata.find(x); it != bundle.automata.end())
            entry["automaton"] = automaton_to_json(it->second);
        else
            entry["string"] = string_to_json(bundle.strings.at(x));
        outputs.push_back(std::move(entry));
    }
    doc["outputs"] = std::move(outputs);
    return doc;
}

BehaviorBundle bundle_from_json(const json& doc) {
    BehaviorBundle bundle;
    shaped("behavior bundle", [&] {
        for (const auto& u : doc.at("inputs"))
            bundle.inputs.insert(u.get<NeuronId>());
        for (const auto& entry : doc.at("outputs")) {
            const auto x = entry.at("neuron").get<NeuronId>();
            if (bundle.automata.count(x) || bundle.strings.count(x))
                throw ValidationError("duplicate bundle entry for \"" + x + "\"");
            const bool has_automaton = entry.contains("automaton");
            const bool has_string = entry.contains("string");
            if (has_automaton == has_string)
                throw ParseError("bundle entry for \"" + x +
                                 "\" needs exactly one of \"automaton\" and \"string\"");
            if (has_automaton)
                bundle.automata.emplace(x, automaton_from_json(entry.at("automaton")));
            else
                bundle.strings.emplace(x, string_from_json(entry.at("string")));
        }
        return 0;
    });
    return bundle;
}

std::map<NeuronId, Nfa> bundle_languages(const BehaviorBundle& bundle) {
    std::map<NeuronId, Nfa> out = bundle.automata;
    for (const auto& [x, s] : bundle.strings)
        out.emplace(x, single_string_automaton(s, bundle.inputs));
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open \"" + path + "\"");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("cannot parse \"" + path + "\": " + e.what());
    }
}

std::string dump_json(const json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace monoreg
