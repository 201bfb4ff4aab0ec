#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "monoreg/dot.hpp"
#include "monoreg/extractor.hpp"
#include "monoreg/json_io.hpp"

namespace {

using namespace monoreg;

// Exit codes: 0 ok, 1 parse error, 2 validation error, 3 unmet construction
// precondition, 4 conformance failure, 5 budget exceeded.
enum ExitCode {
    exit_ok = 0,
    exit_parse = 1,
    exit_validation = 2,
    exit_precondition = 3,
    exit_conformance = 4,
    exit_budget = 5,
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write \"" + path + "\"");
    out << text;
}

// "[a,b,c];[];[a]" -> input string; members must be input neurons of `net`.
InputString parse_literal(const std::string& literal, const PositiveNetwork& net) {
    if (literal.empty())
        throw ParseError("empty input string literal");
    InputString alpha;
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        std::size_t end = literal.find(';', pos);
        if (end == std::string::npos)
            end = literal.size();
        const std::string part = literal.substr(pos, end - pos);
        if (part.size() < 2 || part.front() != '[' || part.back() != ']')
            throw ParseError("symbol \"" + part + "\" is not of the form [a,b,c]");
        std::vector<NeuronId> members;
        const std::string inner = part.substr(1, part.size() - 2);
        std::size_t mp = 0;
        while (!inner.empty() && mp <= inner.size()) {
            std::size_t me = inner.find(',', mp);
            if (me == std::string::npos)
                me = inner.size();
            const std::string token = inner.substr(mp, me - mp);
            if (!is_valid_neuron_id(token))
                throw ParseError("malformed neuron token \"" + token + "\"");
            if (!net.inputs.count(token))
                throw ParseError("unknown input neuron \"" + token + "\"");
            members.push_back(token);
            mp = me + 1;
        }
        alpha.emplace_back(std::move(members));
        pos = end + 1;
    }
    return alpha;
}

std::string set_str(const std::set<NeuronId>& ids) {
    std::string out = "{";
    bool first = true;
    for (const NeuronId& id : ids) {
        if (!first)
            out += ",";
        out += id;
        first = false;
    }
    return out + "}";
}

std::uint64_t verify_budget() {
    const char* env = std::getenv("MONOREG_BUDGET");
    if (env == nullptr || *env == '\0')
        return VerifyOptions{}.budget;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw ParseError(std::string("MONOREG_BUDGET is not a number: \"") + env + "\"");
    }
}

int cmd_clean(const std::string& in_path, const std::string& out_path) {
    const Nfa a = automaton_from_json(load_json_file(in_path));
    const auto [cleaned, report] = clean(a);
    write_file(out_path, dump_json(automaton_to_json(cleaned)));
    std::cout << dump_json(clean_report_to_json(report));
    return exit_ok;
}

int cmd_compile(const std::string& in_path, const std::string& out_path,
                const std::string& mode) {
    const BehaviorBundle bundle = bundle_from_json(load_json_file(in_path));
    CompilationResult result;
    if (mode == "chain") {
        if (!bundle.automata.empty())
            throw ValidationError("chain mode needs single-string languages, not automata");
        result = compile_single_string(bundle.strings, bundle.inputs);
    } else {
        const auto languages = bundle_languages(bundle);
        if (mode == "delay1")
            result = compile_delay1(languages, bundle.inputs);
        else if (mode == "preproc")
            result = compile_preprocessor(languages, bundle.inputs);
        else if (mode == "zero")
            result = compile_zero_delay_converging(languages, bundle.inputs);
        else
            throw ParseError("unknown mode \"" + mode + "\"");
    }
    write_file(out_path, dump_json(compilation_to_json(result)));
    return exit_ok;
}

int cmd_simulate(const std::string& net_path, const std::string& literal) {
    const PositiveNetwork net = network_from_json(load_json_file(net_path));
    const InputString alpha = parse_literal(literal, net);
    const NetworkRun r = run(net, alpha);
    for (std::size_t i = 0; i < r.activations.size(); ++i)
        std::cout << "S" << i + 1 << ": " << set_str(r.activations[i]) << "\n";
    std::cout << "output: " << set_str(output(net, alpha)) << "\n";
    return exit_ok;
}

int cmd_verify(const std::string& net_path, const std::string& bundle_path, int delay,
               std::size_t max_len, std::optional<std::uint64_t> samples,
               std::uint64_t seed) {
    const PositiveNetwork net = network_from_json(load_json_file(net_path));
    const BehaviorBundle bundle = bundle_from_json(load_json_file(bundle_path));
    const BehaviorOracle oracle = make_oracle(bundle_languages(bundle), bundle.inputs);
    VerifyOptions options;
    options.budget = verify_budget();
    const ConformanceResult result =
        samples ? verify_delay_sampled(net, oracle, delay, max_len, *samples, seed, options)
                : verify_delay(net, oracle, delay, max_len, options);
    std::cout << dump_json(conformance_to_json(result));
    return result.pass ? exit_ok : exit_conformance;
}

int cmd_extract(const std::string& net_path, const std::string& neuron,
                std::size_t state_budget) {
    const PositiveNetwork net = network_from_json(load_json_file(net_path));
    const Nfa a = extract_automaton(net, neuron, state_budget);
    std::cout << dump_json(automaton_to_json(a));
    return exit_ok;
}

int cmd_dot(const std::string& path, const std::string& kind) {
    const nlohmann::json doc = load_json_file(path);
    if (kind == "auto")
        std::cout << automaton_to_dot(automaton_from_json(doc));
    else if (kind == "net")
        std::cout << network_to_dot(network_from_json(doc));
    else
        throw ParseError("unknown kind \"" + kind + "\"");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positive neural networks for monotone-regular behaviors"};
    app.require_subcommand(1);

    std::string in_path, out_path, mode = "delay1", literal, neuron, kind;
    int delay = 0;
    std::size_t max_len = 0;
    std::size_t state_budget = std::size_t{1} << 20;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;

    auto* clean_cmd = app.add_subcommand("clean", "Clean an automaton");
    clean_cmd->add_option("input", in_path, "automaton JSON")->required();
    clean_cmd->add_option("output", out_path, "cleaned automaton JSON")->required();

    auto* compile_cmd = app.add_subcommand("compile", "Compile a behavior into a network");
    compile_cmd->add_option("input", in_path, "behavior bundle JSON")->required();
    compile_cmd->add_option("output", out_path, "network JSON")->required();
    compile_cmd->add_option("--mode", mode, "delay1 | preproc | zero | chain")
        ->check(CLI::IsMember({"delay1", "preproc", "zero", "chain"}));

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a network on an input string");
    simulate_cmd->add_option("network", in_path, "network JSON")->required();
    simulate_cmd->add_option("string", literal, "input string, e.g. [a,b];[];[c]")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a network against a behavior");
    verify_cmd->add_option("network", in_path, "network JSON")->required();
    verify_cmd->add_option("bundle", out_path, "behavior bundle JSON")->required();
    verify_cmd->add_option("--delay", delay, "expected delay")->required();
    verify_cmd->add_option("--max-len", max_len, "string length bound")->required();
    verify_cmd->add_option("--samples", samples, "sample count (random instead of exhaustive)");
    verify_cmd->add_option("--seed", seed, "random seed for --samples");

    auto* extract_cmd = app.add_subcommand("extract", "Extract an output neuron's automaton");
    extract_cmd->add_option("network", in_path, "network JSON")->required();
    extract_cmd->add_option("neuron", neuron, "output neuron")->required();
    extract_cmd->add_option("--state-budget", state_budget, "state count bound");

    auto* dot_cmd = app.add_subcommand("dot", "Render a document as Graphviz");
    dot_cmd->add_option("input", in_path, "automaton or network JSON")->required();
    dot_cmd->add_option("--kind", kind, "auto | net")->required()
        ->check(CLI::IsMember({"auto", "net"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (clean_cmd->parsed())
            return cmd_clean(in_path, out_path);
        if (compile_cmd->parsed())
            return cmd_compile(in_path, out_path, mode);
        if (simulate_cmd->parsed())
            return cmd_simulate(in_path, literal);
        if (verify_cmd->parsed())
            return cmd_verify(in_path, out_path, delay, max_len, samples, seed);
        if (extract_cmd->parsed())
            return cmd_extract(in_path, neuron, state_budget);
        if (dot_cmd->parsed())
            return cmd_dot(in_path, kind);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const InputDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
    return exit_ok;
}
