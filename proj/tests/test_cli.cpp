#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "helpers.hpp"

#include "monoreg/extractor.hpp"
#include "monoreg/json_io.hpp"

using namespace monoreg;
using namespace monoreg::testing;

namespace {

// Everything the tool touches lives in a scratch directory under the test
// working directory; it is wiped once per run and left behind afterwards.
const std::string& scratch() {
    static const std::string dir = [] {
        const std::string d = "cli_scratch";
        std::filesystem::remove_all(d);
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_in_scratch(const std::string& name) { return scratch() + "/" + name; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the installed binary through the shell; `env` is an optional
// VAR=value prefix for the child process only.
CliRun run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("MONOREG_BIN");
    REQUIRE(bin != nullptr);
    const std::string out_path = path_in_scratch("stdout.txt");
    const std::string err_path = path_in_scratch("stderr.txt");
    const std::string cmd = (env.empty() ? "" : env + " ") + "\"" + bin + "\" " + args +
                            " >\"" + out_path + "\" 2>\"" + err_path + "\"";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CliRun r;
    if (WIFEXITED(status))
        r.code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

// Fixture files shared by the cases below, written once.
struct Fixtures {
    std::string net = path_in_scratch("alternating_net.json");
    std::string bundle = path_in_scratch("alternating_bundle.json");
    std::string bias = path_in_scratch("bias_net.json");
    std::string choice_bundle = path_in_scratch("choice_bundle.json");
    std::string chain_bundle = path_in_scratch("chain_bundle.json");
    std::string looped = path_in_scratch("looped.json");
    std::string unfounded = path_in_scratch("unfounded.json");
    std::string broken = path_in_scratch("broken.json");

    Fixtures() {
        write_text(net, dump_json(network_to_json(alternating_net())));
        write_text(bias, dump_json(network_to_json(bias_net())));

        BehaviorBundle alternating;
        alternating.inputs = abcd_inputs();
        alternating.automata.emplace("x", alternating_nfa());
        write_text(bundle, dump_json(bundle_to_json(alternating)));

        BehaviorBundle choice;
        choice.inputs = {"a", "b", "c"};
        choice.automata.emplace(
            "x", choice_nfa(Symbol{"a", "b"}, Symbol{"b", "c"}, {"a", "b", "c"}));
        write_text(choice_bundle, dump_json(bundle_to_json(choice)));

        BehaviorBundle chain;
        chain.inputs = {"a", "b"};
        chain.strings.emplace("x", InputString{Symbol{"a"}, Symbol{"b"}});
        write_text(chain_bundle, dump_json(bundle_to_json(chain)));

        Nfa loop;
        loop.states = {"q0", "q1"};
        loop.inputs = {"a", "b"};
        loop.start = "q0";
        loop.accepting = {"q1"};
        loop.transitions = {{"q0", Symbol{"a"}, "q1"}, {"q1", Symbol{"b"}, "q1"}};
        write_text(looped, dump_json(automaton_to_json(loop)));

        Nfa hollow = loop;
        hollow.accepting = {"q0", "q1"}; // accepts the empty string
        write_text(unfounded, dump_json(automaton_to_json(hollow)));

        write_text(broken, "{ \"states\": [");
    }
};

const Fixtures& fixtures() {
    static const Fixtures f;
    return f;
}

} // namespace

TEST_CASE("clean writes the cleaned automaton and reports what it did") {
    const auto& f = fixtures();
    const std::string out = path_in_scratch("cleaned.json");
    const CliRun r = run_cli("clean " + f.looped + " " + out);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"removed_self_loops\": 1") != std::string::npos);

    const Nfa cleaned = automaton_from_json(load_json_file(out));
    CHECK(clean_violations(cleaned).empty());
    CHECK(accepts(cleaned, {Symbol{"a"}, Symbol{"b"}, Symbol{"b"}}));

    const CliRun bad = run_cli("clean " + f.unfounded + " " + out);
    CHECK(bad.code == 2);
    CHECK(bad.err.find("not founded") != std::string::npos);
}

TEST_CASE("compile produces the same network as the library, byte for byte") {
    const auto& f = fixtures();
    const std::string out1 = path_in_scratch("compiled1.json");
    const std::string out2 = path_in_scratch("compiled2.json");
    CHECK(run_cli("compile " + f.bundle + " " + out1 + " --mode delay1").code == 0);
    CHECK(run_cli("compile " + f.bundle + " " + out2 + " --mode delay1").code == 0);
    CHECK(slurp(out1) == slurp(out2));

    const nlohmann::json doc = load_json_file(out1);
    CHECK(doc.at("construction") == "delay1");
    CHECK(doc.at("delay") == 1);
    const CompilationResult expected =
        compile_delay1({{"x", alternating_nfa()}}, abcd_inputs());
    CHECK(same_network(network_from_json(doc), expected.network));
}

TEST_CASE("compile refuses constructions whose preconditions fail") {
    const auto& f = fixtures();
    const std::string out = path_in_scratch("refused.json");

    const CliRun zero = run_cli("compile " + f.choice_bundle + " " + out + " --mode zero");
    CHECK(zero.code == 3);
    CHECK(zero.err.find("not converging") != std::string::npos);

    // Chain mode only takes single-string languages.
    const CliRun chain = run_cli("compile " + f.bundle + " " + out + " --mode chain");
    CHECK(chain.code == 2);
}

TEST_CASE("compiled chains verify through the command line") {
    const auto& f = fixtures();
    const std::string out = path_in_scratch("chain_net.json");
    CHECK(run_cli("compile " + f.chain_bundle + " " + out + " --mode chain").code == 0);
    CHECK(load_json_file(out).at("construction") == "single_string_chain");

    const CliRun v =
        run_cli("verify " + out + " " + f.chain_bundle + " --delay 0 --max-len 3");
    CHECK(v.code == 0);
    CHECK(v.out.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("simulate prints the activation trace and the output") {
    const auto& f = fixtures();
    const CliRun r = run_cli("simulate " + f.net + " \"[a,b,c];[a,d];[]\"");
    CHECK(r.code == 0);
    CHECK(r.out == "S1: {}\n"
                   "S2: {x:(q1|a,b,c)}\n"
                   "S3: {x:(q3|a,d)}\n"
                   "S4: {x}\n"
                   "output: {x}\n");

    const CliRun quiet = run_cli("simulate " + f.net + " \"[]\"");
    CHECK(quiet.code == 0);
    CHECK(quiet.out == "S1: {}\nS2: {}\noutput: {}\n");

    const CliRun unknown = run_cli("simulate " + f.net + " \"[z]\"");
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("unknown input neuron") != std::string::npos);

    const CliRun mangled = run_cli("simulate " + f.net + " \"a,b\"");
    CHECK(mangled.code == 1);
}

TEST_CASE("verify distinguishes pass, fail and blown budget") {
    const auto& f = fixtures();
    const CliRun pass = run_cli("verify " + f.net + " " + f.bundle +
                                " --delay 1 --max-len 2");
    CHECK(pass.code == 0);
    CHECK(pass.out.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(pass.out.find("\"strings_checked\": 272") != std::string::npos);

    const CliRun fail = run_cli("verify " + f.net + " " + f.bundle +
                                " --delay 0 --max-len 2");
    CHECK(fail.code == 4);
    CHECK(fail.out.find("\"verdict\": \"fail\"") != std::string::npos);
    CHECK(fail.out.find("\"counterexample\"") != std::string::npos);

    const CliRun broke = run_cli("verify " + f.net + " " + f.bundle +
                                 " --delay 1 --max-len 2",
                                 "MONOREG_BUDGET=10");
    CHECK(broke.code == 5);

    const CliRun garbled = run_cli("verify " + f.net + " " + f.bundle +
                                   " --delay 1 --max-len 2",
                                   "MONOREG_BUDGET=lots");
    CHECK(garbled.code == 1);

    const CliRun sampled = run_cli("verify " + f.net + " " + f.bundle +
                                   " --delay 1 --max-len 3 --samples 20 --seed 5");
    CHECK(sampled.code == 0);
    CHECK(sampled.out.find("\"seed\": 5") != std::string::npos);
}

TEST_CASE("extract prints the behavior automaton of an output neuron") {
    const auto& f = fixtures();
    const CliRun r = run_cli("extract " + f.bias + " x");
    CHECK(r.code == 0);
    nlohmann::json doc;
    REQUIRE_NOTHROW(doc = nlohmann::json::parse(r.out));
    CHECK(same_nfa(automaton_from_json(doc), extract_automaton(bias_net(), "x")));

    CHECK(run_cli("extract " + f.bias + " nobody").code == 2);
    CHECK(run_cli("extract " + f.bias + " x --state-budget 3").code == 5);
}

TEST_CASE("dot renders each document kind and rejects the other") {
    const auto& f = fixtures();
    const std::string automaton = path_in_scratch("dot_automaton.json");
    write_text(automaton, dump_json(automaton_to_json(alternating_nfa())));

    const CliRun a = run_cli("dot " + automaton + " --kind auto");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("digraph automaton {", 0) == 0);

    const CliRun n = run_cli("dot " + f.net + " --kind net");
    CHECK(n.code == 0);
    CHECK(n.out.rfind("digraph network {", 0) == 0);

    CHECK(run_cli("dot " + automaton + " --kind net").code == 1);
    CHECK(run_cli("dot " + f.net + " --kind auto").code == 1);
}

TEST_CASE("unreadable and malformed files exit with a parse error") {
    const auto& f = fixtures();
    const std::string out = path_in_scratch("never.json");
    CHECK(run_cli("clean " + f.broken + " " + out).code == 1);
    CHECK(run_cli("simulate " + path_in_scratch("missing.json") + " \"[]\"").code == 1);
    CHECK(run_cli("extract " + f.broken + " x").code == 1);
}
