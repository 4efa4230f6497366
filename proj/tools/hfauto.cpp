#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hfauto/commands.hpp"

using namespace hfauto;

namespace {

void add_mode(CLI::App* cmd, PowersetMode& mode) {
    static const std::map<std::string, PowersetMode> names = {
        {"auto", PowersetMode::Auto}, {"full", PowersetMode::Full}, {"reachable", PowersetMode::Reachable}};
    cmd->add_option("--mode", mode, "powerset scope: auto, full or reachable")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hfauto: finite automata over hereditarily finite sets"};
    app.require_subcommand(1);

    std::string file, file2, word, op, expr;
    std::string alphabet = "ab";
    std::string out;
    PowersetOptions powerset;
    ProptestConfig pt;
    std::string pt_out;

    auto* check = app.add_subcommand("check", "validate an automaton file");
    check->add_option("file", file)->required();

    auto* run = app.add_subcommand("run", "run a word and print the state trace");
    run->add_option("file", file)->required();
    run->add_option("word", word, "the word; empty, ε or eps for the empty word");

    auto* transform = app.add_subcommand("transform", "apply a construction or minimisation");
    transform->add_option("op", op)->required()->check(CLI::IsMember(transform_ops()));
    transform->add_option("file", file)->required();
    transform->add_option("--out,-o", out, "output file (default: stdout)");
    add_mode(transform, powerset.mode);

    auto* equiv = app.add_subcommand("equiv", "decide language equivalence");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();
    add_mode(equiv, powerset.mode);

    auto* iso = app.add_subcommand("iso", "find an isomorphism between two DFAs");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();

    auto* regex = app.add_subcommand("regex", "compile a regular expression to a minimal DFA");
    regex->add_option("expr", expr)->required();
    regex->add_option("--alphabet", alphabet, "symbols, e.g. ab or \"x y z\"")->capture_default_str();
    regex->add_option("--out,-o", out, "output file (default: stdout)");
    add_mode(regex, powerset.mode);

    auto* dot = app.add_subcommand("dot", "export Graphviz DOT");
    dot->add_option("file", file)->required();
    dot->add_option("--out,-o", out, "output file (default: stdout)");

    auto* proptest = app.add_subcommand("proptest", "run the property suite on random automata");
    proptest->add_option("--seed", pt.seed)->capture_default_str();
    proptest->add_option("--count", pt.count)->capture_default_str();
    proptest->add_option("--max-states", pt.max_states)->capture_default_str()->check(CLI::Range(1, 12));
    proptest->add_option("--max-len", pt.max_len)->capture_default_str()->check(CLI::Range(0, 10));
    proptest->add_option("--out,-o", pt_out, "directory for counterexample files")->capture_default_str();
    pt_out = "proptest-counterexamples";
    add_mode(proptest, powerset.mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    if (*check) {
        return cmd_check(file, std::cout, std::cerr);
    }
    if (*run) {
        return cmd_run(file, word, std::cout, std::cerr);
    }
    if (*transform) {
        return cmd_transform(file, op, out, powerset, std::cout, std::cerr);
    }
    if (*equiv) {
        return cmd_equiv(file, file2, powerset, std::cout, std::cerr);
    }
    if (*iso) {
        return cmd_iso(file, file2, std::cout, std::cerr);
    }
    if (*regex) {
        return cmd_regex(expr, alphabet, out, powerset, std::cout, std::cerr);
    }
    if (*dot) {
        return cmd_dot(file, out, std::cout, std::cerr);
    }
    pt.powerset = powerset;
    pt.counterexample_dir = pt_out;
    return cmd_proptest(pt, std::cout, std::cerr);
}
