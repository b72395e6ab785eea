// qmirror: single-qubit reversible-measurement simulator with an observer
// sequent-logic engine and fuzzy-sphere construction.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qmirror/json_io.hpp"

namespace {

using namespace qmirror;

void report_error(const cli::cli_error& e, bool json) {
    if (json) {
        io::json_writer w;
        w.begin_object();
        w.key("error").begin_object();
        w.field("kind", e.kind);
        w.field("message", std::string_view(e.what()));
        if (e.step) w.field("step", *e.step);
        w.field("exit_code", e.code);
        w.end_object();
        w.end_object();
        std::cout << w.str() << "\n";
    } else {
        std::cerr << "error (" << e.kind << "): " << e.what();
        if (e.step) std::cerr << " [step " << *e.step << "]";
        std::cerr << "\n";
    }
}

void add_common(CLI::App* cmd, cli::common_opts& opts) {
    cmd->add_flag("--json", opts.json, "Emit machine-readable JSON instead of text");
    cmd->add_option("--tolerance", opts.tolerance,
                    "Display threshold: text output prints values below it as 0 "
                    "(never affects invariant checks)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-qubit simulator for reversible (mirror, fuzzy, liar) and "
                 "projective measurements, fuzzy-sphere geometry, and the "
                 "three-observer sequent calculus around the quantum/classical border."};
    app.require_subcommand(1);

    cli::simulate_opts sim;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run a measurement script against a single-qubit state");
    simulate->add_option("script", sim.script_path,
                         "Scenario script: JSON with initial_state, steps, seed");
    simulate->add_option(
        "--state", sim.state,
        "Initial state as 'a,b'; amplitudes in cartesian form re+imi (e.g. "
        "0.6+0.8i) or polar r@theta (e.g. 1@0.785). Overrides the script; the "
        "pair is normalized.");
    std::uint64_t sim_seed = 0;
    CLI::Option* sim_seed_opt =
        simulate->add_option("--seed", sim_seed, "Seed for projective draws");
    add_common(simulate, sim);

    cli::decompose_opts dec;
    CLI::App* decompose = app.add_subcommand(
        "decompose", "Euler z-y-z and phase-shift decomposition of a unitary");
    decompose
        ->add_option("matrix", dec.matrix_path,
                     "Matrix JSON file {\"rows\": [[..],[..]]}; '-' reads stdin")
        ->required();
    add_common(decompose, dec);

    cli::fuzzy_opts fuz;
    CLI::App* fuzzy = app.add_subcommand(
        "fuzzy", "Fuzzy-sphere generators and coordinates for n cells");
    fuzzy->add_option("n", fuz.n, "Dimension (number of cells), 2..1024")->required();
    add_common(fuzzy, fuz);

    cli::logic_opts log;
    CLI::App* logic = app.add_subcommand(
        "logic", "Run a derivation script under an observer profile");
    logic->add_option("script", log.script_path, "JSON array of derivation steps")
        ->required();
    logic->add_option("--profile", log.profile, "Observer: P, G, or A (default G)");
    logic->add_flag("--allow-cloning", log.allow_cloning,
                    "Lift the single-use axiom budgets (no-cloning counterfactual)");
    logic->add_option("--assume", log.assumptions,
                      "Sequent received as a given, e.g. \"|- A\" (repeatable; "
                      "available as axiom ids assume_0, assume_1, ...)");
    add_common(logic, log);

    cli::border_opts bor;
    CLI::App* border = app.add_subcommand(
        "border", "End-to-end border scheme: A provides a classical bit (prepared "
                  "into a superposition by a Hadamard), P mirror-measures and "
                  "issues her axiom, G measures projectively and drops the axiom "
                  "by cut, A receives the conclusions");
    border->add_option("--bit", bor.input_bit, "Classical input bit from A (0 or 1)");
    border->add_option("--seed", bor.seed, "Seed for P's operator and G's measurement");
    border->add_flag("--allow-cloning", bor.allow_cloning,
                     "Show the contradiction the no-cloning theorem prevents");
    add_common(border, bor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }

    // Which subcommand ran decides the active --json flag for error output.
    bool json = false;
    try {
        if (simulate->parsed()) {
            if (sim_seed_opt->count() > 0) sim.seed = sim_seed;
            json = sim.json;
            return cli::run_simulate(sim);
        }
        if (decompose->parsed()) {
            json = dec.json;
            return cli::run_decompose(dec);
        }
        if (fuzzy->parsed()) {
            json = fuz.json;
            return cli::run_fuzzy(fuz);
        }
        if (logic->parsed()) {
            json = log.json;
            return cli::run_logic(log);
        }
        if (border->parsed()) {
            json = bor.json;
            return cli::run_border(bor);
        }
    } catch (const cli::cli_error& e) {
        report_error(e, json);
        return e.code;
    } catch (const validation_error& e) {
        report_error(cli::cli_error(2, "validation", e.what()), json);
        return 2;
    } catch (const std::exception& e) {
        report_error(cli::cli_error(3, "engine", e.what()), json);
        return 3;
    }
    return 1;
}
