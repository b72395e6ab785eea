#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qmirror/decompose.hpp"
#include "qmirror/json_io.hpp"
#include "qmirror/measure.hpp"
#include "qmirror/scenarios.hpp"

namespace qmirror::cli {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw cli_error(2, "io", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_input(const std::string& path) {
    json j = json::parse(read_input(path), nullptr, false);
    if (j.is_discarded())
        throw cli_error(2, "validation", "malformed JSON in '" + path + "'");
    return j;
}

// Text-mode number rendering: trimmed precision, with a display threshold
// that snaps residual noise to zero. JSON output never goes through here.
std::string show(double x, double tolerance) {
    if (std::abs(x) < tolerance) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string show(cx z, double tolerance) {
    std::string out = show(z.real(), tolerance);
    const double im = std::abs(z.imag()) < tolerance ? 0.0 : z.imag();
    out += (im < 0 ? "-" : "+") + show(std::abs(im), tolerance) + "i";
    return out;
}

std::string show_state(const qubit_state& s, double tol) {
    return "a=" + show(s.a(), tol) + "  b=" + show(s.b(), tol) +
           "  p0=" + show(s.prob0(), tol) + "  p1=" + show(s.prob1(), tol);
}

cx get_complex(const json& j, const char* key, int step) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
        !j[key][0].is_number() || !j[key][1].is_number())
        throw cli_error(2, "validation",
                        std::string("step parameter '") + key + "' must be [re, im]", step);
    return {j[key][0].get<double>(), j[key][1].get<double>()};
}

double get_real(const json& j, const char* key, int step) {
    if (!j.contains(key) || !j[key].is_number())
        throw cli_error(2, "validation",
                        std::string("step parameter '") + key + "' must be a number", step);
    return j[key].get<double>();
}

void write_bloch(io::json_writer& w, const bloch_point& p) {
    w.begin_object().field("theta", p.theta).field("phi", p.phi).end_object();
}

// ---------------------------------------------------------------------
// simulate

qubit_state initial_state_from(const simulate_opts& opts, const json& script) {
    if (!opts.state.empty()) {
        const auto comma = opts.state.find(',');
        if (comma == std::string::npos)
            throw cli_error(2, "validation", "--state wants two amplitudes 'a,b'");
        const cx a = io::parse_amplitude(opts.state.substr(0, comma));
        const cx b = io::parse_amplitude(opts.state.substr(comma + 1));
        return normalize(a, b);  // any nonzero pair is accepted and scaled
    }
    if (!script.is_object() || !script.contains("initial_state"))
        throw cli_error(2, "validation", "script needs an \"initial_state\"");
    return io::parse_state_json(script["initial_state"].dump());
}

struct step_result {
    std::string kind;
    qubit_state state;
    std::optional<int> outcome;
    std::optional<double> probability;
};

using planned_step = std::function<step_result(const qubit_state&, random_source&)>;

// Validates one script step and captures it as a closure, so a bad step is
// refused before anything runs.
planned_step plan_step(const json& step, int index) {
    if (!step.is_object() || !step.contains("kind") || !step["kind"].is_string())
        throw cli_error(2, "validation", "step needs a string \"kind\"", index);
    const std::string kind = step["kind"].get<std::string>();

    if (kind == "mirror" || kind == "liar" || kind == "dual-mirror") {
        const diagonal_unitary2 u(get_complex(step, "alpha", index),
                                  step.contains("phi") ? get_real(step, "phi", index) : 0.0);
        return [kind, u](const qubit_state& state, random_source&) -> step_result {
            if (kind == "mirror") return {kind, mirror_measure(state, u), {}, {}};
            if (kind == "liar") return {kind, liar_measure(state, u), {}, {}};
            return {kind, dual_basis_mirror(state, u), {}, {}};
        };
    }
    if (kind == "fuzzy") {
        const unitary2 u =
            step.contains("rows")
                ? unitary2::from_matrix(io::parse_mat2_json(step.dump()))
                : unitary2::from_alpha_beta(
                      get_complex(step, "alpha", index), get_complex(step, "beta", index),
                      step.contains("phi") ? get_real(step, "phi", index) : 0.0);
        return [kind, u](const qubit_state& state, random_source&) -> step_result {
            return {kind, fuzzy_measure(state, u), {}, {}};
        };
    }
    if (kind == "project") {
        if (step.contains("basis")) {
            if (!step["basis"].is_number_integer() ||
                (step["basis"].get<int>() != 0 && step["basis"].get<int>() != 1))
                throw cli_error(2, "validation", "\"basis\" must be 0 or 1", index);
            const int basis = step["basis"].get<int>();
            return [kind, basis, index](const qubit_state& state,
                                        random_source&) -> step_result {
                const projection pr = project(state, basis);
                if (pr.probability <= 0.0)
                    throw cli_error(3, "engine", "projection annihilates the state",
                                    index);
                const double inv = 1.0 / std::sqrt(pr.probability);
                return {kind, qubit_state{pr.vec[0] * inv, pr.vec[1] * inv}, basis,
                        pr.probability};
            };
        }
        return [kind](const qubit_state& state, random_source& rng) -> step_result {
            const measurement_record r = projective_measure(state, rng);
            return {kind, r.post_state, r.outcome, r.probability};
        };
    }
    throw cli_error(2, "validation", "unknown step kind '" + kind + "'", index);
}

int run_simulate_impl(const simulate_opts& opts) {
    json script;
    if (!opts.script_path.empty()) script = parse_json_input(opts.script_path);
    if (opts.script_path.empty() && opts.state.empty())
        throw cli_error(1, "usage", "simulate needs a script file or --state");

    const qubit_state initial = [&] {
        try {
            return initial_state_from(opts, script);
        } catch (const validation_error& e) {
            throw cli_error(2, "validation", e.what());
        }
    }();
    std::uint64_t seed = 0;
    if (script.is_object() && script.contains("seed") &&
        script["seed"].is_number_unsigned())
        seed = script["seed"].get<std::uint64_t>();
    if (opts.seed) seed = *opts.seed;

    const json steps = script.is_object() && script.contains("steps")
                           ? script["steps"]
                           : json::array();
    if (!steps.is_array()) throw cli_error(2, "validation", "\"steps\" must be an array");

    // Whole-script validation first; nothing executes if any step is bad.
    std::vector<planned_step> plan;
    int index = 0;
    for (const json& step : steps) {
        try {
            plan.push_back(plan_step(step, index));
        } catch (const validation_error& e) {
            throw cli_error(2, "validation", e.what(), index);
        }
        ++index;
    }

    random_source rng(seed);
    qubit_state state = initial;
    std::vector<step_result> results;
    for (const planned_step& run_step : plan) {
        results.push_back(run_step(state, rng));
        state = results.back().state;
    }

    const bloch_point bloch = bloch_coordinates(state);

    if (opts.json) {
        io::json_writer w;
        w.begin_object();
        w.key("initial_state");
        io::write_state(w, initial);
        w.field("seed", seed);
        w.key("steps").begin_array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const step_result& r = results[i];
            w.begin_object();
            w.field("index", static_cast<std::uint64_t>(i));
            w.field("kind", r.kind);
            if (r.outcome) w.field("outcome", *r.outcome);
            if (r.probability) w.field("probability", *r.probability);
            w.key("state");
            io::write_state(w, r.state);
            w.field("prob0", r.state.prob0());
            w.field("prob1", r.state.prob1());
            w.end_object();
        }
        w.end_array();
        w.key("final").begin_object();
        w.key("state");
        io::write_state(w, state);
        w.field("prob0", state.prob0());
        w.field("prob1", state.prob1());
        w.key("bloch");
        write_bloch(w, bloch);
        w.end_object();
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    const double tol = opts.tolerance;
    std::cout << "initial  " << show_state(initial, tol) << "\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const step_result& r = results[i];
        std::cout << "step " << i << "  " << r.kind;
        if (r.outcome) std::cout << "  outcome=" << *r.outcome;
        if (r.probability) std::cout << "  probability=" << show(*r.probability, tol);
        std::cout << "  ->  " << show_state(r.state, tol) << "\n";
    }
    std::cout << "final    " << show_state(state, tol) << "  bloch(theta="
              << show(bloch.theta, tol) << ", phi=" << show(bloch.phi, tol) << ")\n";
    return 0;
}

// ---------------------------------------------------------------------
// decompose

int run_decompose_impl(const decompose_opts& opts) {
    const mat2 m = [&] {
        try {
            return io::parse_mat2_json(read_input(opts.matrix_path));
        } catch (const validation_error& e) {
            throw cli_error(2, "validation", e.what());
        }
    }();

    const double residual_in = unitarity_deviation(m);
    if (residual_in > construction_tol) {
        std::ostringstream msg;
        msg << "input is not unitary: max |U+U - I| entry = " << residual_in;
        throw cli_error(2, "validation", msg.str());
    }

    const unitary2 u = unitary2::from_matrix(m);
    const euler_angles angles = euler_decompose(u);
    const double residual = max_abs_diff(euler_reconstruct(angles), m);

    const bool diagonal =
        std::abs(m.e01()) <= construction_tol && std::abs(m.e10()) <= construction_tol;
    std::optional<phase_shift> shift;
    if (diagonal) shift = phase_shift_form(diagonal_unitary2(u.su().e00(), u.phase()));

    if (opts.json) {
        io::json_writer w;
        w.begin_object();
        w.key("input");
        io::write_mat2(w, m);
        w.key("euler").begin_object();
        w.field("phi", angles.phase);
        w.field("gamma", angles.gamma);
        w.field("theta", angles.theta);
        w.field("delta", angles.delta);
        w.end_object();
        w.field("residual", residual);
        w.field("diagonal", diagonal);
        if (shift) {
            w.key("phase_shift").begin_object();
            w.field("phi_prime", shift->phase_prime);
            w.field("lambda", shift->lambda);
            w.end_object();
        }
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    const double tol = opts.tolerance;
    std::cout << "euler decomposition  e^(i*phi) Rz(gamma) Ry(theta) Rz(delta)\n"
              << "  phi    = " << show(angles.phase, tol) << "\n"
              << "  gamma  = " << show(angles.gamma, tol) << "\n"
              << "  theta  = " << show(angles.theta, tol) << "\n"
              << "  delta  = " << show(angles.delta, tol) << "\n"
              << "  residual = " << show(residual, tol) << "\n";
    if (shift)
        std::cout << "phase-shift form  e^(i*phi') diag(1, e^(i*lambda))\n"
                  << "  phi'   = " << show(shift->phase_prime, tol) << "\n"
                  << "  lambda = " << show(shift->lambda, tol) << "\n";
    return 0;
}

// ---------------------------------------------------------------------
// fuzzy

void write_generator_triple(io::json_writer& w, const fuzzy::matn& m1,
                            const fuzzy::matn& m2, const fuzzy::matn& m3) {
    w.begin_array();
    for (const fuzzy::matn* m : {&m1, &m2, &m3}) {
        w.begin_array();
        for (std::size_t i = 0; i < m->dim(); ++i) {
            w.begin_array();
            for (std::size_t j = 0; j < m->dim(); ++j) w.value(m->at(i, j));
            w.end_array();
        }
        w.end_array();
    }
    w.end_array();
}

int run_fuzzy_impl(const fuzzy_opts& opts) {
    const fuzzy::su2_irrep irrep = [&] {
        try {
            return fuzzy::build_irrep(opts.n);
        } catch (const validation_error& e) {
            throw cli_error(2, "validation", e.what());
        }
    }();
    const fuzzy::fuzzy_coordinates coords = fuzzy::build_fuzzy_coordinates(opts.n);

    const double commutator_dev = fuzzy::check_commutators(irrep);
    const double hermiticity_dev = fuzzy::hermiticity_deviation(irrep);
    const double radius_dev = fuzzy::radius_deviation(coords);

    // With standard spin generators the unit radius needs k = 2/sqrt(n^2-1);
    // the bare 1/sqrt(n^2-1) form would land the n = 2 coordinates at
    // sigma_i/(2 sqrt(3)) instead of sigma_i/sqrt(3).
    const std::string note =
        "k = 2/sqrt(n^2-1) with standard spin-j generators keeps sum X_i^2 = I "
        "and matches the sigma_i/sqrt(3) coordinates at n = 2";

    if (opts.json) {
        io::json_writer w;
        w.begin_object();
        w.field("n", static_cast<std::uint64_t>(opts.n));
        w.field("k", coords.k);
        w.key("J");
        write_generator_triple(w, irrep.j1, irrep.j2, irrep.j3);
        w.key("X");
        write_generator_triple(w, coords.x1, coords.x2, coords.x3);
        w.field("commutator_deviation", commutator_dev);
        w.field("hermiticity_deviation", hermiticity_dev);
        w.field("radius_deviation", radius_dev);
        w.field("note", note);
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    const double tol = opts.tolerance;
    std::cout << "fuzzy sphere with " << opts.n << " cells\n"
              << "  k = " << show(coords.k, tol) << "\n";
    if (opts.n <= 8) {
        const auto print_matrix = [&](const char* name, const fuzzy::matn& m) {
            std::cout << "  " << name << ":\n";
            for (std::size_t i = 0; i < m.dim(); ++i) {
                std::cout << "    ";
                for (std::size_t j = 0; j < m.dim(); ++j)
                    std::cout << show(m.at(i, j), tol) << (j + 1 < m.dim() ? "  " : "");
                std::cout << "\n";
            }
        };
        print_matrix("X1", coords.x1);
        print_matrix("X2", coords.x2);
        print_matrix("X3", coords.x3);
    } else {
        std::cout << "  (matrices elided in text mode for n > 8; use --json)\n";
    }
    std::cout << "  commutator deviation  = " << show(commutator_dev, tol) << "\n"
              << "  hermiticity deviation = " << show(hermiticity_dev, tol) << "\n"
              << "  radius deviation      = " << show(radius_dev, tol) << "\n"
              << "  note: " << note << "\n";
    return 0;
}

// ---------------------------------------------------------------------
// logic

logic::rule_args args_from_step(const json& step, int index) {
    logic::rule_args args;
    if (step.contains("formula")) {
        if (!step["formula"].is_string())
            throw cli_error(2, "validation", "\"formula\" must be a string", index);
        try {
            args.companion = logic::parse_formula(step["formula"].get<std::string>());
        } catch (const logic::parse_error& e) {
            throw cli_error(2, "validation", e.what(), index);
        }
    }
    if (step.contains("position")) {
        const std::string pos = step["position"].is_string()
                                    ? step["position"].get<std::string>()
                                    : std::string();
        if (pos == "left")
            args.companion_side = logic::rule_args::side::left;
        else if (pos == "right")
            args.companion_side = logic::rule_args::side::right;
        else
            throw cli_error(2, "validation", "\"position\" must be left or right", index);
    }
    return args;
}

void write_tree(io::json_writer& w, const logic::derivation_tree& t) {
    w.begin_object();
    w.field("conclusion", t.conclusion().to_string());
    w.field("rule", t.rule());
    if (!t.note().empty()) w.field("note", t.note());
    w.key("premises").begin_array();
    for (const logic::derivation_tree& c : t.children()) write_tree(w, c);
    w.end_array();
    w.end_object();
}

void write_ledger(io::json_writer& w, const logic::axiom_ledger& ledger) {
    w.begin_array();
    for (const logic::axiom_entry& e : ledger.entries()) {
        w.begin_object();
        w.field("id", e.id);
        w.field("sequent", e.seq.to_string());
        if (e.remaining)
            w.field("remaining", *e.remaining);
        else
            w.field("remaining", "unlimited");
        if (!e.note.empty()) w.field("note", e.note);
        w.end_object();
    }
    w.end_array();
}

void print_ledger(const logic::axiom_ledger& ledger) {
    std::cout << "ledger:\n";
    for (const logic::axiom_entry& e : ledger.entries()) {
        std::cout << "  " << e.id << ": " << e.seq.to_string() << "   [";
        if (e.remaining)
            std::cout << *e.remaining << " use(s) left";
        else
            std::cout << "unlimited";
        if (!e.note.empty()) std::cout << ", " << e.note;
        std::cout << "]\n";
    }
}

int run_logic_impl(const logic_opts& opts) {
    const json script = parse_json_input(opts.script_path);
    if (!script.is_array())
        throw cli_error(2, "validation", "logic script must be a JSON array of steps");

    const logic::observer_id who = [&] {
        try {
            return logic::observer_from_name(opts.profile);
        } catch (const validation_error& e) {
            throw cli_error(1, "usage", e.what());
        }
    }();

    logic::observer_profile profile = logic::make_profile(who);
    if (who == logic::observer_id::G) {
        // The scenario assumes the insider issued her measurement axioms.
        logic::observer_profile p = logic::make_insider_profile();
        logic::issue_axiom(p, profile, logic::ax_truth);
        logic::issue_axiom(p, profile, logic::ax_falsity);
    }
    for (std::size_t i = 0; i < opts.assumptions.size(); ++i) {
        try {
            logic::receive_judgement(logic::observer_id::G, profile,
                                     logic::parse_sequent(opts.assumptions[i]),
                                     "assume_" + std::to_string(i));
        } catch (const logic::parse_error& e) {
            throw cli_error(2, "validation",
                            "--assume '" + opts.assumptions[i] + "': " + e.what());
        } catch (const validation_error& e) {
            throw cli_error(2, "validation", e.what());
        }
    }
    if (opts.allow_cloning) profile.axioms.make_unlimited();

    std::vector<logic::derivation_tree> trees;
    std::vector<bool> referenced;
    int index = 0;
    for (const json& step : script) {
        try {
            if (!step.is_object() || !step.contains("op") || !step["op"].is_string())
                throw cli_error(2, "validation", "step needs an \"op\"", index);
            const std::string op = step["op"].get<std::string>();
            if (op == "axiom") {
                if (!step.contains("id") || !step["id"].is_string())
                    throw cli_error(2, "validation", "axiom step needs an \"id\"", index);
                trees.push_back(logic::use_axiom(profile, step["id"].get<std::string>()));
            } else if (op == "rule") {
                if (!step.contains("name") || !step["name"].is_string())
                    throw cli_error(2, "validation", "rule step needs a \"name\"", index);
                const std::string name = step["name"].get<std::string>();
                const auto rule = logic::rule_from_name(name);
                if (!rule)
                    throw cli_error(2, "validation", "unknown rule '" + name + "'", index);
                std::vector<logic::derivation_tree> premises;
                if (step.contains("premises")) {
                    if (!step["premises"].is_array())
                        throw cli_error(2, "validation", "\"premises\" must be an array",
                                        index);
                    for (const json& p : step["premises"]) {
                        if (!p.is_number_integer() || p.get<int>() < 0 ||
                            p.get<int>() >= static_cast<int>(trees.size()))
                            throw cli_error(2, "validation", "premise index out of range",
                                            index);
                        premises.push_back(trees[p.get<std::size_t>()]);
                        referenced[p.get<std::size_t>()] = true;
                    }
                }
                trees.push_back(logic::apply_rule(profile, *rule, std::move(premises),
                                                  args_from_step(step, index)));
            } else {
                throw cli_error(2, "validation", "unknown op '" + op + "'", index);
            }
            referenced.push_back(false);
        } catch (const logic::axiom_exhausted& e) {
            throw cli_error(3, "engine", e.what(), index);
        } catch (const logic::rule_not_available& e) {
            throw cli_error(3, "engine", e.what(), index);
        } catch (const logic::pattern_mismatch& e) {
            throw cli_error(3, "engine", e.what(), index);
        } catch (const validation_error& e) {
            throw cli_error(2, "validation", e.what(), index);
        }
        ++index;
    }

    if (opts.json) {
        io::json_writer w;
        w.begin_object();
        w.field("profile", opts.profile);
        w.key("results").begin_array();
        for (std::size_t i = 0; i < trees.size(); ++i)
            if (!referenced[i]) write_tree(w, trees[i]);
        w.end_array();
        w.key("ledger");
        write_ledger(w, profile.axioms);
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    std::cout << "profile " << opts.profile << "\n";
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (referenced[i]) continue;
        std::cout << "result (step " << i << "):\n" << trees[i].to_text();
    }
    print_ledger(profile.axioms);
    return 0;
}

// ---------------------------------------------------------------------
// border

int run_border_impl(const border_opts& opts) {
    if (opts.input_bit != 0 && opts.input_bit != 1)
        throw cli_error(1, "usage", "--bit must be 0 or 1");

    random_source rng(opts.seed);

    // A provides the classical input; the preparation applies a Hadamard so
    // the black box really holds a superposition.
    const qubit_state input = basis_state(opts.input_bit);
    const qubit_state prepared = fuzzy_measure(input, unitary2::hadamard_gate());

    // P's reversible move: a mirror measurement with a seeded operator.
    const diagonal_unitary2 mirror_op(rng.unit_complex(),
                                      rng.uniform(0.0, 6.283185307179586));
    const qubit_state mirrored = mirror_measure(prepared, mirror_op);

    logic::observer_profile p = logic::make_insider_profile();
    logic::observer_profile g = logic::make_quantum_profile();
    logic::observer_profile a = logic::make_classical_profile();

    logic::issue_axiom(p, g, logic::ax_truth);
    if (opts.allow_cloning) g.axioms.make_unlimited();

    // G opens the box: a standard measurement, then the cut derivation that
    // matches her outcome.
    const measurement_record observed = projective_measure(mirrored, rng);
    const logic::derivation_tree dropped =
        logic::derive_cut_scenario(g, observed.outcome == 1);
    const std::vector<logic::sequent> empirical =
        logic::post_measurement_judgements(observed.outcome);

    // A hears G's conclusions (A@G holds; A@P does not).
    logic::receive_judgement(logic::observer_id::G, a, dropped.conclusion(), "from_g");
    logic::receive_judgement(logic::observer_id::G, a, empirical[0], "empirical_0");
    logic::receive_judgement(logic::observer_id::G, a, empirical[1], "empirical_1");

    std::optional<logic::cloning_outcome> paradox;
    std::optional<logic::derivation_tree> falsum_tree;
    if (opts.allow_cloning) {
        paradox = logic::cloning_paradox_demo(true);
        logic::receive_judgement(logic::observer_id::G, a, paradox->trees[0].conclusion(),
                                 "cloned_0");
        logic::receive_judgement(logic::observer_id::G, a, paradox->trees[1].conclusion(),
                                 "cloned_1");
        falsum_tree = logic::classical_collapse(a, logic::use_axiom(a, "cloned_0"),
                                                logic::use_axiom(a, "cloned_1"));
    }

    const struct {
        logic::observer_id x, y;
    } pairs[] = {{logic::observer_id::A, logic::observer_id::G},
                 {logic::observer_id::G, logic::observer_id::P},
                 {logic::observer_id::A, logic::observer_id::P}};

    if (opts.json) {
        io::json_writer w;
        w.begin_object();
        w.field("seed", opts.seed);
        w.field("input_bit", opts.input_bit);
        w.key("prepared");
        io::write_state(w, prepared);
        w.key("mirror").begin_object();
        w.key("operator");
        io::write_diagonal(w, mirror_op);
        w.key("state");
        io::write_state(w, mirrored);
        w.field("prob0", mirrored.prob0());
        w.field("prob1", mirrored.prob1());
        w.end_object();
        w.key("measurement").begin_object();
        w.field("outcome", observed.outcome);
        w.field("probability", observed.probability);
        w.end_object();
        w.key("cut_derivation");
        write_tree(w, dropped);
        w.key("empirical").begin_array();
        for (const logic::sequent& s : empirical) w.value(s.to_string());
        w.end_array();
        w.key("a_holds").begin_array();
        for (const logic::axiom_entry& e : a.axioms.entries()) w.value(e.seq.to_string());
        w.end_array();
        if (paradox) {
            w.key("cloning").begin_object();
            w.key("trees").begin_array();
            for (const logic::derivation_tree& t : paradox->trees) write_tree(w, t);
            w.end_array();
            w.key("collapse");
            write_tree(w, *falsum_tree);
            w.end_object();
        }
        w.key("communication").begin_array();
        for (const auto& pr : pairs) {
            w.begin_object();
            w.field("pair", std::string(logic::observer_name(pr.x)) + "@" +
                                std::string(logic::observer_name(pr.y)));
            w.field("holds", logic::can_communicate(pr.x, pr.y));
            w.end_object();
        }
        w.end_array();
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    const double tol = opts.tolerance;
    std::cout << "border scheme (seed " << opts.seed << ")\n"
              << "A provides the classical bit " << opts.input_bit << "\n"
              << "prepared superposition   " << show_state(prepared, tol) << "\n"
              << "P mirror-measures with alpha=" << show(mirror_op.alpha(), tol)
              << " phi=" << show(mirror_op.phase(), tol) << "\n"
              << "  post-mirror state      " << show_state(mirrored, tol) << "\n"
              << "  (probabilities unchanged; P issues her truth axiom to G)\n"
              << "G measures projectively: outcome " << observed.outcome
              << " with probability " << show(observed.probability, tol) << "\n"
              << "G drops the axiom by cut:\n"
              << dropped.to_text() << "G's empirical judgements:\n";
    for (const logic::sequent& s : empirical) std::cout << "  " << s.to_string() << "\n";
    std::cout << "A receives from G:\n";
    for (const logic::axiom_entry& e : a.axioms.entries())
        std::cout << "  " << e.seq.to_string() << "\n";
    if (paradox) {
        std::cout << "with cloning allowed, G rebuilds the contradiction:\n"
                  << paradox->trees[2].to_text() << "and A collapses it to falsum:\n"
                  << falsum_tree->to_text();
    }
    std::cout << "communication:\n";
    for (const auto& pr : pairs)
        std::cout << "  " << logic::observer_name(pr.x) << "@"
                  << logic::observer_name(pr.y) << "  "
                  << (logic::can_communicate(pr.x, pr.y) ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int run_simulate(const simulate_opts& opts) { return run_simulate_impl(opts); }
int run_decompose(const decompose_opts& opts) { return run_decompose_impl(opts); }
int run_fuzzy(const fuzzy_opts& opts) { return run_fuzzy_impl(opts); }
int run_logic(const logic_opts& opts) { return run_logic_impl(opts); }
int run_border(const border_opts& opts) { return run_border_impl(opts); }

} // namespace qmirror::cli
