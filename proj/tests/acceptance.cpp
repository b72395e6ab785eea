// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line with its runtime. Tolerances are pinned here, not
// configurable. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qmirror/decompose.hpp"
#include "qmirror/fuzzy_sphere.hpp"
#include "qmirror/measure.hpp"
#include "qmirror/scenarios.hpp"

using namespace qmirror;

namespace {

struct harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& name, double budget_seconds,
             const std::function<std::string()>& body) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (detail.empty() && budget_seconds > 0.0 && elapsed > budget_seconds)
            detail = "runtime " + std::to_string(elapsed) + " s exceeds budget of " +
                     std::to_string(budget_seconds) + " s";
        if (detail.empty()) {
            std::printf("[PASS] %2d. %s (%.3f s)\n", index, name.c_str(), elapsed);
        } else {
            std::printf("[FAIL] %2d. %s (%.3f s): %s\n", index, name.c_str(), elapsed,
                        detail.c_str());
            ++failures;
        }
    }
};

std::string check(bool ok, const std::string& message) { return ok ? "" : message; }

const qubit_state six_eight{cx{0.6, 0}, cx{0.8, 0}};

// 1. Mirror measurements leave both probabilities unchanged.
std::string mirror_preservation() {
    oracle::sampler rnd(1001);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto sv = rnd.state();
        const qubit_state psi{sv[0], sv[1]};
        const qubit_state out = mirror_measure(psi, {rnd.unit_cd(), rnd.angle()});
        worst = std::max(worst, std::abs(out.prob0() - psi.prob0()));
        worst = std::max(worst, std::abs(out.prob1() - psi.prob1()));
    }
    return check(worst < 1e-12, "probability drift " + std::to_string(worst));
}

// 2. The inverse operator recovers the pre-mirror state componentwise.
std::string mirror_reversibility() {
    oracle::sampler rnd(1002);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto sv = rnd.state();
        const qubit_state psi{sv[0], sv[1]};
        const diagonal_unitary2 u(rnd.unit_cd(), rnd.angle());
        const qubit_state back = mirror_inverse(mirror_measure(psi, u), u);
        worst = std::max(worst, std::abs(back.a() - psi.a()));
        worst = std::max(worst, std::abs(back.b() - psi.b()));
    }
    return check(worst < 1e-12, "round-trip error " + std::to_string(worst));
}

// 3. The liar measurement interchanges the two probabilities.
std::string liar_swap() {
    oracle::sampler rnd(1003);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto sv = rnd.state();
        const qubit_state psi{sv[0], sv[1]};
        const qubit_state out = liar_measure(psi, {rnd.unit_cd(), rnd.angle()});
        worst = std::max(worst, std::abs(out.prob0() - psi.prob1()));
        worst = std::max(worst, std::abs(out.prob1() - psi.prob0()));
    }
    if (worst >= 1e-12) return "swap error " + std::to_string(worst);

    const projection pr =
        project(liar_measure(six_eight, {cx{1, 0}, 0.0}), 0);
    return check(std::abs(pr.probability - 0.64) < 1e-12,
                 "liar-then-projector probability " + std::to_string(pr.probability));
}

// 4. Projective measurement after a mirror: original probability, pole state.
std::string composed_measurement() {
    oracle::sampler rnd(1004);
    for (int i = 0; i < 100; ++i) {
        const measurement_record r =
            projective_after_mirror(six_eight, {rnd.unit_cd(), rnd.angle()}, 0);
        if (std::abs(r.probability - 0.36) >= 1e-12)
            return "probability " + std::to_string(r.probability);
        if (r.post_state.a() != cx{1, 0} || r.post_state.b() != cx{0, 0})
            return "post state is not |0>";
    }
    return "";
}

// 5. Projector algebra and the truth-value exchangers, exact.
std::string projector_algebra() {
    const mat2 p0 = projector2::onto_basis(0).matrix();
    const mat2 p1 = projector2::onto_basis(1).matrix();
    if (max_abs_diff(p0 * p1, mat2{}) != 0.0) return "P0 P1 != 0";
    if (max_abs_diff(p1 * p0, mat2{}) != 0.0) return "P1 P0 != 0";
    if (max_abs_diff(p0 * p0, p0) != 0.0) return "P0 not idempotent";
    if (max_abs_diff(p1 * p1, p1) != 0.0) return "P1 not idempotent";
    if (max_abs_diff(p0 + p1, mat2::identity()) != 0.0) return "P0 + P1 != I";
    if (max_abs_diff(p0.adjoint(), p0) != 0.0) return "P0 not Hermitian";
    if (max_abs_diff(p1.adjoint(), p1) != 0.0) return "P1 not Hermitian";

    const auto q0v = q0().apply(cx{1, 0}, cx{0, 0});
    const auto q0k = q0().apply(cx{0, 0}, cx{1, 0});
    const auto q1v = q1().apply(cx{0, 0}, cx{1, 0});
    const auto q1k = q1().apply(cx{1, 0}, cx{0, 0});
    const bool exchange = q0v[0] == cx{0, 0} && q0v[1] == cx{1, 0} &&
                          q0k[0] == cx{0, 0} && q0k[1] == cx{0, 0} &&
                          q1v[0] == cx{1, 0} && q1v[1] == cx{0, 0} &&
                          q1k[0] == cx{0, 0} && q1k[1] == cx{0, 0};
    return check(exchange, "Q0/Q1 do not exchange the basis states exactly");
}

// 6. Euler reconstruction on 1000 random unitaries; phase-shift relations.
std::string decomposition_roundtrips() {
    oracle::sampler rnd(1006);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto [alpha, beta, phi] = rnd.unitary();
        const unitary2 u = unitary2::from_alpha_beta(alpha, beta, phi);
        const euler_angles a = euler_decompose(u);
        const oracle::m2 rebuilt = oracle::smul(
            std::polar(1.0, a.phase),
            oracle::mul(oracle::rz(a.gamma),
                        oracle::mul(oracle::ry(a.theta), oracle::rz(a.delta))));
        const mat2 m = u.matrix();
        worst = std::max(worst, oracle::max_abs_diff(
                                    rebuilt, {m.e00(), m.e01(), m.e10(), m.e11()}));
    }
    if (worst >= 1e-10) return "euler residual " + std::to_string(worst);

    // Phase-shift form: exact reconstruction and the angle relations with
    // alpha = e^{-i delta}. The overall phase relation is checked on the
    // unit circle, where e^{i phi'} = e^{i phi} alpha.
    for (int i = 0; i < 1000; ++i) {
        const cx alpha = rnd.unit_cd();
        const double phi = rnd.angle();
        const diagonal_unitary2 u(alpha, phi);
        const phase_shift p = phase_shift_form(u);
        if (max_abs_diff(phase_shift_reconstruct(p), u.matrix()) >= 1e-12)
            return "phase-shift reconstruction off";
        const double delta = -std::arg(alpha);
        if (std::abs(p.lambda - 2.0 * delta) >= 1e-12)
            return "lambda != 2 delta";
        if (std::abs(std::polar(1.0, p.phase_prime) - std::polar(1.0, phi) * alpha) >=
            1e-12)
            return "phase' does not absorb alpha";
    }
    return "";
}

// 7. Mirror conjugated into the dual basis equals the P+/P- superposition,
//    entrywise: the operator's columns are its action on the basis states.
std::string dual_basis_equivalence() {
    oracle::sampler rnd(1007);
    const oracle::m2 h = oracle::hadamard();
    const oracle::m2 pplus = oracle::mul(oracle::mul(h, oracle::p0), h);
    const oracle::m2 pminus = oracle::mul(oracle::mul(h, oracle::p1), h);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const cx alpha = rnd.unit_cd();
        const double phi = rnd.angle();
        const diagonal_unitary2 u(alpha, phi);
        const qubit_state col0 = dual_basis_mirror(basis_state(0), u);
        const qubit_state col1 = dual_basis_mirror(basis_state(1), u);
        const oracle::m2 conjugated{col0.a(), col1.a(), col0.b(), col1.b()};
        const oracle::m2 superposed = oracle::smul(
            std::polar(1.0, phi),
            oracle::add(oracle::smul(alpha, pplus),
                        oracle::smul(std::conj(alpha), pminus)));
        worst = std::max(worst, oracle::max_abs_diff(conjugated, superposed));
    }
    return check(worst < 1e-12, "constructions differ by " + std::to_string(worst));
}

// 8. Fuzzy sphere invariants for n = 2..16.
std::string fuzzy_sphere_invariants() {
    for (std::size_t n = 2; n <= 16; ++n) {
        const fuzzy::su2_irrep irrep = fuzzy::build_irrep(n);
        if (fuzzy::check_commutators(irrep) >= 1e-12)
            return "commutators fail at n = " + std::to_string(n);
        const fuzzy::fuzzy_coordinates coords = fuzzy::build_fuzzy_coordinates(n);
        if (fuzzy::radius_deviation(coords) >= 1e-11)
            return "radius fails at n = " + std::to_string(n);
    }
    const fuzzy::fuzzy_coordinates two = fuzzy::build_fuzzy_coordinates(2);
    const double s = 1.0 / std::sqrt(3.0);
    const double dev = std::max(
        {std::abs(two.x1.at(0, 1) - cx{s, 0}), std::abs(two.x1.at(1, 0) - cx{s, 0}),
         std::abs(two.x2.at(0, 1) - cx{0, -s}), std::abs(two.x2.at(1, 0) - cx{0, s}),
         std::abs(two.x3.at(0, 0) - cx{s, 0}), std::abs(two.x3.at(1, 1) + cx{s, 0}),
         std::abs(two.x1.at(0, 0)), std::abs(two.x1.at(1, 1)),
         std::abs(two.x2.at(0, 0)), std::abs(two.x2.at(1, 1)),
         std::abs(two.x3.at(0, 1)), std::abs(two.x3.at(1, 0))});
    return check(dev < 1e-15,
                 "n = 2 coordinates stray from sigma_i/sqrt(3) by " + std::to_string(dev));
}

// 9. The cut derivation prints the canonical transcript node for node, and
//    the ledger refuses a second use.
std::string cut_derivation_golden() {
    logic::observer_profile p = logic::make_insider_profile();
    logic::observer_profile g = logic::make_quantum_profile();
    logic::issue_axiom(p, g, logic::ax_truth);

    const logic::derivation_tree tree = logic::derive_cut_scenario(g);
    const std::string golden = "|- A   [cut]\n"
                               "  |- A & A^   [axiom(truth)]\n"
                               "  A & A^ |- A   [and_left]\n"
                               "    A |- A   [identity]\n";
    if (tree.to_text() != golden)
        return "transcript mismatch:\n" + tree.to_text();

    try {
        logic::derive_cut_scenario(g);
        return "second use of the truth axiom was not refused";
    } catch (const logic::axiom_exhausted&) {
        return "";
    }
}

// 10. Cloning paradox: allowed -> |- A & A^ and then falsum under A;
//     forbidden -> bounded search from G's resources never reaches falsum.
std::string cloning_paradox() {
    const logic::cloning_outcome allowed = logic::cloning_paradox_demo(true);
    if (!allowed.contradiction_reached ||
        allowed.trees.back().conclusion() != logic::parse_sequent("|- A & A^"))
        return "contradiction not rebuilt under cloning";

    logic::observer_profile a = logic::make_classical_profile();
    const logic::derivation_tree falsum =
        logic::classical_collapse(a, allowed.trees[0], allowed.trees[1]);
    if (falsum.conclusion() != logic::parse_sequent("|- _|_"))
        return "A failed to derive falsum";

    const logic::cloning_outcome blocked = logic::cloning_paradox_demo(false);
    if (blocked.contradiction_reached || blocked.halt.empty())
        return "ledger failed to halt the second derivation";

    // Exhaustive closure at depth 4 over G's granted resources.
    logic::observer_profile p = logic::make_insider_profile();
    logic::observer_profile g = logic::make_quantum_profile();
    logic::issue_axiom(p, g, logic::ax_truth);
    logic::issue_axiom(p, g, logic::ax_falsity);
    for (const logic::derived_fact& f : logic::saturate(g, {}))
        if (f.seq == logic::parse_sequent("|- _|_")) return "search reached falsum";
    return "";
}

// 11. The communication table.
std::string communication_relation() {
    using logic::can_communicate;
    using logic::observer_id;
    const bool ok = can_communicate(observer_id::A, observer_id::G) &&
                    can_communicate(observer_id::G, observer_id::A) &&
                    can_communicate(observer_id::G, observer_id::P) &&
                    can_communicate(observer_id::P, observer_id::G) &&
                    !can_communicate(observer_id::A, observer_id::P) &&
                    !can_communicate(observer_id::P, observer_id::A);
    return check(ok, "table does not match {A@G, G@P} with A@P failing");
}

// 12. Monte-Carlo sanity on the even superposition.
std::string monte_carlo_sanity() {
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state even{cx{half, 0}, cx{half, 0}};
    random_source rng(20240229);
    const int n = 100000;
    int zeros = 0;
    for (int i = 0; i < n; ++i)
        if (projective_measure(even, rng).outcome == 0) ++zeros;
    const double freq = static_cast<double>(zeros) / n;
    return check(std::abs(freq - 0.5) < 0.005,
                 "outcome-0 frequency " + std::to_string(freq));
}

} // namespace

int main() {
    harness h;
    h.run("mirror preserves probabilities (1000 random trials)", 1.0,
          mirror_preservation);
    h.run("mirror inverse recovers the state (1000 random trials)", 0.0,
          mirror_reversibility);
    h.run("liar interchanges probabilities; liar-then-projector gives 0.64", 0.0,
          liar_swap);
    h.run("projective after mirror: probability 0.36, post state |0>", 0.0,
          composed_measurement);
    h.run("projector algebra and truth-value exchange, exact", 0.0, projector_algebra);
    h.run("euler and phase-shift decompositions round-trip", 0.0,
          decomposition_roundtrips);
    h.run("dual-basis mirror equals the projector superposition", 0.0,
          dual_basis_equivalence);
    h.run("fuzzy sphere: commutators, unit radius, n = 2 coordinates", 1.0,
          fuzzy_sphere_invariants);
    h.run("cut derivation matches the golden transcript; reuse refused", 0.0,
          cut_derivation_golden);
    h.run("cloning paradox: contradiction iff cloning is allowed", 5.0,
          cloning_paradox);
    h.run("communication relation is exactly {A@G, G@P}", 0.0, communication_relation);
    h.run("Monte-Carlo outcome frequency within 0.5 +/- 0.005", 2.0,
          monte_carlo_sanity);

    if (h.failures == 0) {
        std::printf("all %d criteria passed\n", h.index);
        return 0;
    }
    std::printf("%d of %d criteria FAILED\n", h.failures, h.index);
    return 1;
}
