#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qmirror/measure.hpp"

using namespace qmirror;

namespace {

const qubit_state six_eight{cx{0.6, 0}, cx{0.8, 0}};

oracle::v2 as_v2(const qubit_state& s) { return {s.a(), s.b()}; }

} // namespace

TEST_CASE("project applies the basis projector") {
    // Oracle: P0 (0.6, 0.8) by direct matrix-vector multiply.
    const oracle::v2 expected = oracle::apply(oracle::p0, {cx{0.6, 0}, cx{0.8, 0}});
    const projection pr = project(six_eight, 0);
    CHECK(std::abs(pr.vec[0] - expected[0]) == 0.0);
    CHECK(std::abs(pr.vec[1] - expected[1]) == 0.0);
    CHECK(pr.vec[0] == cx{0.6, 0});
    CHECK(pr.probability == doctest::Approx(0.36).epsilon(1e-15));

    // Orthogonal projection annihilates.
    const projection gone = project(basis_state(0), 1);
    CHECK(gone.vec[0] == cx{0, 0});
    CHECK(gone.vec[1] == cx{0, 0});
    CHECK(gone.probability == 0.0);

    const double half = 1.0 / std::sqrt(2.0);
    const projection even = project(qubit_state{cx{half, 0}, cx{half, 0}}, 1);
    CHECK(even.probability == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(project(six_eight, 2), validation_error);
}

TEST_CASE("projective_measure on basis states is deterministic") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 1234567ull}) {
        const measurement_record r0 = projective_measure(basis_state(0), seed);
        CHECK(r0.outcome == 0);
        CHECK(r0.probability == 1.0);
        CHECK(r0.post_state.a() == cx{1, 0});

        const measurement_record r1 = projective_measure(basis_state(1), seed);
        CHECK(r1.outcome == 1);
        CHECK(r1.probability == 1.0);
        CHECK(r1.post_state.b() == cx{1, 0});
    }
}

TEST_CASE("projective_measure collapses with renormalization") {
    random_source rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const measurement_record r = projective_measure(six_eight, rng);
        if (r.outcome == 0) {
            CHECK(r.probability == doctest::Approx(0.36).epsilon(1e-15));
            CHECK(std::abs(r.post_state.a() - cx{1, 0}) < 1e-15);
        } else {
            CHECK(r.probability == doctest::Approx(0.64).epsilon(1e-15));
            CHECK(std::abs(r.post_state.b() - cx{1, 0}) < 1e-15);
        }
    }
}

TEST_CASE("projective_measure keeps the amplitude's phase in the post state") {
    // P_i psi / sqrt(p) retains the measured amplitude's phase.
    const qubit_state s{cx{0, 0.6}, cx{0.8, 0}};
    random_source rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const measurement_record r = projective_measure(s, rng);
        if (r.outcome == 0) CHECK(std::abs(r.post_state.a() - cx{0, 1}) < 1e-15);
    }
}

TEST_CASE("identical seeds reproduce identical outcome sequences") {
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state even{cx{half, 0}, cx{half, 0}};
    for (std::uint64_t seed : {9ull, 99ull, 999ull}) {
        random_source a(seed), b(seed);
        for (int i = 0; i < 50; ++i)
            CHECK(projective_measure(even, a).outcome == projective_measure(even, b).outcome);
    }
}

TEST_CASE("sweeping fresh seeds also converges on the squared amplitudes") {
    // One draw per seed, seeds 0..n-1; exercises the seed-scrambling path.
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state even{cx{half, 0}, cx{half, 0}};
    const int n = 100000;
    int zeros = 0;
    for (int seed = 0; seed < n; ++seed)
        if (projective_measure(even, static_cast<std::uint64_t>(seed)).outcome == 0)
            ++zeros;
    CHECK(std::abs(static_cast<double>(zeros) / n - 0.5) < 0.01);
}

TEST_CASE("Monte-Carlo frequencies track the squared amplitudes") {
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state even{cx{half, 0}, cx{half, 0}};
    random_source rng(2024);
    const int n = 20000;
    int zeros = 0;
    for (int i = 0; i < n; ++i)
        if (projective_measure(even, rng).outcome == 0) ++zeros;
    // 3 sigma of Binomial(n, 1/2).
    const double bound = 3.0 * std::sqrt(0.25 / n);
    CHECK(std::abs(static_cast<double>(zeros) / n - 0.5) < bound);

    // An uneven state converges on its own squared amplitude.
    random_source rng2(2025);
    zeros = 0;
    for (int i = 0; i < n; ++i)
        if (projective_measure(six_eight, rng2).outcome == 0) ++zeros;
    const double bound36 = 3.0 * std::sqrt(0.36 * 0.64 / n);
    CHECK(std::abs(static_cast<double>(zeros) / n - 0.36) < bound36);
}

TEST_CASE("mirror measurement rotates amplitudes without touching probabilities") {
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state even{cx{half, 0}, cx{half, 0}};

    // alpha = i, phi = 0: oracle multiply gives (i/sqrt2, -i/sqrt2).
    const diagonal_unitary2 ui(cx{0, 1}, 0.0);
    const qubit_state rotated = mirror_measure(even, ui);
    const oracle::v2 expected = oracle::apply(oracle::diag_unitary(cx{0, 1}, 0.0),
                                              {cx{half, 0}, cx{half, 0}});
    CHECK(oracle::max_abs_diff(as_v2(rotated), expected) < 1e-16);
    CHECK(std::abs(rotated.a() - cx{0, half}) < 1e-16);
    CHECK(std::abs(rotated.b() - cx{0, -half}) < 1e-16);
    CHECK(rotated.prob0() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rotated.prob1() == doctest::Approx(0.5).epsilon(1e-14));

    // Identity mirror leaves the state alone.
    const diagonal_unitary2 unit(cx{1, 0}, 0.0);
    const qubit_state same = mirror_measure(six_eight, unit);
    CHECK(std::abs(same.a() - six_eight.a()) == 0.0);
    CHECK(std::abs(same.b() - six_eight.b()) == 0.0);

    // Any unit alpha, any phi: probabilities unchanged.
    oracle::sampler rnd(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const diagonal_unitary2 u(rnd.unit_cd(), rnd.angle());
        const qubit_state out = mirror_measure(six_eight, u);
        CHECK(std::abs(out.prob0() - 0.36) < 1e-12);
        CHECK(std::abs(out.prob1() - 0.64) < 1e-12);
    }
}

TEST_CASE("mirror then inverse recovers the state") {
    const diagonal_unitary2 u(std::polar(1.0, 3.141592653589793 / 5.0), 0.3);
    const qubit_state back = mirror_inverse(mirror_measure(six_eight, u), u);
    CHECK(std::abs(back.a() - six_eight.a()) < 1e-12);
    CHECK(std::abs(back.b() - six_eight.b()) < 1e-12);

    const diagonal_unitary2 unit(cx{1, 0}, 0.0);
    const qubit_state same = mirror_inverse(six_eight, unit);
    CHECK(std::abs(same.a() - six_eight.a()) == 0.0);

    oracle::sampler rnd(37);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto sv = rnd.state();
        const qubit_state psi{sv[0], sv[1]};
        const diagonal_unitary2 du(rnd.unit_cd(), rnd.angle());
        const qubit_state roundtrip = mirror_inverse(mirror_measure(psi, du), du);
        CHECK(std::abs(roundtrip.a() - psi.a()) < 1e-12);
        CHECK(std::abs(roundtrip.b() - psi.b()) < 1e-12);
    }
}

TEST_CASE("liar measurement swaps the probabilities") {
    const diagonal_unitary2 unit(cx{1, 0}, 0.0);
    const qubit_state swapped = liar_measure(six_eight, unit);
    CHECK(std::abs(swapped.a() - cx{0.8, 0}) == 0.0);
    CHECK(std::abs(swapped.b() - cx{0.6, 0}) == 0.0);

    // Symmetric state is invariant under the plain swap.
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state even{cx{half, 0}, cx{half, 0}};
    const qubit_state still = liar_measure(even, unit);
    CHECK(std::abs(still.a() - even.a()) == 0.0);
    CHECK(std::abs(still.b() - even.b()) == 0.0);

    // Twice with alpha = 1 is the identity: NOT NOT = I by the oracle.
    CHECK(oracle::max_abs_diff(oracle::mul(oracle::not_gate, oracle::not_gate),
                               oracle::id) == 0.0);
    const qubit_state twice = liar_measure(liar_measure(six_eight, unit), unit);
    CHECK(std::abs(twice.a() - six_eight.a()) == 0.0);
    CHECK(std::abs(twice.b() - six_eight.b()) == 0.0);

    // L = NOT * U against the oracle, and the probability swap, at random.
    oracle::sampler rnd(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto sv = rnd.state();
        const qubit_state psi{sv[0], sv[1]};
        const cx alpha = rnd.unit_cd();
        const double phi = rnd.angle();
        const diagonal_unitary2 du(alpha, phi);
        const qubit_state out = liar_measure(psi, du);
        const oracle::m2 liar = oracle::mul(oracle::not_gate,
                                            oracle::diag_unitary(alpha, phi));
        CHECK(oracle::max_abs_diff(as_v2(out), oracle::apply(liar, sv)) < 1e-15);
        CHECK(std::abs(out.prob0() - psi.prob1()) < 1e-12);
        CHECK(std::abs(out.prob1() - psi.prob0()) < 1e-12);
    }
}

TEST_CASE("fuzzy measurement applies the full unitary") {
    const qubit_state zero = basis_state(0);
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state plus = fuzzy_measure(zero, unitary2::hadamard_gate());
    CHECK(std::abs(plus.a() - cx{half, 0}) < 1e-15);
    CHECK(std::abs(plus.b() - cx{half, 0}) < 1e-15);

    const qubit_state same = fuzzy_measure(six_eight, unitary2::identity());
    CHECK(std::abs(same.a() - six_eight.a()) == 0.0);

    // beta = 0 specializes to the mirror measurement.
    oracle::sampler rnd(43);
    for (int trial = 0; trial < 500; ++trial) {
        const auto sv = rnd.state();
        const qubit_state psi{sv[0], sv[1]};
        const cx alpha = rnd.unit_cd();
        const double phi = rnd.angle();
        const qubit_state via_fuzzy =
            fuzzy_measure(psi, unitary2::from_alpha_beta(alpha, cx{0, 0}, phi));
        const qubit_state via_mirror = mirror_measure(psi, diagonal_unitary2(alpha, phi));
        CHECK(std::abs(via_fuzzy.a() - via_mirror.a()) < 1e-12);
        CHECK(std::abs(via_fuzzy.b() - via_mirror.b()) < 1e-12);
    }

    // General case against the oracle multiply.
    for (int trial = 0; trial < 500; ++trial) {
        const auto sv = rnd.state();
        const auto [alpha, beta, phi] = rnd.unitary();
        const qubit_state out =
            fuzzy_measure(qubit_state{sv[0], sv[1]}, unitary2::from_alpha_beta(alpha, beta, phi));
        const oracle::v2 expected = oracle::apply(oracle::general_unitary(alpha, beta, phi), sv);
        CHECK(oracle::max_abs_diff(as_v2(out), expected) < 1e-15);
    }
}

TEST_CASE("standard measurement after a mirror sees the original probabilities") {
    oracle::sampler rnd(47);
    for (int trial = 0; trial < 200; ++trial) {
        const diagonal_unitary2 u(rnd.unit_cd(), rnd.angle());
        const measurement_record r = projective_after_mirror(six_eight, u, 0);
        CHECK(r.outcome == 0);
        CHECK(std::abs(r.probability - 0.36) < 1e-12);
        CHECK(r.post_state.a() == cx{1, 0});
        CHECK(r.post_state.b() == cx{0, 0});
    }

    const measurement_record sure =
        projective_after_mirror(basis_state(0), diagonal_unitary2(cx{0, 1}, 0.7), 0);
    CHECK(sure.probability == doctest::Approx(1.0).epsilon(1e-14));

    // Liar then projector onto |0>: probability comes from the swapped side.
    const diagonal_unitary2 unit(cx{1, 0}, 0.0);
    const projection after_liar = project(liar_measure(six_eight, unit), 0);
    CHECK(std::abs(after_liar.probability - 0.64) < 1e-15);
}

TEST_CASE("dual-basis mirror equals the projector superposition") {
    // |+> keeps its dual-basis probabilities under any dual mirror.
    const double half = 1.0 / std::sqrt(2.0);
    const qubit_state plus{cx{half, 0}, cx{half, 0}};
    const mat2 hp = projector2::onto_dual(0).matrix();
    oracle::sampler rnd(53);
    for (int trial = 0; trial < 200; ++trial) {
        const diagonal_unitary2 u(rnd.unit_cd(), rnd.angle());
        const qubit_state out = dual_basis_mirror(plus, u);
        const auto projected = hp.apply(out.a(), out.b());
        const double p_plus = std::norm(projected[0]) + std::norm(projected[1]);
        CHECK(std::abs(p_plus - 1.0) < 1e-12);
    }

    // alpha = 1 is the identity.
    const qubit_state same = dual_basis_mirror(six_eight, diagonal_unitary2(cx{1, 0}, 0.0));
    CHECK(std::abs(same.a() - six_eight.a()) < 1e-15);
    CHECK(std::abs(same.b() - six_eight.b()) < 1e-15);

    // Conjugation form vs e^{i phi}(alpha P+ + conj(alpha) P-), by the oracle.
    for (int trial = 0; trial < 1000; ++trial) {
        const auto sv = rnd.state();
        const cx alpha = rnd.unit_cd();
        const double phi = rnd.angle();
        const qubit_state out = dual_basis_mirror(qubit_state{sv[0], sv[1]},
                                                  diagonal_unitary2(alpha, phi));
        const oracle::m2 h = oracle::hadamard();
        const oracle::m2 pplus = oracle::mul(oracle::mul(h, oracle::p0), h);
        const oracle::m2 pminus = oracle::mul(oracle::mul(h, oracle::p1), h);
        const oracle::m2 superposed = oracle::smul(
            std::polar(1.0, phi),
            oracle::add(oracle::smul(alpha, pplus), oracle::smul(std::conj(alpha), pminus)));
        CHECK(oracle::max_abs_diff(as_v2(out), oracle::apply(superposed, sv)) < 1e-12);
    }
}
