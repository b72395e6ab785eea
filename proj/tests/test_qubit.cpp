#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracle.hpp"
#include "qmirror/qubit.hpp"

using namespace qmirror;

namespace {
const double nan_d = std::numeric_limits<double>::quiet_NaN();
const double inf_d = std::numeric_limits<double>::infinity();
}

TEST_CASE("qubit_state enforces normalization at construction") {
    CHECK_NOTHROW(qubit_state(cx{1, 0}, cx{0, 0}));
    CHECK_NOTHROW(qubit_state(cx{0.6, 0}, cx{0, 0.8}));
    CHECK_THROWS_AS(qubit_state(cx{1, 0}, cx{1, 0}), validation_error);
    CHECK_THROWS_AS(qubit_state(cx{0.6, 0}, cx{0.8001, 0}), validation_error);
    // Within tolerance 1e-12 passes, beyond does not.
    CHECK_NOTHROW(qubit_state(cx{1.0 + 4e-13, 0}, cx{0, 0}));
    CHECK_THROWS_AS(qubit_state(cx{1.0 + 1e-11, 0}, cx{0, 0}), validation_error);
}

TEST_CASE("non-finite amplitudes never enter") {
    CHECK_THROWS_AS(qubit_state(cx{nan_d, 0}, cx{0, 0}), validation_error);
    CHECK_THROWS_AS(qubit_state(cx{1, 0}, cx{0, inf_d}), validation_error);
    CHECK_THROWS_AS(normalize(cx{nan_d, 0}, cx{1, 0}), validation_error);
    CHECK_THROWS_AS(mat2(cx{inf_d, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}), validation_error);
    CHECK_THROWS_AS(diagonal_unitary2(cx{1, 0}, nan_d), validation_error);
}

TEST_CASE("normalize scales onto the unit sphere") {
    const qubit_state already = normalize(cx{1, 0}, cx{0, 0});
    CHECK(already.a() == cx{1, 0});
    CHECK(already.b() == cx{0, 0});

    const qubit_state scaled = normalize(cx{2, 0}, cx{0, 0});
    CHECK(scaled.a() == cx{1, 0});

    // Oracle: direct norm computation for (1, 1).
    const double expected = 1.0 / std::sqrt(1.0 * 1.0 + 1.0 * 1.0);
    const qubit_state diag = normalize(cx{1, 0}, cx{1, 0});
    CHECK(diag.a().real() == doctest::Approx(expected).epsilon(1e-15));
    CHECK(diag.b().real() == doctest::Approx(expected).epsilon(1e-15));
    CHECK(diag.a().real() == doctest::Approx(0.70710678118654752).epsilon(1e-15));

    CHECK_THROWS_AS(normalize(cx{0, 0}, cx{0, 0}), validation_error);

    // Extreme magnitudes neither overflow nor flush to zero.
    const qubit_state huge = normalize(cx{1e200, 0}, cx{1e200, 0});
    CHECK(huge.a().real() == doctest::Approx(expected).epsilon(1e-15));
    const qubit_state tiny = normalize(cx{0, 3e-300}, cx{4e-300, 0});
    CHECK(std::abs(tiny.a()) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(std::abs(tiny.b()) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("normalize preserves direction") {
    oracle::sampler rnd(11);
    for (int trial = 0; trial < 200; ++trial) {
        const cx a = rnd.gaussian_cd();
        const cx b = rnd.gaussian_cd();
        if (std::norm(a) + std::norm(b) < 1e-12) continue;
        const qubit_state s = normalize(a, b);
        // Cross product of (a, b) and (s.a, s.b) vanishes iff parallel.
        CHECK(std::abs(a * s.b() - b * s.a()) < 1e-12);
        CHECK(std::norm(s.a()) + std::norm(s.b()) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("projector algebra is exact") {
    const mat2 p0 = projector2::onto_basis(0).matrix();
    const mat2 p1 = projector2::onto_basis(1).matrix();

    CHECK(max_abs_diff(p0 * p1, mat2{}) == 0.0);
    CHECK(max_abs_diff(p1 * p0, mat2{}) == 0.0);
    CHECK(max_abs_diff(p0 * p0, p0) == 0.0);
    CHECK(max_abs_diff(p1 * p1, p1) == 0.0);
    CHECK(max_abs_diff(p0 + p1, mat2::identity()) == 0.0);
    CHECK(max_abs_diff(p0.adjoint(), p0) == 0.0);
    CHECK(max_abs_diff(p1.adjoint(), p1) == 0.0);
}

TEST_CASE("projector2 rejects non-projectors") {
    CHECK_THROWS_AS(projector2{hadamard()}, validation_error);  // not idempotent
    // Idempotent but not Hermitian: [[1, 1], [0, 0]].
    CHECK_THROWS_AS(projector2(mat2{cx{1, 0}, cx{1, 0}, cx{0, 0}, cx{0, 0}}),
                    validation_error);
}

TEST_CASE("truth-value exchangers act exactly") {
    // Q0 = NOT P0 sends |0> to |1> and kills |1>; Q1 mirrors that.
    const auto q0v0 = q0().apply(cx{1, 0}, cx{0, 0});
    CHECK(q0v0[0] == cx{0, 0});
    CHECK(q0v0[1] == cx{1, 0});
    const auto q0v1 = q0().apply(cx{0, 0}, cx{1, 0});
    CHECK(q0v1[0] == cx{0, 0});
    CHECK(q0v1[1] == cx{0, 0});
    const auto q1v1 = q1().apply(cx{0, 0}, cx{1, 0});
    CHECK(q1v1[0] == cx{1, 0});
    CHECK(q1v1[1] == cx{0, 0});
    const auto q1v0 = q1().apply(cx{1, 0}, cx{0, 0});
    CHECK(q1v0[0] == cx{0, 0});
    CHECK(q1v0[1] == cx{0, 0});

    // Against the oracle's literal matrices.
    CHECK(q0().e10() == cx{1, 0});
    CHECK(oracle::max_abs_diff(oracle::mul(oracle::not_gate, oracle::p0),
                               oracle::m2{q0().e00(), q0().e01(), q0().e10(), q0().e11()}) ==
          0.0);
}

TEST_CASE("unitary2 validates and factors") {
    CHECK_THROWS_AS(unitary2::from_matrix(mat2{cx{1, 0}, cx{2, 0}, cx{3, 0}, cx{4, 0}}),
                    validation_error);
    CHECK_THROWS_AS(unitary2::from_alpha_beta(cx{1, 0}, cx{1, 0}, 0.0), validation_error);

    const unitary2 h = unitary2::hadamard_gate();
    CHECK(max_abs_diff(h.matrix(), hadamard()) < 1e-15);
    CHECK(std::abs(h.su().det() - cx{1, 0}) < 1e-15);

    oracle::sampler rnd(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [alpha, beta, phi] = rnd.unitary();
        const unitary2 u = unitary2::from_alpha_beta(alpha, beta, phi);
        const oracle::m2 ref = oracle::general_unitary(alpha, beta, phi);
        CHECK(oracle::max_abs_diff(
                  ref, {u.matrix().e00(), u.matrix().e01(), u.matrix().e10(),
                        u.matrix().e11()}) < 1e-15);
        // Round-trip through the matrix factorization.
        const unitary2 refactored = unitary2::from_matrix(u.matrix());
        CHECK(max_abs_diff(refactored.matrix(), u.matrix()) < 1e-12);
    }
}

TEST_CASE("diagonal_unitary2 requires unit alpha") {
    CHECK_NOTHROW(diagonal_unitary2(cx{0, 1}, 0.3));
    CHECK_THROWS_AS(diagonal_unitary2(cx{0.5, 0}, 0.0), validation_error);
    const diagonal_unitary2 u(cx{0, 1}, 0.0);
    CHECK(u.matrix().e00() == cx{0, 1});
    CHECK(u.matrix().e11() == cx{0, -1});
    CHECK(u.matrix().e01() == cx{0, 0});
}

TEST_CASE("dual-basis projectors are projectors") {
    const mat2 plus = projector2::onto_dual(0).matrix();
    const mat2 minus = projector2::onto_dual(1).matrix();
    CHECK(max_abs_diff(plus + minus, mat2::identity()) < 1e-15);
    CHECK(max_abs_diff(plus * minus, mat2{}) < 1e-15);
    // P+ = H P0 H^-1 against the oracle.
    const oracle::m2 ref = oracle::mul(oracle::mul(oracle::hadamard(), oracle::p0),
                                       oracle::hadamard());
    CHECK(oracle::max_abs_diff(ref, {plus.e00(), plus.e01(), plus.e10(), plus.e11()}) <
          1e-15);
}

TEST_CASE("basis_state and amplitude access") {
    CHECK(basis_state(0).a() == cx{1, 0});
    CHECK(basis_state(1).b() == cx{1, 0});
    CHECK_THROWS_AS(basis_state(2), validation_error);
    const qubit_state s{cx{0.6, 0}, cx{0, 0.8}};
    CHECK(s.amplitude(0) == cx{0.6, 0});
    CHECK(s.amplitude(1) == cx{0, 0.8});
    CHECK(s.prob0() == doctest::Approx(0.36).epsilon(1e-15));
    CHECK(s.prob1() == doctest::Approx(0.64).epsilon(1e-15));
}
