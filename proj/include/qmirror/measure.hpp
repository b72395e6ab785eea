// Measurement operations on a single qubit.
//
// Four schemes live here:
//   - projective: apply one basis projector, renormalize; irreversible.
//   - mirror: apply a diagonal unitary; probabilities untouched, reversible.
//   - liar: NOT after a diagonal unitary; probabilities swapped, reversible.
//   - fuzzy: apply a general unitary; probability amplitudes mixed.
// All functions are pure; the only state is the caller's random_source.

#pragma once

#include <array>

#include "qmirror/qubit.hpp"
#include "qmirror/rng.hpp"

namespace qmirror {

// P_i applied to psi, before renormalization, plus |P_i psi|^2.
struct projection {
    std::array<cx, 2> vec;
    double probability;
};

projection project(const qubit_state& psi, int basis);

// Draws the outcome from rng: outcome i with probability |P_i psi|^2,
// post state P_i psi / sqrt(p). The zero-probability branch can never be
// drawn: the uniform variate lies in [0,1) and the other branch then has
// probability 1.
measurement_record projective_measure(const qubit_state& psi, random_source& rng);
measurement_record projective_measure(const qubit_state& psi, std::uint64_t seed);

// (e^{i phi} alpha a, e^{i phi} conj(alpha) b). Probabilities unchanged.
qubit_state mirror_measure(const qubit_state& psi, const diagonal_unitary2& u);

// Undoes mirror_measure with the same operator.
qubit_state mirror_inverse(const qubit_state& psi_prime, const diagonal_unitary2& u);

// NOT * U: (e^{i phi} conj(alpha) b, e^{i phi} alpha a). Probabilities swap.
qubit_state liar_measure(const qubit_state& psi, const diagonal_unitary2& u);

// Full unitary applied to psi.
qubit_state fuzzy_measure(const qubit_state& psi, const unitary2& u);

// Standard measurement of basis index i after a mirror measurement. The
// probability equals |P_i psi|^2 of the original state; the collapse lands
// on the basis state itself (the leftover phase is global and dropped).
measurement_record projective_after_mirror(const qubit_state& psi,
                                           const diagonal_unitary2& u, int basis);

// The mirror operator conjugated into the dual basis: H U H^-1 applied to
// psi. Equals e^{i phi}(alpha P+ + conj(alpha) P-).
qubit_state dual_basis_mirror(const qubit_state& psi, const diagonal_unitary2& u);

} // namespace qmirror
