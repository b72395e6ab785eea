#include "qmirror/measure.hpp"

#include <cmath>

namespace qmirror {

projection project(const qubit_state& psi, int basis) {
    if (basis != 0 && basis != 1) throw validation_error("basis index must be 0 or 1");
    if (basis == 0) return {{psi.a(), cx{0, 0}}, std::norm(psi.a())};
    return {{cx{0, 0}, psi.b()}, std::norm(psi.b())};
}

measurement_record projective_measure(const qubit_state& psi, random_source& rng) {
    const double p0 = psi.prob0();
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    const auto [vec, p] = project(psi, outcome);
    const double inv = 1.0 / std::sqrt(p);
    return {outcome, p, qubit_state{vec[0] * inv, vec[1] * inv}};
}

measurement_record projective_measure(const qubit_state& psi, std::uint64_t seed) {
    random_source rng(seed);
    return projective_measure(psi, rng);
}

qubit_state mirror_measure(const qubit_state& psi, const diagonal_unitary2& u) {
    const cx g = std::polar(1.0, u.phase());
    return {g * u.alpha() * psi.a(), g * std::conj(u.alpha()) * psi.b()};
}

qubit_state mirror_inverse(const qubit_state& psi_prime, const diagonal_unitary2& u) {
    const cx g = std::polar(1.0, -u.phase());
    return {g * std::conj(u.alpha()) * psi_prime.a(), g * u.alpha() * psi_prime.b()};
}

qubit_state liar_measure(const qubit_state& psi, const diagonal_unitary2& u) {
    const cx g = std::polar(1.0, u.phase());
    return {g * std::conj(u.alpha()) * psi.b(), g * u.alpha() * psi.a()};
}

qubit_state fuzzy_measure(const qubit_state& psi, const unitary2& u) {
    const auto v = u.matrix().apply(psi.a(), psi.b());
    return {v[0], v[1]};
}

measurement_record projective_after_mirror(const qubit_state& psi,
                                           const diagonal_unitary2& u, int basis) {
    const qubit_state mirrored = mirror_measure(psi, u);
    const auto [vec, p] = project(mirrored, basis);
    (void)vec;
    return {basis, p, basis_state(basis)};
}

qubit_state dual_basis_mirror(const qubit_state& psi, const diagonal_unitary2& u) {
    const mat2 h = hadamard();
    const mat2 conjugated = h * u.matrix() * h;  // H is its own inverse
    const auto v = conjugated.apply(psi.a(), psi.b());
    return {v[0], v[1]};
}

} // namespace qmirror
