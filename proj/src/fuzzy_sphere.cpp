#include "qmirror/fuzzy_sphere.hpp"

#include <cmath>
#include <string>

namespace qmirror::fuzzy {

namespace {

void require_dimension(std::size_t n) {
    if (n < 2) throw validation_error("irrep dimension must be at least 2");
    if (n > max_dimension)
        throw validation_error("irrep dimension exceeds cap of " +
                               std::to_string(max_dimension));
}

} // namespace

su2_irrep build_irrep(std::size_t n) {
    require_dimension(n);
    const double j = (static_cast<double>(n) - 1.0) / 2.0;

    // Basis index i holds m = j - i. The raising operator connects
    // |j,m> -> |j,m+1>, i.e. column i to row i-1, with the usual
    // sqrt(j(j+1) - m(m+1)) matrix element.
    matn raise(n), lower(n), j3(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double m = j - static_cast<double>(i);
        j3.at(i, i) = cx{m, 0};
        if (i > 0) {
            const double c = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
            raise.at(i - 1, i) = cx{c, 0};
            lower.at(i, i - 1) = cx{c, 0};
        }
    }

    matn j1 = scale(cx{0.5, 0}, add(raise, lower));
    matn j2 = scale(cx{0, -0.5}, sub(raise, lower));
    return {n, std::move(j1), std::move(j2), std::move(j3)};
}

double unit_radius_k(std::size_t n) {
    require_dimension(n);
    return 2.0 / std::sqrt(static_cast<double>(n) * static_cast<double>(n) - 1.0);
}

fuzzy_coordinates build_fuzzy_coordinates(std::size_t n) {
    su2_irrep irrep = build_irrep(n);
    const double k = unit_radius_k(n);
    const cx ck{k, 0};
    return {n, k, scale(ck, irrep.j1), scale(ck, irrep.j2), scale(ck, irrep.j3)};
}

std::uint64_t cell_count(unsigned num_qubits) {
    if (num_qubits < 1) throw validation_error("register needs at least one qubit");
    if (num_qubits >= 64)
        throw validation_error("cell count 2^" + std::to_string(num_qubits) +
                               " overflows 64-bit range");
    return std::uint64_t{1} << num_qubits;
}

double check_commutators(const su2_irrep& irrep) {
    const cx i_unit{0, 1};
    double worst = 0.0;
    const matn* gen[3] = {&irrep.j1, &irrep.j2, &irrep.j3};
    // Cyclic pairs; the reversed pairs deviate by the same amount.
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        const int c = (a + 2) % 3;
        const matn lhs = commutator(*gen[a], *gen[b]);
        worst = std::max(worst, max_abs_diff(lhs, scale(i_unit, *gen[c])));
    }
    return worst;
}

double hermiticity_deviation(const su2_irrep& irrep) {
    double worst = fuzzy::hermiticity_deviation(irrep.j1);
    worst = std::max(worst, fuzzy::hermiticity_deviation(irrep.j2));
    worst = std::max(worst, fuzzy::hermiticity_deviation(irrep.j3));
    return worst;
}

matn casimir(const su2_irrep& irrep) {
    matn sum = multiply(irrep.j1, irrep.j1);
    sum = add(sum, multiply(irrep.j2, irrep.j2));
    sum = add(sum, multiply(irrep.j3, irrep.j3));
    return sum;
}

double radius_deviation(const fuzzy_coordinates& coords) {
    matn sum = multiply(coords.x1, coords.x1);
    sum = add(sum, multiply(coords.x2, coords.x2));
    sum = add(sum, multiply(coords.x3, coords.x3));
    return max_abs_diff(sum, matn::identity(coords.n));
}

} // namespace qmirror::fuzzy
