// Fuzzy sphere: n-dimensional su(2) generators and the quantized
// coordinates X_i = k J_i normalized to unit radius.

#pragma once

#include <cstdint>

#include "qmirror/matn.hpp"

namespace qmirror::fuzzy {

// Keep the dense matrices comfortably in memory.
inline constexpr std::size_t max_dimension = 1024;

// Spin-j generators in the standard basis, j = (n-1)/2: j3 diagonal with
// entries j, j-1, ..., -j; j1, j2 from the ladder operators.
struct su2_irrep {
    std::size_t n;
    matn j1, j2, j3;
};

struct fuzzy_coordinates {
    std::size_t n;
    double k;  // noncommutativity parameter
    matn x1, x2, x3;
};

su2_irrep build_irrep(std::size_t n);

// Unit-radius coordinates. With the standard generators the Casimir is
// j(j+1) I = (n^2-1)/4 I, so k = 2/sqrt(n^2-1) makes sum X_i^2 = I; the
// n = 2 coordinates come out as the Pauli matrices over sqrt(3).
fuzzy_coordinates build_fuzzy_coordinates(std::size_t n);

double unit_radius_k(std::size_t n);

// The number of elementary cells for a register of num_qubits qubits: 2^N.
std::uint64_t cell_count(unsigned num_qubits);

// Largest entrywise |[J_i, J_j] - i e_ijk J_k| over the cyclic pairs.
double check_commutators(const su2_irrep& irrep);

double hermiticity_deviation(const su2_irrep& irrep);

// J1^2 + J2^2 + J3^2.
matn casimir(const su2_irrep& irrep);

// Largest entrywise |sum X_i^2 - I|.
double radius_deviation(const fuzzy_coordinates& coords);

} // namespace qmirror::fuzzy
