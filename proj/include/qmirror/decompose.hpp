// Rotation decompositions of single-qubit unitaries and Bloch coordinates.

#pragma once

#include "qmirror/qubit.hpp"

namespace qmirror {

// u = e^{i phase} Rz(gamma) Ry(theta) Rz(delta), theta in [0, pi].
struct euler_angles {
    double phase;
    double gamma;
    double theta;
    double delta;
};

// Rotation matrices about the Bloch y and z axes: e^{-i t Y/2}, e^{-i t Z/2}.
mat2 rot_y(double theta);
mat2 rot_z(double theta);

// Canonical conventions: phase = arg(det u)/2 in (-pi/2, pi/2]; when
// theta = 0 the z-rotations merge and the angle splits as gamma = delta;
// when theta = pi, gamma = -delta.
euler_angles euler_decompose(const unitary2& u);

mat2 euler_reconstruct(const euler_angles& a);

// Diagonal unitary rewritten as e^{i phase_prime} diag(1, e^{i lambda}):
// the phase-shift gate up to a global phase. With alpha = e^{-i delta},
// lambda = 2 delta and e^{i phase_prime} = e^{i phi} alpha.
struct phase_shift {
    double phase_prime;
    double lambda;
};

phase_shift phase_shift_form(const diagonal_unitary2& u);

mat2 phase_shift_reconstruct(const phase_shift& p);

// (theta, phi) with psi ~ cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> up to
// a global phase. phi = 0 at the poles, where it is undefined.
bloch_point bloch_coordinates(const qubit_state& psi);

qubit_state bloch_reconstruct(const bloch_point& p);

} // namespace qmirror
