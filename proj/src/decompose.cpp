#include "qmirror/decompose.hpp"

#include <cmath>

namespace qmirror {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

double wrap_to_two_pi(double t) {
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;  // tiny negatives can round back up to 2pi
    return t;
}

} // namespace

mat2 rot_y(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {cx{c, 0}, cx{-s, 0}, cx{s, 0}, cx{c, 0}};
}

mat2 rot_z(double theta) {
    return {std::polar(1.0, -theta / 2.0), cx{0, 0}, cx{0, 0}, std::polar(1.0, theta / 2.0)};
}

// With S = e^{-i phase} u, the special part has the form
//   [ cos(t/2) e^{-i(g+d)/2}   -sin(t/2) e^{-i(g-d)/2} ]
//   [ sin(t/2) e^{+i(g-d)/2}    cos(t/2) e^{+i(g+d)/2} ]
// so theta comes from the moduli and the z-angles from the arguments.
euler_angles euler_decompose(const unitary2& u) {
    const mat2& s = u.su();
    const double theta = 2.0 * std::atan2(std::abs(s.e10()), std::abs(s.e00()));

    double sum;   // gamma + delta
    double diff;  // gamma - delta
    if (std::abs(s.e00()) < 1e-14) {
        // theta = pi: only the argument of the off-diagonal survives.
        diff = 2.0 * std::arg(s.e10());
        sum = 0.0;
    } else if (std::abs(s.e10()) < 1e-14) {
        // theta = 0: only the diagonal argument survives; split gamma = delta.
        sum = -2.0 * std::arg(s.e00());
        diff = 0.0;
    } else {
        sum = -2.0 * std::arg(s.e00());
        diff = 2.0 * std::arg(s.e10());
    }
    return {u.phase(), (sum + diff) / 2.0, theta, (sum - diff) / 2.0};
}

mat2 euler_reconstruct(const euler_angles& a) {
    return std::polar(1.0, a.phase) * (rot_z(a.gamma) * rot_y(a.theta) * rot_z(a.delta));
}

phase_shift phase_shift_form(const diagonal_unitary2& u) {
    const double delta = -std::arg(u.alpha());
    return {u.phase() - delta, 2.0 * delta};
}

mat2 phase_shift_reconstruct(const phase_shift& p) {
    return {std::polar(1.0, p.phase_prime), cx{0, 0}, cx{0, 0},
            std::polar(1.0, p.phase_prime + p.lambda)};
}

bloch_point bloch_coordinates(const qubit_state& psi) {
    const double theta = 2.0 * std::atan2(std::abs(psi.b()), std::abs(psi.a()));
    // phi is undefined at the poles; fix it to 0 there.
    if (std::abs(psi.a()) < 1e-14 || std::abs(psi.b()) < 1e-14) return {theta, 0.0};
    return {theta, wrap_to_two_pi(std::arg(psi.b()) - std::arg(psi.a()))};
}

qubit_state bloch_reconstruct(const bloch_point& p) {
    const double c = std::cos(p.theta / 2.0);
    const double s = std::sin(p.theta / 2.0);
    return {cx{c, 0}, std::polar(s, p.phi)};
}

} // namespace qmirror
