// Single-qubit state and operator types.
//
// Everything here is an immutable value validated at construction: states
// are normalized, unitaries satisfy U+U = I, projectors are idempotent and
// Hermitian. All checks use construction_tol unless noted.

#pragma once

#include <array>
#include <cmath>

#include "qmirror/common.hpp"

namespace qmirror {

// 2x2 complex matrix with finite entries. Plain value algebra; role-carrying
// wrappers (unitary2, projector2, ...) sit on top of it.
class mat2 {
public:
    mat2() : e_{cx{0, 0}, cx{0, 0}, cx{0, 0}, cx{0, 0}} {}

    mat2(cx e00, cx e01, cx e10, cx e11) : e_{e00, e01, e10, e11} {
        for (const cx& z : e_) require_finite(z, "mat2 entry");
    }

    static mat2 identity() { return {cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}}; }

    cx e00() const { return e_[0]; }
    cx e01() const { return e_[1]; }
    cx e10() const { return e_[2]; }
    cx e11() const { return e_[3]; }

    mat2 adjoint() const {
        return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
    }

    cx det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    cx trace() const { return e_[0] + e_[3]; }

    std::array<cx, 2> apply(cx a, cx b) const {
        return {e_[0] * a + e_[1] * b, e_[2] * a + e_[3] * b};
    }

    friend mat2 operator*(const mat2& l, const mat2& r) {
        return {l.e_[0] * r.e_[0] + l.e_[1] * r.e_[2],
                l.e_[0] * r.e_[1] + l.e_[1] * r.e_[3],
                l.e_[2] * r.e_[0] + l.e_[3] * r.e_[2],
                l.e_[2] * r.e_[1] + l.e_[3] * r.e_[3]};
    }

    friend mat2 operator*(cx s, const mat2& m) {
        return {s * m.e_[0], s * m.e_[1], s * m.e_[2], s * m.e_[3]};
    }

    friend mat2 operator+(const mat2& l, const mat2& r) {
        return {l.e_[0] + r.e_[0], l.e_[1] + r.e_[1], l.e_[2] + r.e_[2], l.e_[3] + r.e_[3]};
    }

    friend mat2 operator-(const mat2& l, const mat2& r) {
        return {l.e_[0] - r.e_[0], l.e_[1] - r.e_[1], l.e_[2] - r.e_[2], l.e_[3] - r.e_[3]};
    }

private:
    std::array<cx, 4> e_;
};

// Largest entrywise |l - r|.
inline double max_abs_diff(const mat2& l, const mat2& r) {
    double d = std::abs(l.e00() - r.e00());
    d = std::max(d, std::abs(l.e01() - r.e01()));
    d = std::max(d, std::abs(l.e10() - r.e10()));
    d = std::max(d, std::abs(l.e11() - r.e11()));
    return d;
}

inline double unitarity_deviation(const mat2& m) {
    return max_abs_diff(m.adjoint() * m, mat2::identity());
}

// Fixed gate/operator matrices.
inline mat2 pauli_x() { return {cx{0, 0}, cx{1, 0}, cx{1, 0}, cx{0, 0}}; }
inline mat2 pauli_y() { return {cx{0, 0}, cx{0, -1}, cx{0, 1}, cx{0, 0}}; }
inline mat2 pauli_z() { return {cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{-1, 0}}; }
inline mat2 not_gate() { return pauli_x(); }

inline mat2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {cx{s, 0}, cx{s, 0}, cx{s, 0}, cx{-s, 0}};
}

// Truth-value exchangers: NOT composed with each basis projector. Nilpotent,
// not projectors; they swap the roles of the basis states.
inline mat2 q0() { return not_gate() * mat2{cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{0, 0}}; }
inline mat2 q1() { return not_gate() * mat2{cx{0, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}}; }

// Normalized amplitude pair over the computational basis.
class qubit_state {
public:
    qubit_state(cx a, cx b) : a_(a), b_(b) {
        require_finite(a, "qubit_state amplitude a");
        require_finite(b, "qubit_state amplitude b");
        const double n2 = std::norm(a) + std::norm(b);
        if (std::abs(n2 - 1.0) > construction_tol)
            throw validation_error("qubit_state: |a|^2 + |b|^2 != 1");
    }

    cx a() const { return a_; }
    cx b() const { return b_; }

    double prob0() const { return std::norm(a_); }
    double prob1() const { return std::norm(b_); }

    cx amplitude(int basis) const { return basis == 0 ? a_ : b_; }

    // |<l|r>|, 1 iff equal up to a global phase.
    friend double overlap(const qubit_state& l, const qubit_state& r) {
        return std::abs(std::conj(l.a()) * r.a() + std::conj(l.b()) * r.b());
    }

private:
    cx a_, b_;
};

// Scales (a, b) onto the unit sphere; direction is preserved.
// Rejects the zero vector and non-finite input.
inline qubit_state normalize(cx a, cx b) {
    require_finite(a, "normalize input a");
    require_finite(b, "normalize input b");
    // Pre-scale by the largest component so |.|^2 can neither overflow nor
    // flush to zero for extreme magnitudes.
    const double m = std::max(std::max(std::abs(a.real()), std::abs(a.imag())),
                              std::max(std::abs(b.real()), std::abs(b.imag())));
    if (!(m > 0.0)) throw validation_error("normalize: zero vector has no direction");
    a /= m;
    b /= m;
    const double inv = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
    return {a * inv, b * inv};
}

inline qubit_state basis_state(int basis) {
    if (basis != 0 && basis != 1) throw validation_error("basis index must be 0 or 1");
    return basis == 0 ? qubit_state{cx{1, 0}, cx{0, 0}} : qubit_state{cx{0, 0}, cx{1, 0}};
}

// General 2x2 unitary split as e^{i phase} * S with S = [[alpha, beta],
// [-conj(beta), conj(alpha)]], |alpha|^2 + |beta|^2 = 1.
class unitary2 {
public:
    static unitary2 from_alpha_beta(cx alpha, cx beta, double phase) {
        require_finite(alpha, "unitary2 alpha");
        require_finite(beta, "unitary2 beta");
        require_finite(phase, "unitary2 phase");
        mat2 s{alpha, beta, -std::conj(beta), std::conj(alpha)};
        return unitary2(s, phase);
    }

    // Factors an arbitrary unitary matrix: phase = arg(det)/2 in (-pi/2, pi/2],
    // special part S = e^{-i phase} m. Rejects m with U+U != I.
    static unitary2 from_matrix(const mat2& m) {
        const double dev = unitarity_deviation(m);
        if (dev > construction_tol)
            throw validation_error("unitary2: matrix is not unitary (deviation " +
                                   std::to_string(dev) + ")");
        double half_arg = 0.5 * std::arg(m.det());
        if (half_arg <= -1.5707963267948966) half_arg += 3.141592653589793;
        const cx unwind = std::polar(1.0, -half_arg);
        return unitary2(unwind * m, half_arg);
    }

    static unitary2 identity() { return unitary2(mat2::identity(), 0.0); }

    static unitary2 hadamard_gate() { return from_matrix(hadamard()); }

    cx alpha() const { return su_.e00(); }
    cx beta() const { return su_.e01(); }
    double phase() const { return phase_; }

    // The special (det ~ 1) part.
    const mat2& su() const { return su_; }

    // The full matrix e^{i phase} * S.
    mat2 matrix() const { return std::polar(1.0, phase_) * su_; }

private:
    unitary2(mat2 su, double phase) : su_(su), phase_(phase) {
        if (unitarity_deviation(su_) > construction_tol)
            throw validation_error("unitary2: special part is not unitary");
    }

    mat2 su_;
    double phase_;
};

// Diagonal unitary e^{i phase} * diag(alpha, conj(alpha)) with |alpha| = 1.
// The reversible measurement operator: a superposition of both basis
// projectors weighted by alpha and conj(alpha).
class diagonal_unitary2 {
public:
    diagonal_unitary2(cx alpha, double phase) : alpha_(alpha), phase_(phase) {
        require_finite(alpha, "diagonal_unitary2 alpha");
        require_finite(phase, "diagonal_unitary2 phase");
        if (std::abs(std::norm(alpha) - 1.0) > construction_tol)
            throw validation_error("diagonal_unitary2: |alpha|^2 != 1");
    }

    cx alpha() const { return alpha_; }
    double phase() const { return phase_; }

    mat2 matrix() const {
        const cx g = std::polar(1.0, phase_);
        return {g * alpha_, cx{0, 0}, cx{0, 0}, g * std::conj(alpha_)};
    }

    unitary2 as_unitary2() const {
        return unitary2::from_alpha_beta(alpha_, cx{0, 0}, phase_);
    }

private:
    cx alpha_;
    double phase_;
};

// Idempotent Hermitian 2x2 matrix.
class projector2 {
public:
    explicit projector2(const mat2& m) : m_(m) {
        if (max_abs_diff(m * m, m) > construction_tol)
            throw validation_error("projector2: not idempotent");
        if (max_abs_diff(m.adjoint(), m) > construction_tol)
            throw validation_error("projector2: not Hermitian");
    }

    static projector2 onto_basis(int basis) {
        if (basis != 0 && basis != 1) throw validation_error("basis index must be 0 or 1");
        return basis == 0
                   ? projector2(mat2{cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{0, 0}})
                   : projector2(mat2{cx{0, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}});
    }

    // Projectors of the dual basis |+>, |->: H P_i H^-1.
    static projector2 onto_dual(int sign) {
        const mat2 h = hadamard();
        return projector2(h * onto_basis(sign == 0 ? 0 : 1).matrix() * h);
    }

    const mat2& matrix() const { return m_; }

private:
    mat2 m_;
};

// Point on the Bloch sphere; theta in [0, pi], phi in [0, 2pi).
struct bloch_point {
    double theta;
    double phi;
};

// Outcome of a projective measurement.
struct measurement_record {
    int outcome;             // basis index, 0 or 1
    double probability;      // probability of the outcome that occurred
    qubit_state post_state;
};

} // namespace qmirror
