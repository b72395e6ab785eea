// Dense n x n complex matrices for the fuzzy-sphere construction.
//
// The hot kernels (multiply, and the entrywise reductions) come in two
// variants: an OpenMP-parallel one used by default and a plain serial
// reference kept for testing and benchmarking. The pair must agree to
// rounding; tests/bench compare them directly.

#pragma once

#include <cstddef>
#include <vector>

#include "qmirror/common.hpp"

namespace qmirror::fuzzy {

class matn {
public:
    explicit matn(std::size_t n) : n_(n), e_(n * n, cx{0, 0}) {
        if (n == 0) throw validation_error("matn: dimension must be positive");
    }

    static matn identity(std::size_t n) {
        matn m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = cx{1, 0};
        return m;
    }

    std::size_t dim() const { return n_; }

    cx& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const cx& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    const cx* data() const { return e_.data(); }
    cx* data() { return e_.data(); }

private:
    std::size_t n_;
    std::vector<cx> e_;
};

// C = A * B. OpenMP over rows; ikj order so the inner loop streams rows of B.
matn multiply(const matn& a, const matn& b);

// Reference kernel: naive ijk with an explicit accumulator.
matn multiply_serial(const matn& a, const matn& b);

matn add(const matn& a, const matn& b);
matn sub(const matn& a, const matn& b);
matn scale(cx s, const matn& a);
matn adjoint(const matn& a);

// A*B - B*A.
matn commutator(const matn& a, const matn& b);

// Largest entrywise |a(i,j)|, parallel max reduction.
double max_abs(const matn& a);
double max_abs_serial(const matn& a);

double max_abs_diff(const matn& a, const matn& b);

// Largest entrywise |A - A+|.
double hermiticity_deviation(const matn& a);

} // namespace qmirror::fuzzy
