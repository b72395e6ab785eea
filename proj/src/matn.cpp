#include "qmirror/matn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace qmirror::fuzzy {

namespace {

void require_same_dim(const matn& a, const matn& b, const char* op) {
    if (a.dim() != b.dim())
        throw validation_error(std::string(op) + ": dimension mismatch");
}

// Below this, thread startup costs more than the loop.
constexpr std::int64_t parallel_cutoff = 64;

} // namespace

matn multiply(const matn& a, const matn& b) {
    require_same_dim(a, b, "multiply");
    const std::int64_t n = static_cast<std::int64_t>(a.dim());
    matn c(a.dim());
    // std::complex guarantees the (re, im) array layout, so the kernel runs
    // on raw doubles; that sidesteps the library's NaN-recovery multiply and
    // lets the inner loop vectorize.
    const double* pa = reinterpret_cast<const double*>(a.data());
    const double* pb = reinterpret_cast<const double*>(b.data());
    double* pc = reinterpret_cast<double*>(c.data());
#pragma omp parallel for schedule(static) if (n >= parallel_cutoff)
    for (std::int64_t i = 0; i < n; ++i) {
        double* crow = pc + 2 * i * n;
        for (std::int64_t k = 0; k < n; ++k) {
            const double ar = pa[2 * (i * n + k)];
            const double ai = pa[2 * (i * n + k) + 1];
            const double* brow = pb + 2 * k * n;
            for (std::int64_t j = 0; j < n; ++j) {
                const double br = brow[2 * j];
                const double bi = brow[2 * j + 1];
                crow[2 * j] += ar * br - ai * bi;
                crow[2 * j + 1] += ar * bi + ai * br;
            }
        }
    }
    return c;
}

matn multiply_serial(const matn& a, const matn& b) {
    require_same_dim(a, b, "multiply");
    const std::size_t n = a.dim();
    matn c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cx acc{0, 0};
            for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            c.at(i, j) = acc;
        }
    return c;
}

matn add(const matn& a, const matn& b) {
    require_same_dim(a, b, "add");
    matn c(a.dim());
    const std::size_t total = a.dim() * a.dim();
    for (std::size_t i = 0; i < total; ++i) c.data()[i] = a.data()[i] + b.data()[i];
    return c;
}

matn sub(const matn& a, const matn& b) {
    require_same_dim(a, b, "sub");
    matn c(a.dim());
    const std::size_t total = a.dim() * a.dim();
    for (std::size_t i = 0; i < total; ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

matn scale(cx s, const matn& a) {
    matn c(a.dim());
    const std::size_t total = a.dim() * a.dim();
    for (std::size_t i = 0; i < total; ++i) c.data()[i] = s * a.data()[i];
    return c;
}

matn adjoint(const matn& a) {
    const std::size_t n = a.dim();
    matn c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(j, i) = std::conj(a.at(i, j));
    return c;
}

matn commutator(const matn& a, const matn& b) {
    return sub(multiply(a, b), multiply(b, a));
}

double max_abs(const matn& a) {
    const std::int64_t total = static_cast<std::int64_t>(a.dim() * a.dim());
    const cx* p = a.data();
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) \
    if (total >= parallel_cutoff * parallel_cutoff)
    for (std::int64_t i = 0; i < total; ++i) m = std::max(m, std::abs(p[i]));
    return m;
}

double max_abs_serial(const matn& a) {
    const std::size_t total = a.dim() * a.dim();
    double m = 0.0;
    for (std::size_t i = 0; i < total; ++i) m = std::max(m, std::abs(a.data()[i]));
    return m;
}

double max_abs_diff(const matn& a, const matn& b) {
    require_same_dim(a, b, "max_abs_diff");
    return max_abs(sub(a, b));
}

double hermiticity_deviation(const matn& a) {
    return max_abs_diff(a, adjoint(a));
}

} // namespace qmirror::fuzzy
