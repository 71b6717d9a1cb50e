#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "z4.hpp"

// The commutative ring R[Z]/(Z^4 - 1) and its complex-coefficient variant.
// A polynomial is a flat length-4 coefficient array indexed by alpha in Z4.
// Multiplication by Z^k is a cyclic index rotation; the in-place FWHT below
// is the Hadamard butterfly network with Z^2 playing the role of -1.

namespace ringcodec {

template <typename T>
struct QuadPoly {
    std::array<T, 4> c{};

    T& operator[](std::size_t i) { return c[i]; }
    const T& operator[](std::size_t i) const { return c[i]; }

    QuadPoly& operator+=(const QuadPoly& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }

    QuadPoly& operator*=(T s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend QuadPoly operator*(QuadPoly a, T s) { return a *= s; }

    // multiply by the monomial Z^k: (f * Z^k)_alpha = f_{alpha - k}
    QuadPoly rotated(int k) const {
        QuadPoly out;
        for (int a = 0; a < 4; ++a) out.c[static_cast<std::size_t>(a)] = c[static_cast<std::size_t>((a - k) & 3)];
        return out;
    }
};

using SPoly = QuadPoly<double>;
using CSPoly = QuadPoly<std::complex<double>>;

template <typename T>
inline QuadPoly<T> zeta(int alpha) {
    QuadPoly<T> p;
    p.c[static_cast<std::size_t>(alpha & 3)] = T(1);
    return p;
}

inline SPoly zeta(int alpha) { return zeta<double>(alpha); }

// circular convolution
template <typename T>
inline QuadPoly<T> spoly_mul(const QuadPoly<T>& f, const QuadPoly<T>& g) {
    QuadPoly<T> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out.c[static_cast<std::size_t>((a + b) & 3)] += f.c[static_cast<std::size_t>(a)] * g.c[static_cast<std::size_t>(b)];
    return out;
}

// F_beta = sum_alpha omega^{-alpha beta} f_alpha with omega = I.
// Written out per beta: powers of -I cycle 1, -I, -1, I.
template <typename T>
inline CSPoly dft4(const QuadPoly<T>& f) {
    const std::complex<double> f0(f.c[0]), f1(f.c[1]), f2(f.c[2]), f3(f.c[3]);
    const std::complex<double> I(0.0, 1.0);
    CSPoly F;
    F.c[0] = f0 + f1 + f2 + f3;
    F.c[1] = f0 - I * f1 - f2 + I * f3;
    F.c[2] = f0 - f1 + f2 - f3;
    F.c[3] = f0 + I * f1 - f2 - I * f3;
    return F;
}

inline CSPoly idft4(const CSPoly& F) {
    const std::complex<double> I(0.0, 1.0);
    CSPoly f;
    f.c[0] = (F.c[0] + F.c[1] + F.c[2] + F.c[3]) * 0.25;
    f.c[1] = (F.c[0] + I * F.c[1] - F.c[2] - I * F.c[3]) * 0.25;
    f.c[2] = (F.c[0] - F.c[1] + F.c[2] - F.c[3]) * 0.25;
    f.c[3] = (F.c[0] - I * F.c[1] - F.c[2] + I * F.c[3]) * 0.25;
    return f;
}

// In-place transform: output_l = sum_j Z^{2<l,j>} input_j (LSB-first bit
// scalar product). Returns the executed butterfly count, (N/2) log2 N.
template <typename T>
inline std::size_t fwht(std::vector<QuadPoly<T>>& a) {
    const std::size_t N = a.size();
    if (N == 0 || (N & (N - 1)) != 0) throw std::invalid_argument("fwht: length must be a power of two");
    std::size_t butterflies = 0;
    for (std::size_t h = 1; h < N; h <<= 1) {
        for (std::size_t i = 0; i < N; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const QuadPoly<T> x = a[j];
                const QuadPoly<T> y = a[j + h];
                a[j] = x + y;
                a[j + h] = x + y.rotated(2);
                ++butterflies;
            }
        }
    }
    return butterflies;
}

// plain +-1 Hadamard transform over the reals, same index convention
inline void fwht_sign(std::vector<double>& a) {
    const std::size_t N = a.size();
    if (N == 0 || (N & (N - 1)) != 0) throw std::invalid_argument("fwht_sign: length must be a power of two");
    for (std::size_t h = 1; h < N; h <<= 1) {
        for (std::size_t i = 0; i < N; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

} // namespace ringcodec
