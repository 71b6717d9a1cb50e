#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "z4.hpp"

// GR(4,m): the degree-m extension of Z4 by a monic polynomial h(Z) whose
// mod-2 reduction is irreducible. The primitive element xi is fixed to the
// residue class of Z; validity (multiplicative order 2^m - 1) is checked at
// construction. Coordinates are with respect to the monomial basis
// {1, Z, ..., Z^{m-1}}, LSB-first.

namespace ringcodec {

struct GaloisRingCtx {
    int m = 0;
    Z4Word h;        // m+1 coefficients, h[m] == 1
    int N = 0;       // 2^m
    Mat4 xi_pow;     // N-1 rows, coordinates of xi^j
    Mat2 xi_bar_pow; // N-1 rows, xi_pow reduced mod 2
};

namespace detail {

// product of two coordinate vectors modulo h over Z4
inline Z4Word gr_reduce_mul(const Z4Word& h, int m, const Z4Word& p, const Z4Word& q) {
    std::vector<int> prod(static_cast<std::size_t>(2 * m - 1), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[static_cast<std::size_t>(i + j)] += p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)];
    // h is monic: Z^m = -(h_0 + h_1 Z + ... + h_{m-1} Z^{m-1})
    for (int d = 2 * m - 2; d >= m; --d) {
        int c = ((prod[static_cast<std::size_t>(d)] % 4) + 4) % 4;
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < m; ++i) prod[static_cast<std::size_t>(d - m + i)] -= c * h[static_cast<std::size_t>(i)];
    }
    Z4Word out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = mod4(prod[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace detail

inline Z4Word gr_mul(const GaloisRingCtx& ctx, const Z4Word& p, const Z4Word& q) {
    return detail::gr_reduce_mul(ctx.h, ctx.m, p, q);
}

inline GaloisRingCtx gr_build(const Z4Word& h, int m) {
    if (static_cast<int>(h.size()) != m + 1) throw std::invalid_argument("gr_build: h must have degree m");
    if (h[static_cast<std::size_t>(m)] != 1) throw std::invalid_argument("gr_build: h must be monic");

    GaloisRingCtx ctx;
    ctx.m = m;
    ctx.h = h;
    ctx.N = 1 << m;

    Z4Word z(static_cast<std::size_t>(m), 0); // the element Z
    if (m > 1) z[1] = 1;
    Z4Word cur(static_cast<std::size_t>(m), 0); // xi^0 = 1
    cur[0] = 1;

    const int order = ctx.N - 1;
    ctx.xi_pow.reserve(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) {
        ctx.xi_pow.push_back(cur);
        cur = (m == 1) ? cur : detail::gr_reduce_mul(h, m, cur, z);
    }
    // xi^{N-1} must close the cycle and no earlier power may equal 1
    Z4Word one(static_cast<std::size_t>(m), 0);
    one[0] = 1;
    if (cur != one) throw std::invalid_argument("gr_build: Z does not have order 2^m - 1 modulo h");
    for (int j = 1; j < order; ++j)
        if (ctx.xi_pow[static_cast<std::size_t>(j)] == one)
            throw std::invalid_argument("gr_build: Z has order smaller than 2^m - 1");

    ctx.xi_bar_pow.reserve(static_cast<std::size_t>(order));
    for (const auto& v : ctx.xi_pow) {
        BitWord b(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) b[i] = v[i] & 1u;
        ctx.xi_bar_pow.push_back(std::move(b));
    }
    return ctx;
}

inline Mat2 binary_counterpart(const GaloisRingCtx& ctx) { return ctx.xi_bar_pow; }

enum class CodeFamily { Kerdock, Preparata };

struct CodePreset {
    std::string id;
    CodeFamily family;
    int m;
    Z4Word h;
};

// ring polynomials for the four code lengths, LSB-first coefficients
inline const std::vector<CodePreset>& all_presets() {
    static const std::vector<CodePreset> presets = {
        {"nr8", CodeFamily::Kerdock, 3, {3, 1, 2, 1}},
        {"k32", CodeFamily::Kerdock, 5, {3, 2, 3, 0, 0, 1}},
        {"p32", CodeFamily::Preparata, 5, {3, 2, 3, 0, 0, 1}},
        {"k128", CodeFamily::Kerdock, 7, {3, 1, 0, 0, 2, 0, 0, 1}},
        {"p128", CodeFamily::Preparata, 7, {3, 1, 0, 0, 2, 0, 0, 1}},
        {"k512", CodeFamily::Kerdock, 9, {3, 0, 2, 0, 3, 0, 0, 0, 0, 1}},
        {"p512", CodeFamily::Preparata, 9, {3, 0, 2, 0, 3, 0, 0, 0, 0, 1}},
    };
    return presets;
}

inline const CodePreset* find_preset(const std::string& id) {
    for (const auto& p : all_presets())
        if (p.id == id) return &p;
    return nullptr;
}

} // namespace ringcodec
