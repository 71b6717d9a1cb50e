#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Scalar and vector arithmetic over Z4 and Z2: dyadic expansion, LSB-first
// index/bit conventions shared by every other header.
//
// Bit order is LSB-first everywhere: bit i carries weight 2^i and matches the
// coefficient of Z^i in polynomial coordinates.

namespace ringcodec {

using Z4Word = std::vector<std::uint8_t>;  // symbols in {0,1,2,3}
using BitWord = std::vector<std::uint8_t>; // bits in {0,1}

using Mat4 = std::vector<Z4Word>;
using Mat2 = std::vector<BitWord>;

inline std::uint8_t mod4(int x) { return static_cast<std::uint8_t>(((x % 4) + 4) % 4); }

// alpha = a + 2*b with a the low bit-plane and b the high bit-plane.
inline std::pair<BitWord, BitWord> dyadic_split(const Z4Word& w) {
    BitWord a(w.size()), b(w.size());
    for (std::size_t n = 0; n < w.size(); ++n) {
        a[n] = w[n] & 1u;
        b[n] = (w[n] >> 1) & 1u;
    }
    return {a, b};
}

inline Z4Word dyadic_merge(const BitWord& a, const BitWord& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dyadic_merge: length mismatch");
    Z4Word w(a.size());
    for (std::size_t n = 0; n < w.size(); ++n) w[n] = static_cast<std::uint8_t>((a[n] & 1u) + 2u * (b[n] & 1u));
    return w;
}

// LSB-first binary expansion of n as an m-bit word.
inline BitWord index_bits(std::size_t n, int m) {
    if (m < 0 || n >= (std::size_t{1} << m)) throw std::out_of_range("index_bits: n out of range");
    BitWord v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = (n >> i) & 1u;
    return v;
}

inline std::size_t bits_to_index(const BitWord& v) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < v.size(); ++i) n |= static_cast<std::size_t>(v[i] & 1u) << i;
    return n;
}

inline int parity_dot(std::size_t a, std::size_t b) {
#if defined(__GNUC__)
    return __builtin_parityll(a & b);
#else
    std::size_t x = a & b;
    int p = 0;
    while (x) { p ^= 1; x &= x - 1; }
    return p;
#endif
}

// row-vector times matrix over Z4 (u: 1xK, M: KxN)
inline Z4Word mul_vec_mat4(const Z4Word& u, const Mat4& M) {
    if (M.empty()) return {};
    if (u.size() != M.size()) throw std::invalid_argument("mul_vec_mat4: dimension mismatch");
    Z4Word out(M[0].size(), 0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0) continue;
        for (std::size_t n = 0; n < out.size(); ++n) out[n] = mod4(out[n] + u[k] * M[k][n]);
    }
    return out;
}

inline BitWord mul_vec_mat2(const BitWord& u, const Mat2& M) {
    if (M.empty()) return {};
    if (u.size() != M.size()) throw std::invalid_argument("mul_vec_mat2: dimension mismatch");
    BitWord out(M[0].size(), 0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (!(u[k] & 1u)) continue;
        for (std::size_t n = 0; n < out.size(); ++n) out[n] ^= M[k][n] & 1u;
    }
    return out;
}

} // namespace ringcodec
