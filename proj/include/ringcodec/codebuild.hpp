#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "galois_ring.hpp"
#include "z4.hpp"

// Kerdock and Preparata code construction over Z4.
//
// The Kerdock generator has row 0 all-ones and rows 1..m the coordinate rows
// of (0, 1, xi, xi^2, ..., xi^{N-2}), with columns permuted so that the
// binary image of column n is [1; index_bits(n)] -- the Sylvester-ordered
// RM(1,m) generator. The Preparata code is its dual, reduced to systematic
// form by unit-pivot Gaussian elimination over Z4 (greedy left-to-right).
//
// Both specs carry the Kerdock coset-row matrices A1 and A2 (for a Preparata
// spec these belong to its dual and drive the dual-domain MAP decoder).

namespace ringcodec {

struct CodeSpec {
    CodeFamily family = CodeFamily::Kerdock;
    int m = 0;
    int N = 0;
    int K = 0;
    Mat4 G;  // K x N generator
    Mat4 H;  // parity check (Preparata: H = Kerdock G; Kerdock: H = Preparata G)
    Mat2 G0; // dyadic split G = G0 + 2*G1
    Mat2 G1;
    Mat4 A1; // N x N Kerdock subcode coset rows (rows i*G, first info bit 0)
    Mat4 A2; // N x N, rows 2*(i (x) G0); entries in {0,2}
    std::vector<int> info_positions;   // systematic pivot columns (Preparata)
    std::vector<std::size_t> col_perm; // realized P_pi: col_perm[n] = source column of position n
};

namespace detail {

inline void split_matrix(const Mat4& G, Mat2& G0, Mat2& G1) {
    G0.clear();
    G1.clear();
    for (const auto& row : G) {
        auto [a, b] = dyadic_split(row);
        G0.push_back(std::move(a));
        G1.push_back(std::move(b));
    }
}

inline void build_coset_rows(CodeSpec& spec, const Mat4& kerdock_G, const Mat2& kerdock_G0) {
    const int N = spec.N;
    const int m = spec.m;
    spec.A1.assign(static_cast<std::size_t>(N), Z4Word());
    spec.A2.assign(static_cast<std::size_t>(N), Z4Word());
    for (int l = 0; l < N; ++l) {
        BitWord i(static_cast<std::size_t>(m + 1), 0); // first value always zero
        const BitWord lb = index_bits(static_cast<std::size_t>(l), m);
        std::copy(lb.begin(), lb.end(), i.begin() + 1);
        Z4Word i4(i.begin(), i.end());
        spec.A1[static_cast<std::size_t>(l)] = mul_vec_mat4(i4, kerdock_G);
        BitWord r0 = mul_vec_mat2(i, kerdock_G0);
        Z4Word a2(r0.size());
        for (std::size_t n = 0; n < r0.size(); ++n) a2[n] = static_cast<std::uint8_t>(2 * r0[n]);
        spec.A2[static_cast<std::size_t>(l)] = std::move(a2);
    }
}

} // namespace detail

inline CodeSpec build_kerdock(const GaloisRingCtx& ctx) {
    CodeSpec spec;
    spec.family = CodeFamily::Kerdock;
    spec.m = ctx.m;
    spec.N = ctx.N;
    spec.K = ctx.m + 1;

    const int m = ctx.m, N = ctx.N;
    // unpermuted columns: element 0 first, then xi^0 .. xi^{N-2}
    Mat4 cols;
    cols.reserve(static_cast<std::size_t>(N));
    {
        Z4Word c0(static_cast<std::size_t>(m + 1), 0);
        c0[0] = 1;
        cols.push_back(std::move(c0));
    }
    for (int j = 0; j < N - 1; ++j) {
        Z4Word col(static_cast<std::size_t>(m + 1));
        col[0] = 1;
        for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(1 + i)] = ctx.xi_pow[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        cols.push_back(std::move(col));
    }

    // P_pi: place the column whose binary image is [1; v] at position int(v)
    spec.col_perm.assign(static_cast<std::size_t>(N), 0);
    spec.G.assign(static_cast<std::size_t>(m + 1), Z4Word(static_cast<std::size_t>(N), 0));
    for (std::size_t src = 0; src < cols.size(); ++src) {
        BitWord v(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = cols[src][static_cast<std::size_t>(1 + i)] & 1u;
        const std::size_t pos = bits_to_index(v);
        spec.col_perm[pos] = src;
        for (int r = 0; r <= m; ++r) spec.G[static_cast<std::size_t>(r)][pos] = cols[src][static_cast<std::size_t>(r)];
    }

    detail::split_matrix(spec.G, spec.G0, spec.G1);
    detail::build_coset_rows(spec, spec.G, spec.G0);
    return spec;
}

namespace detail {

// Null module of H over Z4 for a free code: eliminate with unit (odd) pivots,
// then read the generator off the parity part on the non-pivot columns.
inline Mat4 z4_null_module(const Mat4& H, std::vector<int>& info_positions) {
    const int rows = static_cast<int>(H.size());
    const int N = static_cast<int>(H[0].size());
    Mat4 R = H;
    std::vector<int> pivot_col(static_cast<std::size_t>(rows), -1);
    int r = 0;
    for (int col = 0; col < N && r < rows; ++col) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (R[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] & 1u) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(R[static_cast<std::size_t>(sel)], R[static_cast<std::size_t>(r)]);
        // scale the pivot to 1 (units of Z4 are self-inverse: 1*1=1, 3*3=1)
        const std::uint8_t inv = R[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        for (int n = 0; n < N; ++n)
            R[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] = mod4(R[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] * inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint8_t f = R[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int n = 0; n < N; ++n)
                R[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] =
                    mod4(R[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] - f * R[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)]);
        }
        pivot_col[static_cast<std::size_t>(r)] = col;
        ++r;
    }
    if (r != rows) throw std::runtime_error("z4_null_module: H is not of full unit rank");

    std::vector<bool> is_pivot(static_cast<std::size_t>(N), false);
    for (int i = 0; i < rows; ++i) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = true;

    info_positions.clear();
    for (int n = 0; n < N; ++n)
        if (!is_pivot[static_cast<std::size_t>(n)]) info_positions.push_back(n);

    // generator row per free column f: identity at f, -R[i][f] at pivot column i
    Mat4 G;
    for (int f : info_positions) {
        Z4Word g(static_cast<std::size_t>(N), 0);
        g[static_cast<std::size_t>(f)] = 1;
        for (int i = 0; i < rows; ++i) {
            const int pc = pivot_col[static_cast<std::size_t>(i)];
            g[static_cast<std::size_t>(pc)] = mod4(-static_cast<int>(R[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)]));
        }
        G.push_back(std::move(g));
    }
    return G;
}

} // namespace detail

inline CodeSpec build_preparata(const GaloisRingCtx& ctx) {
    CodeSpec kerdock = build_kerdock(ctx);

    CodeSpec spec;
    spec.family = CodeFamily::Preparata;
    spec.m = ctx.m;
    spec.N = ctx.N;
    spec.K = ctx.N - ctx.m - 1;
    spec.H = kerdock.G;
    spec.G = detail::z4_null_module(spec.H, spec.info_positions);
    if (static_cast<int>(spec.G.size()) != spec.K) throw std::runtime_error("build_preparata: systematic form not found");

    detail::split_matrix(spec.G, spec.G0, spec.G1);
    // dual-code coset rows, used by the dual-domain MAP decoder
    spec.A1 = std::move(kerdock.A1);
    spec.A2 = std::move(kerdock.A2);
    spec.col_perm = std::move(kerdock.col_perm);

    // Kerdock side gets its parity check from here
    return spec;
}

// builds both so each spec knows its parity check
inline CodeSpec build_code(const GaloisRingCtx& ctx, CodeFamily family) {
    if (family == CodeFamily::Preparata) return build_preparata(ctx);
    CodeSpec k = build_kerdock(ctx);
    CodeSpec p = build_preparata(ctx);
    k.H = std::move(p.G);
    return k;
}

inline Z4Word encode(const CodeSpec& spec, const Z4Word& u) {
    if (static_cast<int>(u.size()) != spec.K) throw std::invalid_argument("encode: information word length mismatch");
    return mul_vec_mat4(u, spec.G);
}

// the dyadic-identity encoding path: c = u0*G + 2*(u1 (x) G0)
inline Z4Word encode_via_split(const CodeSpec& spec, const Z4Word& u) {
    if (static_cast<int>(u.size()) != spec.K) throw std::invalid_argument("encode_via_split: information word length mismatch");
    auto [u0, u1] = dyadic_split(u);
    Z4Word c = mul_vec_mat4(Z4Word(u0.begin(), u0.end()), spec.G);
    BitWord t = mul_vec_mat2(u1, spec.G0);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = mod4(c[n] + 2 * t[n]);
    return c;
}

inline std::pair<const Mat4*, const Mat4*> coset_rows(const CodeSpec& spec) {
    if (spec.family != CodeFamily::Kerdock) throw std::invalid_argument("coset_rows: Kerdock spec required");
    return {&spec.A1, &spec.A2};
}

inline Z4Word syndrome(const CodeSpec& spec, const Z4Word& c) {
    if (static_cast<int>(c.size()) != spec.N) throw std::invalid_argument("syndrome: word length mismatch");
    Z4Word s(spec.H.size(), 0);
    for (std::size_t r = 0; r < spec.H.size(); ++r) {
        int acc = 0;
        for (std::size_t n = 0; n < c.size(); ++n) acc += c[n] * spec.H[r][n];
        s[r] = mod4(acc);
    }
    return s;
}

inline bool is_codeword(const CodeSpec& spec, const Z4Word& c) {
    const Z4Word s = syndrome(spec, c);
    return std::all_of(s.begin(), s.end(), [](std::uint8_t x) { return x == 0; });
}

// all 4^K codewords; guarded so only desk-scale codes enumerate
inline Mat4 enumerate_codebook(const CodeSpec& spec, int max_k = 6) {
    if (spec.K > max_k) throw std::invalid_argument("enumerate_codebook: code too large to enumerate");
    const std::size_t count = std::size_t{1} << (2 * spec.K);
    Mat4 book;
    book.reserve(count);
    Z4Word u(static_cast<std::size_t>(spec.K), 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (int k = 0; k < spec.K; ++k) u[static_cast<std::size_t>(k)] = (idx >> (2 * k)) & 3u;
        book.push_back(encode(spec, u));
    }
    return book;
}

} // namespace ringcodec
