#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "channel.hpp"
#include "codebuild.hpp"
#include "group_algebra.hpp"
#include "z4.hpp"

// Two-stage lifting decoders: the bitwise APP decoder with SISO stages, the
// classical hard-decision lifting decoder, and the Chase-reprocessed variant.
// The binary stage code is the one generated by G0: RM(1,m) for Kerdock,
// the extended Hamming code for Preparata.

namespace ringcodec {

struct BinarySisoResult {
    std::vector<double> soft; // positive favors bit 0
    BitWord hard_codeword;
    BitWord hard_info;
};

struct LiftingOutput {
    std::vector<double> d0;
    std::vector<double> d1;
    Z4Word hard_word; // c0_hat + 2*c1_hat, always a codeword
};

namespace detail {

inline double safe_log(double x) { return std::log(std::max(x, 1e-300)); }

// RM(1,m) codeword (affine, mask): c_n = affine ^ <mask, n>
inline BitWord rm1_codeword(int m, int affine, std::size_t mask) {
    const std::size_t N = std::size_t{1} << m;
    BitWord c(N);
    for (std::size_t n = 0; n < N; ++n) c[n] = static_cast<std::uint8_t>(affine ^ parity_dot(mask, n));
    return c;
}

} // namespace detail

// Exact bitwise MAP for RM(1,m): correlations of all 2N codewords via one
// sign FWHT, then per-bit marginalization with one more FWHT.
inline BinarySisoResult siso_rm1(const std::vector<double>& llrs, int m) {
    const std::size_t N = std::size_t{1} << m;
    if (llrs.size() != N) throw std::invalid_argument("siso_rm1: length must be 2^m");

    std::vector<double> corr = llrs;
    fwht_sign(corr); // corr_v = sum_n (-1)^{<v,n>} llr_n

    // codeword (a,v) has log-likelihood (1-2a) corr_v / 2 up to a constant
    double mx = 0.0;
    std::size_t best_v = 0;
    double best_corr = corr[0];
    for (std::size_t v = 0; v < N; ++v) {
        if (std::abs(corr[v]) > std::abs(best_corr)) {
            best_corr = corr[v];
            best_v = v;
        }
        mx = std::max(mx, std::abs(corr[v]) * 0.5);
    }

    double total = 0.0;
    std::vector<double> diff(N); // p_v - q_v
    for (std::size_t v = 0; v < N; ++v) {
        const double p = std::exp(corr[v] * 0.5 - mx);
        const double q = std::exp(-corr[v] * 0.5 - mx);
        total += p + q;
        diff[v] = p - q;
    }
    fwht_sign(diff); // diff_n = sum_v (-1)^{<v,n>} (p_v - q_v)

    BinarySisoResult res;
    res.soft.resize(N);
    for (std::size_t n = 0; n < N; ++n) {
        const double num0 = 0.5 * (total + diff[n]);
        const double num1 = 0.5 * (total - diff[n]);
        res.soft[n] = detail::safe_log(num0) - detail::safe_log(num1);
    }
    const int affine = best_corr < 0.0 ? 1 : 0;
    res.hard_codeword = detail::rm1_codeword(m, affine, best_v);
    res.hard_info.resize(static_cast<std::size_t>(m + 1));
    res.hard_info[0] = static_cast<std::uint8_t>(affine);
    const BitWord vb = index_bits(best_v, m);
    std::copy(vb.begin(), vb.end(), res.hard_info.begin() + 1);
    return res;
}

namespace detail {

// single-error syndrome decoding for the extended Hamming code with parity
// check [index_bits(n); 1]; an even-weight detected error is resolved
// deterministically by flipping positions 0 and int(s)
inline BitWord exthamming_project(BitWord c, int m) {
    const std::size_t N = std::size_t{1} << m;
    std::size_t s = 0;
    int par = 0;
    for (std::size_t n = 0; n < N; ++n)
        if (c[n] & 1u) {
            s ^= n;
            par ^= 1;
        }
    if (par) {
        c[s] ^= 1u; // odd weight error: single flip at the syndrome index
    } else if (s != 0) {
        c[0] ^= 1u;
        c[s] ^= 1u;
    }
    return c;
}

} // namespace detail

// Exact bitwise MAP for the [2^m, 2^m-m-1] extended Hamming code, computed
// in the dual domain over the 2N dual (RM(1,m)) words with leave-one-out
// prefix/suffix products. info_positions select the systematic info bits.
inline BinarySisoResult siso_exthamming(const std::vector<double>& llrs, int m, const std::vector<int>& info_positions = {}) {
    const std::size_t N = std::size_t{1} << m;
    if (llrs.size() != N) throw std::invalid_argument("siso_exthamming: length must be 2^m");

    // clamp |lambda| below 1: at saturated reliabilities the dual-domain sums
    // are exact character sums that cancel to zero and lose the decision
    constexpr double lam_cap = 1.0 - 1e-12;
    std::vector<double> lam(N);
    for (std::size_t n = 0; n < N; ++n)
        lam[n] = std::clamp(std::tanh(0.5 * llrs[n]), -lam_cap, lam_cap);

    std::vector<double> sumL(N, 0.0), sumSigned(N, 0.0);
    std::vector<double> pre(N + 1), suf(N + 1), f(N);
    for (int a = 0; a < 2; ++a) {
        for (std::size_t v = 0; v < N; ++v) {
            for (std::size_t n = 0; n < N; ++n) f[n] = (a ^ parity_dot(v, n)) ? lam[n] : 1.0;
            pre[0] = 1.0;
            for (std::size_t n = 0; n < N; ++n) pre[n + 1] = pre[n] * f[n];
            suf[N] = 1.0;
            for (std::size_t n = N; n-- > 0;) suf[n] = suf[n + 1] * f[n];
            for (std::size_t j = 0; j < N; ++j) {
                const double loo = pre[j] * suf[j + 1];
                sumL[j] += loo;
                sumSigned[j] += (a ^ parity_dot(v, j)) ? -loo : loo;
            }
        }
    }

    BinarySisoResult res;
    res.soft.resize(N);
    BitWord raw(N);
    for (std::size_t j = 0; j < N; ++j) {
        const double n0 = (1.0 + lam[j]) * sumL[j];
        const double n1 = (1.0 - lam[j]) * sumSigned[j];
        res.soft[j] = detail::safe_log(n0) - detail::safe_log(n1);
        raw[j] = n1 > n0 ? 1u : 0u;
    }
    res.hard_codeword = detail::exthamming_project(raw, m);
    if (!info_positions.empty()) {
        res.hard_info.resize(info_positions.size());
        for (std::size_t k = 0; k < info_positions.size(); ++k)
            res.hard_info[k] = res.hard_codeword[static_cast<std::size_t>(info_positions[k])];
    }
    return res;
}

namespace detail {

// hard minimum-distance RM(1,m) decoding: argmax |FWHT| of the sign word
inline std::pair<BitWord, BitWord> hard_rm1_decode(const BitWord& bits, int m) {
    const std::size_t N = std::size_t{1} << m;
    std::vector<double> x(N);
    for (std::size_t n = 0; n < N; ++n) x[n] = bits[n] ? -1.0 : 1.0;
    fwht_sign(x);
    std::size_t best_v = 0;
    for (std::size_t v = 1; v < N; ++v)
        if (std::abs(x[v]) > std::abs(x[best_v])) best_v = v;
    const int affine = x[best_v] < 0.0 ? 1 : 0;
    BitWord info(static_cast<std::size_t>(m + 1));
    info[0] = static_cast<std::uint8_t>(affine);
    const BitWord vb = index_bits(best_v, m);
    std::copy(vb.begin(), vb.end(), info.begin() + 1);
    return {rm1_codeword(m, affine, best_v), info};
}

struct StageResult {
    BitWord codeword;
    BitWord info;
};

// one hard-decision stage, shared by the classical and Chase decoders
inline StageResult hard_stage_decode(const BitWord& bits, const CodeSpec& spec) {
    if (spec.family == CodeFamily::Kerdock) {
        auto [cw, info] = hard_rm1_decode(bits, spec.m);
        return {std::move(cw), std::move(info)};
    }
    BitWord cw = exthamming_project(bits, spec.m);
    BitWord info(spec.info_positions.size());
    for (std::size_t k = 0; k < info.size(); ++k) info[k] = cw[static_cast<std::size_t>(spec.info_positions[k])];
    return {std::move(cw), std::move(info)};
}

// Chase reprocessing: flip patterns on the e least reliable positions of the
// stage input, keep the candidate closest in Euclidean distance to proj
inline StageResult chase_stage_decode(const std::vector<double>& proj, const CodeSpec& spec, int e) {
    const std::size_t N = proj.size();
    if (e < 0 || static_cast<std::size_t>(e) > N) throw std::invalid_argument("chase_stage_decode: bad pattern weight");
    BitWord base(N);
    for (std::size_t n = 0; n < N; ++n) base[n] = proj[n] < 0.0 ? 1u : 0u;

    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return std::abs(proj[a]) < std::abs(proj[b]); });

    StageResult best;
    double best_metric = std::numeric_limits<double>::infinity();
    const std::size_t patterns = std::size_t{1} << e;
    BitWord trial = base;
    for (std::size_t p = 0; p < patterns; ++p) {
        trial = base;
        for (int i = 0; i < e; ++i)
            if ((p >> i) & 1u) trial[order[static_cast<std::size_t>(i)]] ^= 1u;
        StageResult cand = hard_stage_decode(trial, spec);
        double metric = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            const double d = proj[n] - (cand.codeword[n] ? -1.0 : 1.0);
            metric += d * d;
        }
        if (metric < best_metric) {
            best_metric = metric;
            best = std::move(cand);
        }
    }
    return best;
}

// residue r1 of Eq-style carry: (u0 * G0 over Z4 minus u0 (x) G0 over Z2) / 2,
// computed directly from the integer column sums
inline BitWord carry_residue(const BitWord& u0, const Mat2& G0) {
    const std::size_t N = G0[0].size();
    BitWord r1(N);
    for (std::size_t n = 0; n < N; ++n) {
        int s = 0;
        for (std::size_t k = 0; k < u0.size(); ++k) s += u0[k] & G0[k][n] & 1;
        r1[n] = static_cast<std::uint8_t>((s >> 1) & 1);
    }
    return r1;
}

inline Z4Word compose_hard_word(const CodeSpec& spec, const BitWord& u0, const BitWord& c1) {
    BitWord c0 = mul_vec_mat2(u0, spec.G0);
    Z4Word out(c0.size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = static_cast<std::uint8_t>((c0[n] & 1u) + 2u * (c1[n] & 1u));
    return out;
}

inline BinarySisoResult stage_siso(const std::vector<double>& llrs, const CodeSpec& spec) {
    if (spec.family == CodeFamily::Kerdock) return siso_rm1(llrs, spec.m);
    return siso_exthamming(llrs, spec.m, spec.info_positions);
}

} // namespace detail

// Bitwise APP lifting decoder: SISO-decode the low bit plane, cancel the
// carry residue and the G1 contribution, BPSK-mask the high plane, decode it.
inline LiftingOutput app_lifting_decode(const std::vector<cxd>& y, const ChannelParams& params, const CodeSpec& spec) {
    const std::size_t N = static_cast<std::size_t>(spec.N);
    if (y.size() != N) throw std::invalid_argument("app_lifting_decode: channel word length mismatch");

    std::vector<double> w0(N), w1(N);
    for (std::size_t n = 0; n < N; ++n) {
        auto [a, b] = bit_llrs(y[n], params.sigma);
        w0[n] = a;
        w1[n] = b;
    }

    BinarySisoResult stage1 = detail::stage_siso(w0, spec);
    const BitWord& u0 = stage1.hard_info;

    BitWord r1 = detail::carry_residue(u0, spec.G0);
    BitWord p = mul_vec_mat2(u0, spec.G1);
    for (std::size_t n = 0; n < N; ++n) p[n] ^= r1[n];

    std::vector<double> masked(N);
    for (std::size_t n = 0; n < N; ++n) masked[n] = (p[n] ? -1.0 : 1.0) * w1[n];
    BinarySisoResult stage2 = detail::stage_siso(masked, spec);

    BitWord c1(N);
    for (std::size_t n = 0; n < N; ++n) c1[n] = p[n] ^ stage2.hard_codeword[n];

    LiftingOutput out;
    out.d0 = std::move(stage1.soft);
    out.d1 = std::move(stage2.soft);
    out.hard_word = detail::compose_hard_word(spec, u0, c1);
    return out;
}

// Classical lifting: the same pipeline with bounded-distance hard stages.
inline LiftingOutput classical_lifting_decode(const std::vector<cxd>& y, const ChannelParams& params, const CodeSpec& spec) {
    const std::size_t N = static_cast<std::size_t>(spec.N);
    if (y.size() != N) throw std::invalid_argument("classical_lifting_decode: channel word length mismatch");
    (void)params;

    BitWord h0(N), h1raw(N);
    for (std::size_t n = 0; n < N; ++n) {
        h0[n] = y[n].real() < 0.0 ? 1u : 0u;
        h1raw[n] = y[n].imag() < 0.0 ? 1u : 0u;
    }

    detail::StageResult stage1 = detail::hard_stage_decode(h0, spec);
    const BitWord& u0 = stage1.info;

    BitWord r1 = detail::carry_residue(u0, spec.G0);
    BitWord p = mul_vec_mat2(u0, spec.G1);
    for (std::size_t n = 0; n < N; ++n) p[n] ^= r1[n];

    BitWord masked(N);
    for (std::size_t n = 0; n < N; ++n) masked[n] = h1raw[n] ^ p[n];
    detail::StageResult stage2 = detail::hard_stage_decode(masked, spec);

    BitWord c1(N);
    for (std::size_t n = 0; n < N; ++n) c1[n] = p[n] ^ stage2.codeword[n];

    LiftingOutput out;
    out.d0.assign(N, 0.0);
    out.d1.assign(N, 0.0);
    for (std::size_t n = 0; n < N; ++n) {
        out.d0[n] = stage1.codeword[n] ? -1.0 : 1.0;
        out.d1[n] = stage2.codeword[n] ? -1.0 : 1.0;
    }
    out.hard_word = detail::compose_hard_word(spec, u0, c1);
    return out;
}

// Chase-reprocessed lifting with per-stage pattern weights e1, e2.
inline LiftingOutput chase_lifting_decode(const std::vector<cxd>& y, const ChannelParams& params, const CodeSpec& spec, int e1, int e2) {
    const std::size_t N = static_cast<std::size_t>(spec.N);
    if (y.size() != N) throw std::invalid_argument("chase_lifting_decode: channel word length mismatch");
    (void)params;
    const double sqrt2 = 1.4142135623730950488;

    std::vector<double> proj0(N), proj1(N);
    for (std::size_t n = 0; n < N; ++n) {
        proj0[n] = sqrt2 * y[n].real();
        proj1[n] = sqrt2 * y[n].imag();
    }

    detail::StageResult stage1 = detail::chase_stage_decode(proj0, spec, e1);
    const BitWord& u0 = stage1.info;

    BitWord r1 = detail::carry_residue(u0, spec.G0);
    BitWord p = mul_vec_mat2(u0, spec.G1);
    for (std::size_t n = 0; n < N; ++n) p[n] ^= r1[n];

    std::vector<double> masked(N);
    for (std::size_t n = 0; n < N; ++n) masked[n] = (p[n] ? -1.0 : 1.0) * proj1[n];
    detail::StageResult stage2 = detail::chase_stage_decode(masked, spec, e2);

    BitWord c1(N);
    for (std::size_t n = 0; n < N; ++n) c1[n] = p[n] ^ stage2.codeword[n];

    LiftingOutput out;
    out.d0.assign(N, 0.0);
    out.d1.assign(N, 0.0);
    for (std::size_t n = 0; n < N; ++n) {
        out.d0[n] = stage1.codeword[n] ? -1.0 : 1.0;
        out.d1[n] = stage2.codeword[n] ? -1.0 : 1.0;
    }
    out.hard_word = detail::compose_hard_word(spec, u0, c1);
    return out;
}

inline std::pair<int, int> chase_default_weights(CodeFamily family) {
    return family == CodeFamily::Kerdock ? std::pair<int, int>{8, 4} : std::pair<int, int>{2, 1};
}

} // namespace ringcodec
