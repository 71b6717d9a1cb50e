#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "codebuild.hpp"
#include "group_algebra.hpp"
#include "z4.hpp"

// Symbol-wise MAP decoding of Kerdock and Preparata codes via the coset
// decomposition of the Kerdock code and the FWHT over R[Z]/(Z^4-1), plus the
// brute-force enumeration decoders used as oracles.
//
// Posteriors are computed up to a common positive per-position factor and
// normalized at the end; the channel constants eta and P[y] are never formed.

namespace ringcodec {

struct SoftDecision {
    std::vector<SPoly> post; // normalized per-position posteriors
    Z4Word hard;             // argmax, ties broken toward smaller alpha
};

namespace detail {

inline std::uint8_t argmax_poly(const SPoly& p) {
    std::uint8_t best = 0;
    for (std::uint8_t a = 1; a < 4; ++a)
        if (p.c[a] > p.c[best]) best = a;
    return best;
}

inline void finalize_decision(SoftDecision& out) {
    out.hard.resize(out.post.size());
    for (std::size_t j = 0; j < out.post.size(); ++j) {
        double sum = 0.0;
        for (double v : out.post[j].c) sum += v;
        if (sum > 0.0)
            for (auto& v : out.post[j].c) v /= sum;
        out.hard[j] = argmax_poly(out.post[j]);
    }
}

// running renormalization: acc holds terms scaled by exp(log_scale)
template <typename P>
inline void accumulate_scaled(std::vector<P>& acc, double& log_scale, const std::vector<P>& term, double term_log_scale) {
    if (term_log_scale <= log_scale) {
        const double f = std::exp(term_log_scale - log_scale);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += term[j] * f;
    } else {
        const double f = std::exp(log_scale - term_log_scale);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            acc[j] *= f;
            acc[j] += term[j];
        }
        log_scale = term_log_scale;
    }
}

} // namespace detail

// Kerdock MAP: per coset row n of A1, mask the log-likelihood word, FWHT,
// exponentiate (max-subtracted per row), FWHT back and accumulate.
inline SoftDecision map_decode_kerdock(const std::vector<SPoly>& log_w, const CodeSpec& spec) {
    if (spec.family != CodeFamily::Kerdock) throw std::invalid_argument("map_decode_kerdock: Kerdock spec required");
    const std::size_t N = static_cast<std::size_t>(spec.N);
    if (log_w.size() != N) throw std::invalid_argument("map_decode_kerdock: likelihood length mismatch");
    for (const auto& p : log_w)
        for (double v : p.c)
            if (std::isnan(v) || v > 1e300) throw std::invalid_argument("map_decode_kerdock: non-finite likelihood input");

    std::vector<SPoly> acc(N);
    double log_scale = -std::numeric_limits<double>::infinity();
    std::vector<SPoly> row(N);

    for (std::size_t n = 0; n < N; ++n) {
        const Z4Word& a1 = spec.A1[n];
        // b = w (.) zeta(-a1): multiplying by Z^{-a} rotates coefficients
        for (std::size_t j = 0; j < N; ++j) row[j] = log_w[j].rotated(-static_cast<int>(a1[j]));
        fwht(row); // t_n

        double mx = -std::numeric_limits<double>::infinity();
        for (const auto& p : row)
            for (double v : p.c)
                if (v > mx) mx = v;
        if (!std::isfinite(mx)) continue;

        for (auto& p : row)
            for (auto& v : p.c) v = std::exp(v - mx); // v_n, scaled by exp(-mx)
        fwht(row);                                    // q_n
        for (std::size_t j = 0; j < N; ++j) row[j] = row[j].rotated(static_cast<int>(a1[j]));
        detail::accumulate_scaled(acc, log_scale, row, mx);
    }

    SoftDecision out;
    out.post = std::move(acc);
    detail::finalize_decision(out);
    return out;
}

// Preparata MAP in the dual domain: component DFTs of the likelihood word,
// Kerdock-style coset accumulation applied to log-magnitudes and arguments,
// then the quotient/DFT post-processing that inverts the Fourier relation.
inline SoftDecision map_decode_preparata(const std::vector<SPoly>& prob_w, const CodeSpec& spec) {
    if (spec.family != CodeFamily::Preparata) throw std::invalid_argument("map_decode_preparata: Preparata spec required");
    const std::size_t N = static_cast<std::size_t>(spec.N);
    if (prob_w.size() != N) throw std::invalid_argument("map_decode_preparata: likelihood length mismatch");

    constexpr double kMagFloor = 1e-300;
    const double log_floor = std::log(kMagFloor);

    std::vector<CSPoly> r(N);
    std::vector<SPoly> rho(N), phi(N);
    for (std::size_t j = 0; j < N; ++j) {
        r[j] = dft4(prob_w[j]);
        for (std::size_t a = 0; a < 4; ++a) {
            const double mag = std::abs(r[j][a]);
            rho[j][a] = mag < kMagFloor ? log_floor : std::log(mag);
            phi[j][a] = mag < kMagFloor ? 0.0 : std::arg(r[j][a]);
        }
    }

    std::vector<CSPoly> acc(N);
    double log_scale = -std::numeric_limits<double>::infinity();
    std::vector<SPoly> t_row(N), e_row(N);
    std::vector<CSPoly> v_row(N);

    for (std::size_t n = 0; n < N; ++n) {
        const Z4Word& a1 = spec.A1[n];
        for (std::size_t j = 0; j < N; ++j) {
            t_row[j] = rho[j].rotated(-static_cast<int>(a1[j]));
            e_row[j] = phi[j].rotated(-static_cast<int>(a1[j]));
        }
        fwht(t_row);
        fwht(e_row);

        double mx = -std::numeric_limits<double>::infinity();
        for (const auto& p : t_row)
            for (double v : p.c)
                if (v > mx) mx = v;
        if (!std::isfinite(mx)) continue;

        // v = exp(t) * exp(I e): e holds arguments, so the second factor is
        // the complex phase that reassembles the product of the r values
        for (std::size_t l = 0; l < N; ++l)
            for (std::size_t a = 0; a < 4; ++a)
                v_row[l][a] = std::polar(std::exp(t_row[l][a] - mx), e_row[l][a]);
        fwht(v_row);
        for (std::size_t j = 0; j < N; ++j) v_row[j] = v_row[j].rotated(static_cast<int>(a1[j]));
        detail::accumulate_scaled(acc, log_scale, v_row, mx);
    }

    // g_j(Z) = sum_beta (s_beta / r_beta) r_{beta-alpha}; h = dft4(g) is the
    // dual-sum posterior up to one positive constant shared by all positions,
    // so the per-position normalization below absorbs it. (The textbook
    // z = h / (4 m_j) rescaling is skipped: m_j = sum_beta s_beta / r_beta
    // vanishes identically whenever the posterior concentrates on a nonzero
    // symbol, while h stays finite and proportional to the posterior.)
    SoftDecision out;
    out.post.resize(N);
    const double imag_tol = 1e-6;
    for (std::size_t j = 0; j < N; ++j) {
        CSPoly g;
        int used = 0;
        for (std::size_t beta = 0; beta < 4; ++beta) {
            if (std::abs(r[j][beta]) < kMagFloor) continue; // drop vanishing Fourier coefficients
            const std::complex<double> q = acc[j][beta] / r[j][beta];
            ++used;
            for (int alpha = 0; alpha < 4; ++alpha)
                g[static_cast<std::size_t>(alpha)] += q * r[j][static_cast<std::size_t>((static_cast<int>(beta) - alpha) & 3)];
        }
        if (used == 0) throw std::runtime_error("map_decode_preparata: degenerate likelihood input");
        const CSPoly h = dft4(g);
        double max_mag = 0.0;
        for (std::size_t a = 0; a < 4; ++a) max_mag = std::max(max_mag, std::abs(h[a]));
        for (std::size_t a = 0; a < 4; ++a) {
            if (max_mag > 0.0 && std::abs(h[a].imag()) > imag_tol * max_mag)
                throw std::runtime_error("map_decode_preparata: imaginary residue exceeds tolerance");
            out.post[j][a] = std::max(h[a].real(), 0.0);
        }
    }
    detail::finalize_decision(out);
    return out;
}

// Direct evaluation of the posterior by summing joint likelihoods over an
// enumerated codebook. Oracle for the Kerdock-side decoder.
inline SoftDecision naive_map(const std::vector<SPoly>& log_w, const Mat4& codebook) {
    if (codebook.empty()) throw std::invalid_argument("naive_map: empty codebook");
    if (codebook.size() > (std::size_t{1} << 12)) throw std::invalid_argument("naive_map: codebook too large");
    const std::size_t N = log_w.size();

    std::vector<double> joint(codebook.size());
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < codebook.size(); ++k) {
        double t = 0.0;
        for (std::size_t n = 0; n < N; ++n) t += log_w[n].c[codebook[k][n]];
        joint[k] = t;
        if (t > mx) mx = t;
    }
    SoftDecision out;
    out.post.assign(N, SPoly{});
    for (std::size_t k = 0; k < codebook.size(); ++k) {
        const double p = std::exp(joint[k] - mx);
        for (std::size_t n = 0; n < N; ++n) out.post[n].c[codebook[k][n]] += p;
    }
    detail::finalize_decision(out);
    return out;
}

// Literal dual-sum evaluation with complex arithmetic; leave-one-out factors
// come from prefix/suffix products, so no division is needed.
inline SoftDecision naive_dual_map(const std::vector<SPoly>& prob_w, const Mat4& dual_codebook) {
    if (dual_codebook.empty()) throw std::invalid_argument("naive_dual_map: empty dual codebook");
    if (dual_codebook.size() > (std::size_t{1} << 12)) throw std::invalid_argument("naive_dual_map: dual codebook too large");
    const std::size_t N = prob_w.size();

    std::vector<CSPoly> F(N);
    for (std::size_t n = 0; n < N; ++n) F[n] = dft4(prob_w[n]);

    // C[j][d] = sum over dual words b with b_j = d of prod_{n != j} F_n(b_n)
    std::vector<CSPoly> C(N);
    std::vector<std::complex<double>> pre(N + 1), suf(N + 1);
    for (const auto& b : dual_codebook) {
        pre[0] = 1.0;
        for (std::size_t n = 0; n < N; ++n) pre[n + 1] = pre[n] * F[n][b[n]];
        suf[N] = 1.0;
        for (std::size_t n = N; n-- > 0;) suf[n] = suf[n + 1] * F[n][b[n]];
        for (std::size_t j = 0; j < N; ++j) C[j][b[j]] += pre[j] * suf[j + 1];
    }

    SoftDecision out;
    out.post.assign(N, SPoly{});
    const std::complex<double> I(0.0, 1.0);
    for (std::size_t j = 0; j < N; ++j) {
        CSPoly inner; // inner[beta] = sum_d C[j][d] * F_j(d - beta)
        for (int beta = 0; beta < 4; ++beta)
            for (int d = 0; d < 4; ++d)
                inner[static_cast<std::size_t>(beta)] += C[j][static_cast<std::size_t>(d)] * F[j][static_cast<std::size_t>((d - beta) & 3)];
        const CSPoly A = dft4(inner);
        double max_mag = 0.0;
        for (std::size_t a = 0; a < 4; ++a) max_mag = std::max(max_mag, std::abs(A[a]));
        for (std::size_t a = 0; a < 4; ++a) {
            if (max_mag > 0.0 && std::abs(A[a].imag()) > 1e-9 * max_mag)
                throw std::runtime_error("naive_dual_map: imaginary residue exceeds tolerance");
            out.post[j][a] = std::max(A[a].real(), 0.0);
        }
    }
    detail::finalize_decision(out);
    return out;
}

} // namespace ringcodec
