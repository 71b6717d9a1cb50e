#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "codebuild.hpp"
#include "group_algebra.hpp"
#include "z4.hpp"

// QPSK modulation (two labelings), AWGN, Eb/N0 conversion and per-symbol
// likelihood computation. Both labelings emit unit-energy symbols.

namespace ringcodec {

using cxd = std::complex<double>;

enum class Labeling { Standard, Gray };

// Two readings of Eb/N0 differing by 3 dB in noise power:
//   N0TwoSigmaSq: N0 = 2 sigma^2 (sigma^2 per real dimension is N0/2)
//   N0SigmaSq:    N0 = sigma^2
// Reported Kerdock/Preparata error-rate curves follow the second reading;
// the first is the default elsewhere.
enum class Ebn0Ref { N0TwoSigmaSq, N0SigmaSq };

struct ChannelParams {
    double ebn0_db = 0.0;
    double sigma = 0.0; // per-dimension noise std
    double rate_bits_per_use = 0.0;
};

inline cxd qpsk_standard(std::uint8_t c) {
    switch (c & 3u) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// dyadic bit a on the in-phase axis, b on quadrature
inline cxd qpsk_gray(std::uint8_t c) {
    const double inv_sqrt2 = 0.7071067811865475244;
    const double a = static_cast<double>(c & 1u);
    const double b = static_cast<double>((c >> 1) & 1u);
    return {(1.0 - 2.0 * a) * inv_sqrt2, (1.0 - 2.0 * b) * inv_sqrt2};
}

inline cxd qpsk(std::uint8_t c, Labeling lab) {
    return lab == Labeling::Standard ? qpsk_standard(c) : qpsk_gray(c);
}

inline std::vector<cxd> modulate(const Z4Word& c, Labeling lab) {
    std::vector<cxd> x(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) x[n] = qpsk(c[n], lab);
    return x;
}

inline ChannelParams ebn0_to_sigma(double ebn0_db, const CodeSpec& spec, Ebn0Ref ref = Ebn0Ref::N0TwoSigmaSq) {
    ChannelParams p;
    p.ebn0_db = ebn0_db;
    p.rate_bits_per_use = 2.0 * static_cast<double>(spec.K) / static_cast<double>(spec.N);
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    const double denom = (ref == Ebn0Ref::N0TwoSigmaSq ? 2.0 : 1.0) * p.rate_bits_per_use * ebn0;
    p.sigma = std::sqrt(1.0 / denom);
    return p;
}

// P[y|alpha] up to a common positive factor, normalized to sum 1;
// log_form returns the logarithms of the normalized coefficients
inline SPoly likelihood_poly(cxd y, double sigma, Labeling lab, bool log_form) {
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    double logw[4];
    double mx = -1e300;
    for (int a = 0; a < 4; ++a) {
        logw[a] = -std::norm(y - qpsk(static_cast<std::uint8_t>(a), lab)) * inv2s2;
        if (logw[a] > mx) mx = logw[a];
    }
    double sum = 0.0;
    SPoly p;
    for (int a = 0; a < 4; ++a) {
        p.c[static_cast<std::size_t>(a)] = std::exp(logw[a] - mx);
        sum += p.c[static_cast<std::size_t>(a)];
    }
    const double logsum = std::log(sum) + mx;
    if (log_form) {
        for (int a = 0; a < 4; ++a) p.c[static_cast<std::size_t>(a)] = logw[a] - logsum;
    } else {
        for (int a = 0; a < 4; ++a) p.c[static_cast<std::size_t>(a)] /= sum;
    }
    return p;
}

inline std::vector<SPoly> likelihood_word(const std::vector<cxd>& y, double sigma, Labeling lab, bool log_form) {
    std::vector<SPoly> w(y.size());
    for (std::size_t n = 0; n < y.size(); ++n) w[n] = likelihood_poly(y[n], sigma, lab, log_form);
    return w;
}

// Box-Muller on top of mt19937_64: bit-reproducible across platforms for a
// fixed seed, unlike std::normal_distribution.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_) {
            have_ = false;
            return cached_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.2831853071795864769 * u2;
        cached_ = r * std::sin(t);
        have_ = true;
        return r * std::cos(t);
    }

    // uniform integer in [0, n)
    std::uint64_t uniform(std::uint64_t n) { return eng_() % n; }

  private:
    std::mt19937_64 eng_;
    double cached_ = 0.0;
    bool have_ = false;
};

inline std::vector<cxd> awgn(const std::vector<cxd>& x, double sigma, GaussianStream& rng) {
    if (!(sigma > 0.0)) throw std::invalid_argument("awgn: sigma must be positive");
    std::vector<cxd> y(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double re = rng.next() * sigma;
        const double im = rng.next() * sigma;
        y[n] = x[n] + cxd(re, im);
    }
    return y;
}

// exact per-dyadic-bit LLRs under the Gray labeling; positive favors bit 0.
// The Gray constellation separates the axes, so marginalizing the other bit
// collapses to the closed forms sqrt(2) Re(y) / sigma^2 and sqrt(2) Im(y) / sigma^2.
inline std::pair<double, double> bit_llrs(cxd y, double sigma) {
    const double s2 = sigma * sigma;
    const double sqrt2 = 1.4142135623730950488;
    return {sqrt2 * y.real() / s2, sqrt2 * y.imag() / s2};
}

// the marginalization route, kept as the cross-check path
inline std::pair<double, double> bit_llrs_marginal(cxd y, double sigma) {
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    double p[4];
    for (int a = 0; a < 4; ++a) p[a] = std::exp(-std::norm(y - qpsk_gray(static_cast<std::uint8_t>(a))) * inv2s2);
    const double w0 = std::log((p[0] + p[2]) / (p[1] + p[3]));
    const double w1 = std::log((p[0] + p[1]) / (p[2] + p[3]));
    return {w0, w1};
}

} // namespace ringcodec
