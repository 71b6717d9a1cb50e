#pragma once

#include <random>
#include <vector>

#include <ringcodec/ringcodec.hpp>

namespace testutil {

using namespace ringcodec;

// Eb/N0 reference used by the published benchmark curves (pinned empirically:
// the reported operating points identify N0 with the per-dimension noise
// variance, 3 dB away from the N0 = 2 sigma^2 convention).
inline constexpr Ebn0Ref kBenchmarkRef = Ebn0Ref::N0SigmaSq;

inline std::mt19937_64& rng() {
    static std::mt19937_64 eng(0xc0de5eedull);
    return eng;
}

inline Z4Word random_z4_word(std::size_t n) {
    Z4Word w(n);
    for (auto& s : w) s = static_cast<std::uint8_t>(rng()() & 3u);
    return w;
}

inline BitWord random_bit_word(std::size_t n) {
    BitWord w(n);
    for (auto& s : w) s = static_cast<std::uint8_t>(rng()() & 1u);
    return w;
}

inline double uniform01() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng());
}

inline double gauss(double sigma) {
    return std::normal_distribution<double>(0.0, sigma)(rng());
}

inline CodeSpec make_spec(const std::string& preset_id) {
    const CodePreset* p = find_preset(preset_id);
    if (!p) throw std::runtime_error("no preset " + preset_id);
    GaloisRingCtx ctx = gr_build(p->h, p->m);
    return build_code(ctx, p->family);
}

// transmit a random codeword over AWGN; returns (codeword, channel word)
inline std::pair<Z4Word, std::vector<cxd>> random_frame(const CodeSpec& spec, double sigma, Labeling lab) {
    Z4Word u = random_z4_word(static_cast<std::size_t>(spec.K));
    Z4Word c = encode(spec, u);
    std::vector<cxd> y = modulate(c, lab);
    for (auto& s : y) s += cxd(gauss(sigma), gauss(sigma));
    return {c, y};
}

// relative error on normalized posteriors, floored at 1e-3 so that entries
// far below the decision scale are compared absolutely (tiny entries carry
// cancellation noise in any dual-domain evaluation)
inline double max_rel_err(const std::vector<SPoly>& a, const std::vector<SPoly>& b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t v = 0; v < 4; ++v) {
            const double denom = std::max({std::abs(a[j][v]), std::abs(b[j][v]), 1e-3});
            worst = std::max(worst, std::abs(a[j][v] - b[j][v]) / denom);
        }
    return worst;
}

} // namespace testutil
