#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"

using namespace ringcodec;

namespace {
const Z4Word h3{3, 1, 2, 1}; // 3 + Z + 2Z^2 + Z^3
}

TEST_CASE("xi^3 coordinates for the m=3 ring polynomial", "[galois_ring]") {
    GaloisRingCtx ctx = gr_build(h3, 3);
    // Z^3 = -(3 + Z + 2Z^2) = 1 + 3Z + 2Z^2 (mod 4)
    CHECK(ctx.xi_pow[3] == Z4Word{1, 3, 2});
}

TEST_CASE("xi has multiplicative order exactly 2^m - 1", "[galois_ring]") {
    GaloisRingCtx ctx = gr_build(h3, 3);
    const Z4Word one{1, 0, 0};
    Z4Word x7 = gr_mul(ctx, ctx.xi_pow[6], ctx.xi_pow[1]);
    CHECK(x7 == one);
    for (int j = 1; j < 7; ++j) CHECK(ctx.xi_pow[static_cast<std::size_t>(j)] != one);
}

TEST_CASE("m=5 ring construction succeeds with N=32", "[galois_ring]") {
    GaloisRingCtx ctx = gr_build(Z4Word{3, 2, 3, 0, 0, 1}, 5);
    CHECK(ctx.N == 32);
    CHECK(ctx.xi_pow.size() == 31);
}

TEST_CASE("invalid ring polynomials are rejected", "[galois_ring]") {
    CHECK_THROWS_AS(gr_build(Z4Word{1, 0, 0, 1}, 3), std::invalid_argument);  // Z^3+1: reducible mod 2
    CHECK_THROWS_AS(gr_build(Z4Word{3, 1, 2, 2}, 3), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(gr_build(Z4Word{3, 1, 2, 1, 0}, 3), std::invalid_argument); // degree mismatch
}

TEST_CASE("gr_mul identities", "[galois_ring]") {
    GaloisRingCtx ctx = gr_build(h3, 3);
    const Z4Word one{1, 0, 0};
    const Z4Word two{2, 0, 0};
    for (const auto& x : ctx.xi_pow) CHECK(gr_mul(ctx, one, x) == x);
    CHECK(gr_mul(ctx, two, two) == Z4Word{0, 0, 0});
}

TEST_CASE("power table closes under multiplication", "[galois_ring]") {
    GaloisRingCtx ctx = gr_build(h3, 3);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            CHECK(gr_mul(ctx, ctx.xi_pow[static_cast<std::size_t>(a)], ctx.xi_pow[static_cast<std::size_t>(b)]) ==
                  ctx.xi_pow[static_cast<std::size_t>((a + b) % 7)]);
}

TEST_CASE("binary counterpart powers are distinct and nonzero", "[galois_ring]") {
    GaloisRingCtx ctx = gr_build(h3, 3);
    std::set<BitWord> seen;
    for (const auto& v : ctx.xi_bar_pow) {
        CHECK(v != BitWord{0, 0, 0});
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
    CHECK(ctx.xi_bar_pow[0] == BitWord{1, 0, 0});
    for (std::size_t j = 0; j < ctx.xi_pow.size(); ++j)
        for (std::size_t i = 0; i < 3; ++i) CHECK(ctx.xi_bar_pow[j][i] == (ctx.xi_pow[j][i] & 1u));
}

TEST_CASE("all presets construct", "[galois_ring]") {
    for (const auto& p : all_presets()) {
        GaloisRingCtx ctx = gr_build(p.h, p.m);
        CHECK(ctx.N == (1 << p.m));
    }
    CHECK(find_preset("k32") != nullptr);
    CHECK(find_preset("bogus") == nullptr);
}
