#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ringcodec;
using namespace testutil;

namespace {

// direct N x N transform matrix apply: out_l = sum_j Z^{2<l,j>} in_j
std::vector<SPoly> fwht_by_matrix(const std::vector<SPoly>& in) {
    const std::size_t N = in.size();
    std::vector<SPoly> out(N);
    for (std::size_t l = 0; l < N; ++l)
        for (std::size_t j = 0; j < N; ++j) out[l] += in[j].rotated(2 * parity_dot(l, j));
    return out;
}

SPoly random_spoly() {
    SPoly p;
    for (std::size_t a = 0; a < 4; ++a) p[a] = uniform01() * 2.0 - 1.0;
    return p;
}

} // namespace

TEST_CASE("zeta monomials", "[group_algebra]") {
    CHECK(zeta(0).c == std::array<double, 4>{1, 0, 0, 0});
    CHECK(zeta(3).c == std::array<double, 4>{0, 0, 0, 1});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(spoly_mul(zeta(a), zeta(b)).c == zeta((a + b) & 3).c);
}

TEST_CASE("ring multiplication basics", "[group_algebra]") {
    SPoly f;
    f.c = {0.5, -1.0, 2.0, 0.25};
    CHECK(spoly_mul(f, zeta(0)).c == f.c);
    SPoly z;
    z.c = {0, 1, 0, 0};
    CHECK(spoly_mul(z, z).c == std::array<double, 4>{0, 0, 1, 0});
    SPoly ones;
    ones.c = {1, 1, 1, 1};
    CHECK(spoly_mul(ones, z).c == ones.c);
}

TEST_CASE("dft4 on monomials", "[group_algebra]") {
    const CSPoly d = dft4(zeta(0));
    for (std::size_t b = 0; b < 4; ++b) CHECK(std::abs(d[b] - cxd(1.0, 0.0)) < 1e-15);
    const CSPoly z = dft4(zeta(1));
    CHECK(std::abs(z[0] - cxd(1, 0)) < 1e-15);
    CHECK(std::abs(z[1] - cxd(0, -1)) < 1e-15);
    CHECK(std::abs(z[2] - cxd(-1, 0)) < 1e-15);
    CHECK(std::abs(z[3] - cxd(0, 1)) < 1e-15);
}

TEST_CASE("dft4 roundtrip", "[group_algebra]") {
    for (int t = 0; t < 100; ++t) {
        const SPoly f = random_spoly();
        const CSPoly back = idft4(dft4(f));
        for (std::size_t a = 0; a < 4; ++a) {
            CHECK(std::abs(back[a].real() - f[a]) < 1e-12);
            CHECK(std::abs(back[a].imag()) < 1e-12);
        }
    }
}

TEST_CASE("two-point butterfly", "[group_algebra]") {
    std::vector<SPoly> a{random_spoly(), random_spoly()};
    const SPoly x = a[0], y = a[1];
    fwht(a);
    CHECK(a[0].c == (x + y).c);
    CHECK(a[1].c == (x + y.rotated(2)).c);
}

TEST_CASE("four-point transform of the constant-one word", "[group_algebra]") {
    std::vector<SPoly> a(4, zeta(0));
    fwht(a);
    CHECK(a[0].c == std::array<double, 4>{4, 0, 0, 0});
    for (std::size_t l = 1; l < 4; ++l) CHECK(a[l].c == std::array<double, 4>{2, 0, 2, 0});
}

TEST_CASE("fwht matches the direct matrix for N=8 and N=16", "[group_algebra]") {
    for (std::size_t N : {std::size_t{8}, std::size_t{16}}) {
        for (int t = 0; t < 50; ++t) {
            std::vector<SPoly> in(N);
            for (auto& p : in) p = random_spoly();
            const std::vector<SPoly> want = fwht_by_matrix(in);
            std::vector<SPoly> got = in;
            fwht(got);
            for (std::size_t l = 0; l < N; ++l)
                for (std::size_t c = 0; c < 4; ++c) CHECK(std::abs(got[l][c] - want[l][c]) < 1e-12);
        }
    }
}

TEST_CASE("fwht butterfly count is (N/2) log2 N", "[group_algebra]") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<SPoly> a(std::size_t{1} << m, zeta(0));
        CHECK(fwht(a) == (a.size() / 2) * static_cast<std::size_t>(m));
    }
    std::vector<SPoly> bad(3);
    CHECK_THROWS_AS(fwht(bad), std::invalid_argument);
}

TEST_CASE("sign-domain transform matches the poly transform on real words", "[group_algebra]") {
    // a real scalar embeds as the coefficient of Z^0; Z^2 acts as -1
    const std::size_t N = 16;
    std::vector<double> x(N);
    for (auto& v : x) v = uniform01() * 2.0 - 1.0;
    std::vector<SPoly> p(N);
    for (std::size_t n = 0; n < N; ++n) {
        p[n][0] = std::max(x[n], 0.0);
        p[n][2] = std::max(-x[n], 0.0);
    }
    fwht(p);
    std::vector<double> s = x;
    fwht_sign(s);
    for (std::size_t n = 0; n < N; ++n) CHECK(std::abs((p[n][0] - p[n][2]) - s[n]) < 1e-12);
}
