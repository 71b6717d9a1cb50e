#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ringcodec;
using namespace testutil;

namespace {

BitWord rm1_word(int m, int affine, std::size_t mask) {
    const std::size_t N = std::size_t{1} << m;
    BitWord c(N);
    for (std::size_t n = 0; n < N; ++n) c[n] = static_cast<std::uint8_t>(affine ^ parity_dot(mask, n));
    return c;
}

Mat2 rm1_codebook(int m) {
    Mat2 book;
    for (int a = 0; a < 2; ++a)
        for (std::size_t v = 0; v < (std::size_t{1} << m); ++v) book.push_back(rm1_word(m, a, v));
    return book;
}

Mat2 exthamming_codebook(int m) {
    const std::size_t N = std::size_t{1} << m;
    Mat2 book;
    for (std::size_t word = 0; word < (std::size_t{1} << N); ++word) {
        std::size_t s = 0;
        int par = 0;
        for (std::size_t n = 0; n < N; ++n)
            if ((word >> n) & 1u) {
                s ^= n;
                par ^= 1;
            }
        if (s == 0 && par == 0) {
            BitWord c(N);
            for (std::size_t n = 0; n < N; ++n) c[n] = (word >> n) & 1u;
            book.push_back(std::move(c));
        }
    }
    return book;
}

// exhaustive bitwise MAP over an explicit codebook
std::vector<double> brute_bitwise_map(const std::vector<double>& llrs, const Mat2& book) {
    const std::size_t N = llrs.size();
    std::vector<double> logl(book.size());
    double mx = -1e300;
    for (std::size_t k = 0; k < book.size(); ++k) {
        double t = 0.0;
        for (std::size_t n = 0; n < N; ++n) t += 0.5 * (book[k][n] ? -llrs[n] : llrs[n]);
        logl[k] = t;
        mx = std::max(mx, t);
    }
    std::vector<double> num0(N, 0.0), num1(N, 0.0);
    for (std::size_t k = 0; k < book.size(); ++k) {
        const double p = std::exp(logl[k] - mx);
        for (std::size_t n = 0; n < N; ++n) (book[k][n] ? num1[n] : num0[n]) += p;
    }
    std::vector<double> soft(N);
    for (std::size_t n = 0; n < N; ++n) soft[n] = std::log(std::max(num0[n], 1e-300)) - std::log(std::max(num1[n], 1e-300));
    return soft;
}

std::vector<double> random_llrs(std::size_t n, double scale) {
    std::vector<double> l(n);
    for (auto& v : l) v = (uniform01() * 2.0 - 1.0) * scale;
    return l;
}

} // namespace

TEST_CASE("siso_rm1 basics", "[decode_lifting]") {
    std::vector<double> strong(16, 6.0);
    BinarySisoResult r = siso_rm1(strong, 4);
    CHECK(r.hard_codeword == BitWord(16, 0));
    for (double s : r.soft) CHECK(s > 0.0);

    for (int t = 0; t < 20; ++t) {
        const std::size_t mask = rng()() & 15u;
        const int affine = static_cast<int>(rng()() & 1u);
        BitWord c = rm1_word(4, affine, mask);
        std::vector<double> llrs(16);
        for (std::size_t n = 0; n < 16; ++n) llrs[n] = c[n] ? -8.0 : 8.0;
        BinarySisoResult d = siso_rm1(llrs, 4);
        CHECK(d.hard_codeword == c);
        CHECK(d.hard_info[0] == static_cast<std::uint8_t>(affine));
        CHECK(bits_to_index(BitWord(d.hard_info.begin() + 1, d.hard_info.end())) == mask);
    }
    CHECK_THROWS_AS(siso_rm1(std::vector<double>(12), 4), std::invalid_argument);
}

TEST_CASE("siso_rm1 equals the exhaustive bitwise MAP", "[decode_lifting]") {
    Mat2 book = rm1_codebook(4);
    for (int t = 0; t < 500; ++t) {
        std::vector<double> llrs = random_llrs(16, 4.0);
        BinarySisoResult r = siso_rm1(llrs, 4);
        std::vector<double> want = brute_bitwise_map(llrs, book);
        for (std::size_t n = 0; n < 16; ++n) CHECK(std::abs(r.soft[n] - want[n]) < 1e-9 * (1.0 + std::abs(want[n])));
        // the hard output must be the ML codeword
        double best = -1e300, got = 0.0;
        for (const auto& c : book) {
            double s = 0.0;
            for (std::size_t n = 0; n < 16; ++n) s += 0.5 * (c[n] ? -llrs[n] : llrs[n]);
            best = std::max(best, s);
            if (c == r.hard_codeword) got = s;
        }
        CHECK(std::abs(got - best) < 1e-9);
    }
}

TEST_CASE("siso_exthamming basics", "[decode_lifting]") {
    Mat2 book = exthamming_codebook(4);
    CHECK(book.size() == 2048);
    // noiseless codeword input comes back unchanged
    for (int t = 0; t < 20; ++t) {
        const BitWord& c = book[rng()() % book.size()];
        std::vector<double> llrs(16);
        for (std::size_t n = 0; n < 16; ++n) llrs[n] = c[n] ? -7.0 : 7.0;
        CHECK(siso_exthamming(llrs, 4).hard_codeword == c);
    }
    // complete uncertainty stays uncertain
    BinarySisoResult u = siso_exthamming(std::vector<double>(16, 0.0), 4);
    for (double s : u.soft) CHECK(std::abs(s) < 1e-12);
}

TEST_CASE("siso_exthamming equals the exhaustive bitwise MAP", "[decode_lifting]") {
    Mat2 book = exthamming_codebook(4);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> llrs = random_llrs(16, 3.0);
        BinarySisoResult r = siso_exthamming(llrs, 4);
        std::vector<double> want = brute_bitwise_map(llrs, book);
        for (std::size_t n = 0; n < 16; ++n) CHECK(std::abs(r.soft[n] - want[n]) < 1e-9 * (1.0 + std::abs(want[n])));
    }
}

TEST_CASE("siso decoders follow their hard counterparts at high confidence", "[decode_lifting]") {
    // one flipped position at large LLR magnitude: both stages must restore it
    for (int t = 0; t < 20; ++t) {
        BitWord c = rm1_word(4, static_cast<int>(rng()() & 1u), rng()() & 15u);
        std::vector<double> llrs(16);
        for (std::size_t n = 0; n < 16; ++n) llrs[n] = (c[n] ? -40.0 : 40.0);
        llrs[rng()() % 16] *= -1.0;
        CHECK(siso_rm1(llrs, 4).hard_codeword == c);
    }
    Mat2 book = exthamming_codebook(4);
    for (int t = 0; t < 20; ++t) {
        const BitWord& c = book[rng()() % book.size()];
        std::vector<double> llrs(16);
        for (std::size_t n = 0; n < 16; ++n) llrs[n] = (c[n] ? -40.0 : 40.0);
        llrs[rng()() % 16] *= -1.0;
        CHECK(siso_exthamming(llrs, 4).hard_codeword == c);
    }
}

TEST_CASE("carry residue identity", "[decode_lifting]") {
    CodeSpec spec = make_spec("nr8");
    // u0 * G0 over the integers mod 4 equals (u0 (x) G0) + 2 * residue
    auto check_residue = [&](const CodeSpec& s, const BitWord& u0) {
        BitWord x = mul_vec_mat2(u0, s.G0);
        BitWord r1 = ringcodec::detail::carry_residue(u0, s.G0);
        for (std::size_t n = 0; n < x.size(); ++n) {
            int full = 0;
            for (std::size_t k = 0; k < u0.size(); ++k) full += u0[k] * s.G0[k][n];
            CHECK(mod4(full) == mod4(x[n] + 2 * r1[n]));
        }
    };
    check_residue(spec, BitWord{1, 1, 0, 0});
    for (const char* id : {"nr8", "k32", "p32"}) {
        CodeSpec s = make_spec(id);
        for (int t = 0; t < 25; ++t) check_residue(s, random_bit_word(s.G0.size()));
    }
}

TEST_CASE("lifting decoders invert the noiseless channel", "[decode_lifting]") {
    for (const char* id : {"nr8", "k32", "p32"}) {
        CodeSpec spec = make_spec(id);
        ChannelParams params = ebn0_to_sigma(8.0, spec);
        for (int t = 0; t < 100; ++t) {
            Z4Word c = encode(spec, random_z4_word(static_cast<std::size_t>(spec.K)));
            std::vector<cxd> y = modulate(c, Labeling::Gray);
            CHECK(app_lifting_decode(y, params, spec).hard_word == c);
            CHECK(classical_lifting_decode(y, params, spec).hard_word == c);
            auto [e1, e2] = chase_default_weights(spec.family);
            CHECK(chase_lifting_decode(y, params, spec, e1, e2).hard_word == c);
        }
    }
}

TEST_CASE("classical lifting corrects one flipped hard bit per stage", "[decode_lifting]") {
    for (const char* id : {"k32", "p32"}) {
        CodeSpec spec = make_spec(id);
        ChannelParams params = ebn0_to_sigma(8.0, spec);
        for (int t = 0; t < 50; ++t) {
            Z4Word c = encode(spec, random_z4_word(static_cast<std::size_t>(spec.K)));
            std::vector<cxd> y = modulate(c, Labeling::Gray);
            // flip the sign of one real part and one imaginary part
            const std::size_t i = rng()() % y.size(), j = rng()() % y.size();
            y[i] = cxd(-y[i].real(), y[i].imag());
            y[j] = cxd(y[j].real(), -y[j].imag());
            CHECK(classical_lifting_decode(y, params, spec).hard_word == c);
        }
    }
}

TEST_CASE("chase with empty pattern sets equals classical lifting", "[decode_lifting]") {
    for (const char* id : {"nr8", "p32"}) {
        CodeSpec spec = make_spec(id);
        ChannelParams params = ebn0_to_sigma(3.0, spec, kBenchmarkRef);
        for (int t = 0; t < 50; ++t) {
            auto [c, y] = random_frame(spec, params.sigma, Labeling::Gray);
            (void)c;
            CHECK(chase_lifting_decode(y, params, spec, 0, 0).hard_word == classical_lifting_decode(y, params, spec).hard_word);
        }
    }
}

TEST_CASE("lifting outputs always satisfy the parity checks", "[decode_lifting]") {
    for (const char* id : {"nr8", "k32", "p32"}) {
        CodeSpec spec = make_spec(id);
        ChannelParams params = ebn0_to_sigma(1.0, spec, kBenchmarkRef); // noisy on purpose
        for (int t = 0; t < 50; ++t) {
            auto [c, y] = random_frame(spec, params.sigma, Labeling::Gray);
            (void)c;
            CHECK(is_codeword(spec, app_lifting_decode(y, params, spec).hard_word));
            CHECK(is_codeword(spec, classical_lifting_decode(y, params, spec).hard_word));
            CHECK(is_codeword(spec, chase_lifting_decode(y, params, spec, 4, 2).hard_word));
        }
    }
}
