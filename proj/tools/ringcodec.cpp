// Command line frontend: code inspection, single-shot encode/decode over the
// simulated channel, and Monte-Carlo sweeps emitting CSV.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <ringcodec/ringcodec.hpp>

namespace {

using namespace ringcodec;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

CodeSpec load_spec(const std::string& id) {
    const CodePreset* p = find_preset(id);
    if (!p) throw std::invalid_argument("unknown code preset: " + id);
    GaloisRingCtx ctx = gr_build(p->h, p->m);
    return build_code(ctx, p->family);
}

std::uint64_t matrix_checksum(const Mat4& M) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (const auto& row : M)
        for (auto s : row) {
            h ^= s;
            h *= 1099511628211ull;
        }
    return h;
}

std::string poly_string(const Z4Word& h) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) os << static_cast<int>(h[i]);
        else {
            if (h[i] != 1) os << static_cast<int>(h[i]) << "*";
            os << "Z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Z4Word parse_word(const std::string& text, std::size_t want) {
    Z4Word w;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3') throw std::invalid_argument("word symbols must be 0..3");
            w.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '3') throw std::invalid_argument("word symbols must be 0..3");
            w.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    if (w.size() != want) throw std::invalid_argument("expected " + std::to_string(want) + " symbols, got " + std::to_string(w.size()));
    return w;
}

std::vector<cxd> parse_samples(const std::string& path, std::size_t want) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open samples file: " + path);
    std::vector<double> vals;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream is(line);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (tok.find_first_not_of(" \t\r") != std::string::npos) vals.push_back(std::stod(tok));
    }
    if (vals.size() != 2 * want)
        throw std::invalid_argument("expected " + std::to_string(2 * want) + " comma-separated values (re,im pairs), got " + std::to_string(vals.size()));
    std::vector<cxd> y(want);
    for (std::size_t n = 0; n < want; ++n) y[n] = cxd(vals[2 * n], vals[2 * n + 1]);
    return y;
}

int cmd_info(const std::string& code) {
    CodeSpec spec = load_spec(code);
    const CodePreset* p = find_preset(code);
    const double rate = 2.0 * spec.K / spec.N;
    std::cout << "code: " << code << "\n";
    std::cout << "family: " << (spec.m == 3 ? "both(self-dual)" : (spec.family == CodeFamily::Kerdock ? "kerdock" : "preparata")) << "\n";
    std::cout << "N=" << spec.N << " K=" << spec.K << " m=" << spec.m << "\n";
    std::cout << "h(Z) = " << poly_string(p->h) << "\n";
    std::cout << "rate: " << rate << " bits/channel use\n";
    std::cout << "|code| = 4^" << spec.K << "\n";
    std::cout << "checksum G: " << std::hex << matrix_checksum(spec.G) << "\n";
    std::cout << "checksum H: " << matrix_checksum(spec.H) << std::dec << "\n";
    return kExitOk;
}

int cmd_encode(const std::string& code, const std::string& word) {
    CodeSpec spec = load_spec(code);
    Z4Word c = encode(spec, parse_word(word, static_cast<std::size_t>(spec.K)));
    for (std::size_t n = 0; n < c.size(); ++n) std::cout << (n ? "," : "") << static_cast<int>(c[n]);
    std::cout << "\n";
    return kExitOk;
}

int cmd_decode(const std::string& code, const std::string& decoder, double ebn0_db, const std::string& path) {
    CodeSpec spec = load_spec(code);
    const DecoderKind kind = decoder_from_name(decoder);
    std::vector<cxd> y = parse_samples(path, static_cast<std::size_t>(spec.N));
    ChannelParams params = ebn0_to_sigma(ebn0_db, spec);

    Z4Word hard;
    std::vector<SPoly> post;
    switch (kind) {
        case DecoderKind::Map: {
            SoftDecision d = spec.family == CodeFamily::Kerdock
                                 ? map_decode_kerdock(likelihood_word(y, params.sigma, Labeling::Standard, true), spec)
                                 : map_decode_preparata(likelihood_word(y, params.sigma, Labeling::Standard, false), spec);
            hard = std::move(d.hard);
            post = std::move(d.post);
            break;
        }
        case DecoderKind::NaiveMap: {
            const Mat4& gen = spec.family == CodeFamily::Kerdock ? spec.G : spec.H;
            if (gen.size() > 6) throw std::invalid_argument("naive_map: code too large to enumerate");
            Mat4 book;
            Z4Word u(gen.size(), 0);
            for (std::size_t idx = 0; idx < (std::size_t{1} << (2 * gen.size())); ++idx) {
                for (std::size_t k = 0; k < gen.size(); ++k) u[k] = (idx >> (2 * k)) & 3u;
                book.push_back(mul_vec_mat4(u, gen));
            }
            SoftDecision d = spec.family == CodeFamily::Kerdock
                                 ? naive_map(likelihood_word(y, params.sigma, Labeling::Standard, true), book)
                                 : naive_dual_map(likelihood_word(y, params.sigma, Labeling::Standard, false), book);
            hard = std::move(d.hard);
            post = std::move(d.post);
            break;
        }
        case DecoderKind::AppLifting:
            hard = app_lifting_decode(y, params, spec).hard_word;
            break;
        case DecoderKind::ClassicalLifting:
            hard = classical_lifting_decode(y, params, spec).hard_word;
            break;
        case DecoderKind::Chase: {
            auto [e1, e2] = chase_default_weights(spec.family);
            hard = chase_lifting_decode(y, params, spec, e1, e2).hard_word;
            break;
        }
    }

    std::cout << "hard: ";
    for (std::size_t n = 0; n < hard.size(); ++n) std::cout << (n ? "," : "") << static_cast<int>(hard[n]);
    std::cout << "\n";
    if (!post.empty()) {
        std::cout.setf(std::ios::scientific);
        std::cout.precision(5);
        for (std::size_t n = 0; n < post.size(); ++n) {
            std::cout << "post[" << n << "]:";
            for (std::size_t a = 0; a < 4; ++a) std::cout << " " << post[n][a];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_simulate(const std::string& config_path, std::uint64_t* seed, double* delta, std::uint64_t* max_frames, const std::string& out_override) {
    SweepConfig cfg;
    {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config: " << config_path << "\n";
            return kExitConfig;
        }
        try {
            cfg = parse_config(in);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitConfig;
        }
    }
    if (seed) cfg.seed = *seed;
    if (delta) cfg.stop.delta = *delta;
    if (max_frames) cfg.stop.max_frames = *max_frames;
    if (!out_override.empty()) cfg.output = out_override;

    std::vector<SimRecord> recs = run_sweep(cfg);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "error: cannot open output: " << cfg.output << "\n";
            return kExitRuntime;
        }
        os = &file;
    }
    *os << csv_header() << "\n";
    for (const auto& r : recs) *os << csv_row(r) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z4-linear Kerdock/Preparata codec toolbox"};
    app.require_subcommand(1);

    std::string code, word, decoder, samples, config, out;
    double ebn0_db = 0.0;
    std::uint64_t seed = 0, max_frames = 0;
    double delta = 0.0;
    bool have_seed = false, have_delta = false, have_max = false;

    auto* info = app.add_subcommand("info", "print code parameters");
    info->add_option("code", code)->required();

    auto* enc = app.add_subcommand("encode", "encode an information word");
    enc->add_option("code", code)->required();
    enc->add_option("word", word, "K symbols in 0..3, packed or comma separated")->required();

    auto* dec = app.add_subcommand("decode", "decode one channel word from CSV samples");
    dec->add_option("code", code)->required();
    dec->add_option("decoder", decoder)->required();
    dec->add_option("ebn0_db", ebn0_db)->required();
    dec->add_option("samples", samples, "CSV of re,im pairs")->required();

    auto* sim = app.add_subcommand("simulate", "run a Monte-Carlo sweep from a config file");
    sim->add_option("config", config)->required();
    sim->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });
    sim->add_option("--delta", delta)->each([&](const std::string&) { have_delta = true; });
    sim->add_option("--max-frames", max_frames)->each([&](const std::string&) { have_max = true; });
    sim->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (info->parsed()) return cmd_info(code);
        if (enc->parsed()) return cmd_encode(code, word);
        if (dec->parsed()) return cmd_decode(code, decoder, ebn0_db, samples);
        if (sim->parsed())
            return cmd_simulate(config, have_seed ? &seed : nullptr, have_delta ? &delta : nullptr, have_max ? &max_frames : nullptr, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
