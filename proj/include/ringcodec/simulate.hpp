#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "channel.hpp"
#include "codebuild.hpp"
#include "decode_lifting.hpp"
#include "decode_map.hpp"
#include "z4.hpp"

// Seeded Monte-Carlo frame/symbol error rate estimation. Every frame derives
// its noise stream from (seed, frame index) alone, so any point is exactly
// reproducible regardless of stopping behaviour or threading.

namespace ringcodec {

enum class DecoderKind { Map, NaiveMap, AppLifting, ClassicalLifting, Chase };

inline std::string decoder_name(DecoderKind d) {
    switch (d) {
        case DecoderKind::Map: return "map";
        case DecoderKind::NaiveMap: return "naive_map";
        case DecoderKind::AppLifting: return "app_lifting";
        case DecoderKind::ClassicalLifting: return "classical_lifting";
        case DecoderKind::Chase: return "chase";
    }
    throw std::logic_error("decoder_name: bad enum");
}

inline DecoderKind decoder_from_name(const std::string& s) {
    if (s == "map") return DecoderKind::Map;
    if (s == "naive_map") return DecoderKind::NaiveMap;
    if (s == "app_lifting") return DecoderKind::AppLifting;
    if (s == "classical_lifting") return DecoderKind::ClassicalLifting;
    if (s == "chase") return DecoderKind::Chase;
    throw std::invalid_argument("unknown decoder: " + s);
}

struct StopRule {
    double delta = 0.05;            // target relative accuracy of the FER estimate
    std::uint64_t min_frame_errors = 0; // 0 derives ceil(1/delta^2) from delta
    std::uint64_t max_frames = 10000000;

    std::uint64_t target_errors() const {
        if (min_frame_errors) return min_frame_errors;
        return static_cast<std::uint64_t>(std::ceil(1.0 / (delta * delta)));
    }
};

struct SimRecord {
    std::string code;
    std::string decoder;
    double ebn0_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t symbol_errors = 0;
    std::uint64_t ml_bound_errors = 0; // frames where the tx word was not the likeliest
    double fer = 0.0;
    double ser = 0.0;
    std::uint64_t seed = 0;
    double wall_time = 0.0; // seconds, excluded from the CSV row
};

// sweep defaults follow the usual measurement protocol: grid from -1.6 dB in
// 0.5 dB steps, relative precision 0.05
struct SweepConfig {
    std::vector<std::string> codes = {"nr8"};
    std::vector<DecoderKind> decoders = {DecoderKind::Map};
    double ebn0_start_db = -1.6;
    double ebn0_step_db = 0.5;
    double ebn0_stop_db = 4.9;
    std::uint64_t seed = 1;
    StopRule stop;
    Ebn0Ref ebn0_ref = Ebn0Ref::N0TwoSigmaSq;
    int chase_e1 = -1; // -1 selects the per-family default
    int chase_e2 = -1;
    std::string output; // empty writes to stdout

    std::vector<double> grid() const {
        if (!(ebn0_step_db > 0.0)) throw std::invalid_argument("SweepConfig: step must be positive");
        if (ebn0_start_db > ebn0_stop_db) throw std::invalid_argument("SweepConfig: start exceeds stop");
        std::vector<double> g;
        for (double db = ebn0_start_db; db <= ebn0_stop_db + 1e-9; db += ebn0_step_db) g.push_back(db);
        return g;
    }
};

namespace detail {

inline std::uint64_t frame_seed(std::uint64_t seed, std::uint64_t frame) {
    // splitmix64 of the (seed, frame) pair; decorrelates nearby streams
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (frame + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline Labeling decoder_labeling(DecoderKind d) {
    switch (d) {
        case DecoderKind::Map:
        case DecoderKind::NaiveMap:
            return Labeling::Standard;
        default:
            return Labeling::Gray;
    }
}

inline double word_log_likelihood(const Z4Word& c, const std::vector<SPoly>& log_w) {
    double s = 0.0;
    for (std::size_t n = 0; n < c.size(); ++n) s += log_w[n][c[n]];
    return s;
}

// codebook for the naive decoder: the code itself on the Kerdock side, the
// dual (Kerdock) codebook on the Preparata side
inline Mat4 naive_codebook(const CodeSpec& spec) {
    const Mat4& gen = spec.family == CodeFamily::Kerdock ? spec.G : spec.H;
    const int k = static_cast<int>(gen.size());
    if (k > 6) throw std::invalid_argument("naive decoder: code too large to enumerate");
    const std::size_t count = std::size_t{1} << (2 * k);
    Mat4 book;
    book.reserve(count);
    Z4Word u(static_cast<std::size_t>(k), 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] = (idx >> (2 * i)) & 3u;
        book.push_back(mul_vec_mat4(u, gen));
    }
    return book;
}

} // namespace detail

inline SimRecord run_point(const CodeSpec& spec, const std::string& code_name, DecoderKind decoder, double ebn0_db, std::uint64_t seed,
                           const StopRule& stop = {}, Ebn0Ref ref = Ebn0Ref::N0TwoSigmaSq, int chase_e1 = -1, int chase_e2 = -1) {
    const std::size_t N = static_cast<std::size_t>(spec.N);
    ChannelParams params = ebn0_to_sigma(ebn0_db, spec, ref);
    const Labeling lab = detail::decoder_labeling(decoder);

    auto [def_e1, def_e2] = chase_default_weights(spec.family);
    if (chase_e1 < 0) chase_e1 = def_e1;
    if (chase_e2 < 0) chase_e2 = def_e2;

    SimRecord rec;
    rec.code = code_name;
    rec.decoder = decoder_name(decoder);
    rec.ebn0_db = ebn0_db;
    rec.seed = seed;

    Mat4 naive_book;
    if (decoder == DecoderKind::NaiveMap) naive_book = detail::naive_codebook(spec);

    const auto t0 = std::chrono::steady_clock::now();

    for (std::uint64_t frame = 0; frame < stop.max_frames; ++frame) {
        GaussianStream rng(detail::frame_seed(seed, frame));
        Z4Word u(static_cast<std::size_t>(spec.K));
        for (auto& s : u) s = static_cast<std::uint8_t>(rng.uniform(4));
        Z4Word c = encode(spec, u);
        std::vector<cxd> x = modulate(c, lab);
        std::vector<cxd> y = awgn(x, params.sigma, rng);

        Z4Word hard;
        switch (decoder) {
            case DecoderKind::Map: {
                if (spec.family == CodeFamily::Kerdock)
                    hard = map_decode_kerdock(likelihood_word(y, params.sigma, lab, true), spec).hard;
                else
                    hard = map_decode_preparata(likelihood_word(y, params.sigma, lab, false), spec).hard;
                break;
            }
            case DecoderKind::NaiveMap: {
                if (spec.family == CodeFamily::Kerdock)
                    hard = naive_map(likelihood_word(y, params.sigma, lab, true), naive_book).hard;
                else
                    hard = naive_dual_map(likelihood_word(y, params.sigma, lab, false), naive_book).hard;
                break;
            }
            case DecoderKind::AppLifting:
                hard = app_lifting_decode(y, params, spec).hard_word;
                break;
            case DecoderKind::ClassicalLifting:
                hard = classical_lifting_decode(y, params, spec).hard_word;
                break;
            case DecoderKind::Chase:
                hard = chase_lifting_decode(y, params, spec, chase_e1, chase_e2).hard_word;
                break;
        }

        rec.frames += 1;
        std::uint64_t se = 0;
        for (std::size_t n = 0; n < N; ++n)
            if (hard[n] != c[n]) ++se;
        if (se > 0) {
            rec.frame_errors += 1;
            rec.symbol_errors += se;
            // count as an ML-bound error only if the decoded word is at least
            // as likely as the transmitted one
            const std::vector<SPoly> lw = likelihood_word(y, params.sigma, lab, true);
            const double lt = detail::word_log_likelihood(c, lw);
            const double ld = detail::word_log_likelihood(hard, lw);
            if (ld >= lt) rec.ml_bound_errors += 1;
        }

        if (rec.frame_errors >= stop.target_errors()) break;
    }

    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rec.fer = rec.frames ? static_cast<double>(rec.frame_errors) / static_cast<double>(rec.frames) : 0.0;
    rec.ser = rec.frames ? static_cast<double>(rec.symbol_errors) / (static_cast<double>(rec.frames) * static_cast<double>(N)) : 0.0;
    return rec;
}

inline std::vector<SimRecord> run_sweep(const SweepConfig& cfg) {
    const std::vector<double> grid = cfg.grid();
    if (grid.empty() || cfg.codes.empty() || cfg.decoders.empty()) throw std::invalid_argument("run_sweep: empty grid");
    std::vector<SimRecord> out;
    for (const std::string& code : cfg.codes) {
        const CodePreset* preset = find_preset(code);
        if (!preset) throw std::invalid_argument("unknown code preset: " + code);
        GaloisRingCtx ctx = gr_build(preset->h, preset->m);
        CodeSpec spec = build_code(ctx, preset->family);
        for (DecoderKind dec : cfg.decoders)
            for (double db : grid)
                out.push_back(run_point(spec, code, dec, db, cfg.seed, cfg.stop, cfg.ebn0_ref, cfg.chase_e1, cfg.chase_e2));
    }
    return out;
}

// flat key=value config, one pair per line; '#' starts a comment, lists are
// comma separated
inline SweepConfig parse_config(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    auto split_list = [&](const std::string& val) {
        std::vector<std::string> items;
        std::istringstream vs(val);
        std::string tok;
        while (std::getline(vs, tok, ',')) items.push_back(trim(tok));
        return items;
    };
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (!trim(line).empty()) throw std::invalid_argument("config: malformed line: " + line);
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "codes") cfg.codes = split_list(val);
        else if (key == "decoders") {
            cfg.decoders.clear();
            for (const auto& s : split_list(val)) cfg.decoders.push_back(decoder_from_name(s));
        }
        else if (key == "ebn0_start_db") cfg.ebn0_start_db = std::stod(val);
        else if (key == "ebn0_step_db") cfg.ebn0_step_db = std::stod(val);
        else if (key == "ebn0_stop_db") cfg.ebn0_stop_db = std::stod(val);
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "delta") cfg.stop.delta = std::stod(val);
        else if (key == "min_frame_errors") cfg.stop.min_frame_errors = std::stoull(val);
        else if (key == "max_frames") cfg.stop.max_frames = std::stoull(val);
        else if (key == "ebn0_ref") {
            if (val == "n0_2sigma2") cfg.ebn0_ref = Ebn0Ref::N0TwoSigmaSq;
            else if (val == "n0_sigma2") cfg.ebn0_ref = Ebn0Ref::N0SigmaSq;
            else throw std::invalid_argument("config: bad ebn0_ref: " + val);
        }
        else if (key == "chase_e1") cfg.chase_e1 = std::stoi(val);
        else if (key == "chase_e2") cfg.chase_e2 = std::stoi(val);
        else if (key == "output") cfg.output = val;
        else throw std::invalid_argument("config: unknown key: " + key);
    }
    return cfg;
}

inline std::string emit_config(const SweepConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "codes=";
    for (std::size_t i = 0; i < cfg.codes.size(); ++i) os << (i ? "," : "") << cfg.codes[i];
    os << "\ndecoders=";
    for (std::size_t i = 0; i < cfg.decoders.size(); ++i) os << (i ? "," : "") << decoder_name(cfg.decoders[i]);
    os << "\nebn0_start_db=" << cfg.ebn0_start_db;
    os << "\nebn0_step_db=" << cfg.ebn0_step_db;
    os << "\nebn0_stop_db=" << cfg.ebn0_stop_db;
    os << "\nseed=" << cfg.seed;
    os << "\ndelta=" << cfg.stop.delta;
    os << "\nmin_frame_errors=" << cfg.stop.min_frame_errors;
    os << "\nmax_frames=" << cfg.stop.max_frames;
    os << "\nebn0_ref=" << (cfg.ebn0_ref == Ebn0Ref::N0TwoSigmaSq ? "n0_2sigma2" : "n0_sigma2");
    os << "\nchase_e1=" << cfg.chase_e1;
    os << "\nchase_e2=" << cfg.chase_e2;
    if (!cfg.output.empty()) os << "\noutput=" << cfg.output;
    os << "\n";
    return os.str();
}

// fixed-format CSV row; floats in scientific notation with 6 significant digits
inline std::string csv_header() {
    return "code,decoder,ebn0_db,frames,frame_errors,symbol_errors,ml_bound_errors,fer,ser,seed";
}

inline std::string csv_row(const SimRecord& r) {
    std::ostringstream os;
    os.setf(std::ios::scientific);
    os.precision(5); // 6 significant digits
    os << r.code << ',' << r.decoder << ',' << r.ebn0_db << ',' << r.frames << ',' << r.frame_errors << ',' << r.symbol_errors << ','
       << r.ml_bound_errors << ',' << r.fer << ',' << r.ser << ',' << r.seed;
    return os.str();
}

} // namespace ringcodec
