#include "bmocz/sim/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <mutex>
#include <thread>

#include "bmocz/codec.hpp"
#include "bmocz/fec/bch.hpp"
#include "bmocz/fec/cpc.hpp"

namespace bmocz::sim {

namespace {

const fec::CpcCodebook& shared_cpc_codebook() {
    static const fec::CpcCodebook book = fec::CpcCodebook::build();
    return book;
}

std::string format_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Fixed per-point receiver state shared read-only by all worker threads.
struct Pipeline {
    SimConfig cfg;
    ConstellationSpec spec;
    double n0 = 0.0;
    FadingMode fading = FadingMode::Awgn;
    int info_bits = 0;

    std::unique_ptr<TemplateVector> tmpl;            // Fourier estimator
    std::unique_ptr<FractionalDizet> fractional;     // oversampled decoder
    const fec::CpcCodebook* cpc = nullptr;

    Pipeline(const SimConfig& c, double ebn0_db)
        : cfg(c), spec(c.K, c.resolved_radius(), c.resolved_zeta()) {
        info_bits = cfg.info_bits();
        n0 = ebn0_to_n0(NoiseConfig{ebn0_db, info_bits, static_cast<double>(cfg.K + 1)});
        fading = cfg.channel == ChannelModel::Rayleigh ? FadingMode::Rayleigh
                                                       : FadingMode::Awgn;
        if (cfg.estimator == EstimatorKind::Fourier) {
            tmpl = std::make_unique<TemplateVector>(
                make_template(spec, cfg.est.grid_size));
        } else if (cfg.estimator == EstimatorKind::Fractional) {
            fractional = std::make_unique<FractionalDizet>(spec, cfg.oversample);
        }
        if (cfg.code == Code::Acpc) cpc = &shared_cpc_codebook();
    }
};

struct Tally {
    long long bit_errors = 0;
    long long block_errors = 0;
};

void run_trial(const Pipeline& p, TrialRng& rng, Tally& tally,
               std::vector<uint8_t>& msg, std::vector<uint8_t>& block_bits) {
    const SimConfig& cfg = p.cfg;

    msg.resize(static_cast<size_t>(p.info_bits));
    for (auto& b : msg) b = rng.next_bit() ? 1 : 0;

    const std::vector<uint8_t>* tx_bits = &msg;
    uint32_t cpc_word = 0;
    if (cfg.code == Code::Bch) {
        block_bits = fec::bch_encode(fec::BchCode::bch_31_16(), msg);
        tx_bits = &block_bits;
    } else if (cfg.code == Code::Acpc) {
        uint32_t m = 0;
        for (int i = 0; i < 16; ++i) m |= static_cast<uint32_t>(msg[static_cast<size_t>(i)]) << i;
        cpc_word = p.cpc->encode(m);
        block_bits = fec::unpack31(cpc_word);
        tx_bits = &block_bits;
    }

    const Codeword cw = encode(p.spec, *tx_bits);
    const ChannelDraw draw =
        sample_draw(rng, p.fading, cfg.cfo, p.n0, cfg.K + 1);
    const ComplexSeq rx = transmit(cw.coeffs, draw);

    std::vector<uint8_t> hard_bits;
    if (cfg.estimator == EstimatorKind::Fourier) {
        const double phi_hat = estimate_cfo(rx, *p.tmpl, cfg.est);
        hard_bits = dizet_decode(p.spec, derotate(rx, phi_hat));
    } else if (cfg.estimator == EstimatorKind::Fractional) {
        hard_bits = (*p.fractional)(rx).bits;
    } else {
        hard_bits = dizet_decode(p.spec, rx);
    }

    int bit_errs = 0;
    bool block_err = false;
    if (cfg.code == Code::None) {
        for (size_t i = 0; i < msg.size(); ++i) {
            bit_errs += hard_bits[i] != msg[i];
        }
        block_err = bit_errs > 0;
    } else if (cfg.code == Code::Bch) {
        const fec::BchDecodeResult dec =
            fec::bch_decode(fec::BchCode::bch_31_16(), hard_bits);
        // On locator failure fall back to the received systematic bits.
        const std::vector<uint8_t>& got =
            dec.ok ? dec.msg : hard_bits;
        for (size_t i = 0; i < msg.size(); ++i) {
            bit_errs += got[i] != msg[i];
        }
        block_err = bit_errs > 0;
    } else {  // Acpc
        const auto dec = p.cpc->decode(fec::pack31(hard_bits));
        if (!dec.ok) {
            // No message recovered: block errored, bits charged at rate 1/2.
            bit_errs = p.info_bits / 2;
            block_err = true;
        } else {
            for (int i = 0; i < 16; ++i) {
                bit_errs += static_cast<int>((dec.msg >> i) & 1u) !=
                            static_cast<int>(msg[static_cast<size_t>(i)]);
            }
            block_err = bit_errs > 0;
        }
    }
    tally.bit_errors += bit_errs;
    tally.block_errors += block_err ? 1 : 0;
}

}  // namespace

double SimConfig::resolved_radius() const {
    return radius > 0.0 ? radius : default_radius(K);
}

void SimConfig::validate() const {
    if (K < 2) throw ConfigError("K must be >= 2");
    if (trials < 0) throw ConfigError("trials must be >= 0");
    if (resolved_radius() <= 1.0) throw ConfigError("radius must be > 1");
    if (scheme == Scheme::Jutted && zeta <= 1.0) {
        throw ConfigError("jutted scheme requires zeta > 1");
    }
    if (code != Code::None && K != 31) {
        throw ConfigError("coded runs require K = 31");
    }
    if (code == Code::Acpc && scheme != Scheme::Huffman) {
        throw ConfigError("acpc requires the huffman scheme");
    }
    if (estimator == EstimatorKind::Fractional && scheme != Scheme::Huffman) {
        throw ConfigError("the fractional decoder requires the huffman scheme");
    }
    if (estimator == EstimatorKind::Fourier) {
        try {
            est.validate(K);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (estimator == EstimatorKind::Fractional && oversample < 1) {
        throw ConfigError("oversample must be >= 1");
    }
}

PointResult run_point(const SimConfig& cfg, double ebn0_db, int point_index) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const Pipeline pipeline(cfg, ebn0_db);

    int n_threads = cfg.threads > 0
                        ? cfg.threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    const long long trials = cfg.trials;

    std::vector<Tally> tallies(static_cast<size_t>(n_threads));
    auto worker = [&](int tid) {
        Tally& tally = tallies[static_cast<size_t>(tid)];
        std::vector<uint8_t> msg;
        std::vector<uint8_t> block_bits;
        for (long long t = tid; t < trials; t += n_threads) {
            TrialRng rng = TrialRng::for_trial(
                cfg.seed, static_cast<uint64_t>(point_index), static_cast<uint64_t>(t));
            run_trial(pipeline, rng, tally, msg, block_bits);
        }
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int tid = 0; tid < n_threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }

    PointResult result;
    result.ebn0_db = ebn0_db;
    result.blocks_sent = trials;
    result.bits_sent = trials * pipeline.info_bits;
    for (const Tally& t : tallies) {
        result.bit_errors += t.bit_errors;
        result.block_errors += t.block_errors;
    }
    result.ber = result.bits_sent > 0
                     ? static_cast<double>(result.bit_errors) / static_cast<double>(result.bits_sent)
                     : 0.0;
    result.bler = result.blocks_sent > 0
                      ? static_cast<double>(result.block_errors) / static_cast<double>(result.blocks_sent)
                      : 0.0;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<PointResult> run_sweep(const SimConfig& cfg, const RowCallback& on_row) {
    cfg.validate();
    std::vector<PointResult> rows;
    rows.reserve(cfg.ebn0_grid.size());
    for (size_t i = 0; i < cfg.ebn0_grid.size(); ++i) {
        rows.push_back(run_point(cfg, cfg.ebn0_grid[i], static_cast<int>(i)));
        if (on_row) on_row(rows.back());
    }
    return rows;
}

const char* to_string(Scheme s) {
    return s == Scheme::Huffman ? "huffman" : "jutted";
}
const char* to_string(Code c) {
    switch (c) {
        case Code::None: return "none";
        case Code::Bch: return "bch";
        default: return "acpc";
    }
}
const char* to_string(ChannelModel c) {
    return c == ChannelModel::Awgn ? "awgn" : "rayleigh";
}
const char* to_string(EstimatorKind e) {
    switch (e) {
        case EstimatorKind::None: return "none";
        case EstimatorKind::Fourier: return "fourier";
        default: return "fractional";
    }
}
std::string to_string(const CfoMode& m) {
    switch (m.kind) {
        case CfoMode::None: return "none";
        case CfoMode::Uniform: return "uniform";
        default: return "fixed:" + format_g6(m.phi);
    }
}

std::string csv_header() {
    return "scheme,K,zeta,R,code,channel,cfo,estimator,ebn0_db,trials,"
           "bits_sent,bit_errors,block_errors,ber,bler,seed\n";
}

std::string csv_row(const SimConfig& cfg, const PointResult& row) {
    std::string out;
    out += to_string(cfg.scheme);
    out += ',';
    out += std::to_string(cfg.K);
    out += ',';
    out += format_g6(cfg.resolved_zeta());
    out += ',';
    out += format_g6(cfg.resolved_radius());
    out += ',';
    out += to_string(cfg.code);
    out += ',';
    out += to_string(cfg.channel);
    out += ',';
    out += to_string(cfg.cfo);
    out += ',';
    out += to_string(cfg.estimator);
    out += ',';
    out += format_g6(row.ebn0_db);
    out += ',';
    out += std::to_string(row.blocks_sent);
    out += ',';
    out += std::to_string(row.bits_sent);
    out += ',';
    out += std::to_string(row.bit_errors);
    out += ',';
    out += std::to_string(row.block_errors);
    out += ',';
    out += format_g6(row.ber);
    out += ',';
    out += format_g6(row.bler);
    out += ',';
    out += std::to_string(cfg.seed);
    out += '\n';
    return out;
}

void write_csv(std::ostream& out, const SimConfig& cfg,
               std::span<const PointResult> rows) {
    out << csv_header();
    for (const PointResult& row : rows) out << csv_row(cfg, row);
}

void write_json(std::ostream& out, const SimConfig& cfg,
                std::span<const PointResult> rows) {
    out << "{\n  \"scheme\": \"" << to_string(cfg.scheme) << "\",\n"
        << "  \"K\": " << cfg.K << ",\n"
        << "  \"zeta\": " << format_g6(cfg.resolved_zeta()) << ",\n"
        << "  \"R\": " << format_g6(cfg.resolved_radius()) << ",\n"
        << "  \"code\": \"" << to_string(cfg.code) << "\",\n"
        << "  \"channel\": \"" << to_string(cfg.channel) << "\",\n"
        << "  \"cfo\": \"" << to_string(cfg.cfo) << "\",\n"
        << "  \"estimator\": \"" << to_string(cfg.estimator) << "\",\n"
        << "  \"seed\": " << cfg.seed << ",\n"
        << "  \"points\": [\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const PointResult& r = rows[i];
        out << "    {\"ebn0_db\": " << format_g6(r.ebn0_db)
            << ", \"trials\": " << r.blocks_sent
            << ", \"bits_sent\": " << r.bits_sent
            << ", \"bit_errors\": " << r.bit_errors
            << ", \"block_errors\": " << r.block_errors
            << ", \"ber\": " << format_g6(r.ber)
            << ", \"bler\": " << format_g6(r.bler) << "}"
            << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
}

ZetaSweepResult sweep_zeta(const SimConfig& cfg, std::span<const double> zeta_grid,
                           double ebn0_db) {
    if (cfg.scheme != Scheme::Jutted) {
        throw ConfigError("sweep_zeta requires the jutted scheme");
    }
    ZetaSweepResult result;
    for (size_t i = 0; i < zeta_grid.size(); ++i) {
        SimConfig point_cfg = cfg;
        point_cfg.zeta = zeta_grid[i];
        if (zeta_grid[i] <= 1.0) {
            // Boundary of the sweep: degenerate to Huffman; the run still
            // completes and reports its BER floor.
            point_cfg.scheme = Scheme::Huffman;
            point_cfg.zeta = 1.0;
        }
        result.zetas.push_back(zeta_grid[i]);
        result.rows.push_back(run_point(point_cfg, ebn0_db, static_cast<int>(i)));
    }
    size_t best = 0;
    for (size_t i = 1; i < result.rows.size(); ++i) {
        if (result.rows[i].ber < result.rows[best].ber) best = i;
    }
    result.best_zeta = result.zetas.empty() ? 0.0 : result.zetas[best];
    return result;
}

}  // namespace bmocz::sim
