// Monte Carlo BER/BLER simulator for Huffman BMOCZ and J-BMOCZ links.
//
// Examples:
//   bmocz_sim --scheme jutted --bits 32 --zeta 1.15 --channel rayleigh \
//             --cfo uniform --estimator fourier --ebn0 0:1:20 \
//             --trials 200000 --seed 7 --out uncoded.csv
//   bmocz_sim --scheme huffman --bits 31 --code acpc --estimator fractional \
//             --channel rayleigh --cfo uniform --ebn0 0:1:20 --out coded.csv
//   bmocz_sim --scheme jutted --bits 32 --channel rayleigh --cfo uniform \
//             --estimator fourier --ebn0 14 --zeta-grid 1.05:0.05:1.30

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmocz/sim/simulator.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.empty()) return grid;
    if (text.find(':') != std::string::npos) {
        double start = 0.0;
        double step = 0.0;
        double stop = 0.0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &step, &stop) != 3 ||
            step <= 0.0) {
            throw bmocz::sim::ConfigError("bad grid spec: " + text);
        }
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
        return grid;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(std::stod(item));
    }
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace bmocz;
    using namespace bmocz::sim;

    CLI::App app{"BMOCZ / J-BMOCZ Monte Carlo link simulator"};

    std::string scheme = "jutted";
    std::string code = "none";
    std::string channel = "awgn";
    std::string cfo = "none";
    std::string estimator = "none";
    std::string ebn0_spec;
    std::string zeta_grid_spec;
    std::string out_path;
    std::string format = "csv";
    SimConfig cfg;

    app.add_option("--scheme", scheme)->check(CLI::IsMember({"huffman", "jutted"}));
    app.add_option("--bits", cfg.K, "zeros / bits per block (K)");
    app.add_option("--zeta", cfg.zeta, "asymmetry factor");
    app.add_option("--radius", cfg.radius, "base radius (default: sqrt(1+sin(pi/K)))");
    app.add_option("--code", code)->check(CLI::IsMember({"none", "bch", "acpc"}));
    app.add_option("--channel", channel)->check(CLI::IsMember({"awgn", "rayleigh"}));
    app.add_option("--cfo", cfo, "none, uniform, or fixed:PHI");
    app.add_option("--estimator", estimator)
        ->check(CLI::IsMember({"none", "fourier", "fractional"}));
    app.add_option("--grid-N", cfg.est.grid_size, "estimator grid size N");
    app.add_option("--delta", cfg.est.delta, "estimator window size");
    app.add_option("--iters", cfg.est.iterations, "estimator iterations");
    app.add_option("--oversample", cfg.oversample, "fractional decoder Q");
    app.add_option("--ebn0", ebn0_spec, "Eb/N0 grid: START:STEP:STOP or comma list");
    app.add_option("--trials", cfg.trials, "blocks per grid point");
    app.add_option("--seed", cfg.seed);
    app.add_option("--threads", cfg.threads, "0 = hardware concurrency");
    app.add_option("--out", out_path, "output path (default: stdout)");
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--zeta-grid", zeta_grid_spec,
                   "sweep zeta over this grid at the first Eb/N0 point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        cfg.scheme = scheme == "huffman" ? Scheme::Huffman : Scheme::Jutted;
        cfg.code = code == "none" ? Code::None : (code == "bch" ? Code::Bch : Code::Acpc);
        cfg.channel = channel == "awgn" ? ChannelModel::Awgn : ChannelModel::Rayleigh;
        cfg.estimator = estimator == "none"
                            ? EstimatorKind::None
                            : (estimator == "fourier" ? EstimatorKind::Fourier
                                                      : EstimatorKind::Fractional);
        if (cfo == "none") {
            cfg.cfo = CfoMode::none();
        } else if (cfo == "uniform") {
            cfg.cfo = CfoMode::uniform();
        } else if (cfo.rfind("fixed:", 0) == 0) {
            cfg.cfo = CfoMode::fixed(std::stod(cfo.substr(6)));
        } else {
            throw ConfigError("bad --cfo value: " + cfo);
        }
        cfg.ebn0_grid = parse_grid(ebn0_spec);
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);  // LF line endings everywhere
        if (!file) {
            std::cerr << "i/o error: cannot open " << out_path << "\n";
            return kExitIo;
        }
        out = &file;
    }

    try {
        if (!zeta_grid_spec.empty()) {
            const std::vector<double> zeta_grid = parse_grid(zeta_grid_spec);
            if (cfg.ebn0_grid.empty()) throw ConfigError("--zeta-grid needs --ebn0");
            const ZetaSweepResult sweep = sweep_zeta(cfg, zeta_grid, cfg.ebn0_grid[0]);
            if (format == "csv") {
                *out << csv_header();
                for (size_t i = 0; i < sweep.rows.size(); ++i) {
                    SimConfig row_cfg = cfg;
                    row_cfg.zeta = sweep.zetas[i];
                    if (sweep.zetas[i] <= 1.0) row_cfg.scheme = Scheme::Huffman;
                    *out << csv_row(row_cfg, sweep.rows[i]);
                }
            } else {
                write_json(*out, cfg, sweep.rows);
            }
            std::cerr << "best zeta: " << sweep.best_zeta << "\n";
        } else if (format == "csv") {
            *out << csv_header();
            out->flush();
            run_sweep(cfg, [&](const PointResult& row) {
                *out << csv_row(cfg, row);
                out->flush();
            });
        } else {
            const std::vector<PointResult> rows = run_sweep(cfg);
            write_json(*out, cfg, rows);
        }
        out->flush();
        if (!out_path.empty() && !file) {
            std::cerr << "i/o error: write failed for " << out_path << "\n";
            return kExitIo;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
