#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmocz/cfo.hpp"
#include "bmocz/channel.hpp"
#include "bmocz/constellation.hpp"

namespace bmocz::sim {

enum class Scheme { Huffman, Jutted };
enum class Code { None, Bch, Acpc };
enum class ChannelModel { Awgn, Rayleigh };
enum class EstimatorKind { None, Fourier, Fractional };

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimConfig {
    Scheme scheme = Scheme::Jutted;
    int K = 32;
    double zeta = 1.15;
    double radius = 0.0;  // 0 -> default_radius(K)
    Code code = Code::None;
    ChannelModel channel = ChannelModel::Awgn;
    CfoMode cfo = CfoMode::none();
    EstimatorKind estimator = EstimatorKind::None;
    EstimatorConfig est;    // fourier estimator parameters
    int oversample = 200;   // Q for the fractional decoder
    std::vector<double> ebn0_grid;
    long long trials = 10000;
    uint64_t seed = 1;
    int threads = 0;  // 0 -> hardware concurrency

    double resolved_zeta() const { return scheme == Scheme::Huffman ? 1.0 : zeta; }
    double resolved_radius() const;
    int info_bits() const { return code == Code::None ? K : 16; }

    // Throws ConfigError on contradictory settings.
    void validate() const;
};

struct PointResult {
    double ebn0_db = 0.0;
    long long bits_sent = 0;
    long long bit_errors = 0;
    long long blocks_sent = 0;
    long long block_errors = 0;
    double ber = 0.0;
    double bler = 0.0;
    double wall_time_s = 0.0;
};

PointResult run_point(const SimConfig& cfg, double ebn0_db, int point_index);

// Runs every grid point in order; the callback (when set) receives each
// finished row, so CSV output can be written incrementally.
using RowCallback = std::function<void(const PointResult&)>;
std::vector<PointResult> run_sweep(const SimConfig& cfg, const RowCallback& on_row = {});

std::string csv_header();
std::string csv_row(const SimConfig& cfg, const PointResult& row);
void write_csv(std::ostream& out, const SimConfig& cfg,
               std::span<const PointResult> rows);
void write_json(std::ostream& out, const SimConfig& cfg,
                std::span<const PointResult> rows);

struct ZetaSweepResult {
    std::vector<double> zetas;
    std::vector<PointResult> rows;  // one per zeta
    double best_zeta = 0.0;         // minimizer of BER
};

// Reruns a single Eb/N0 point across a zeta grid (scheme must be jutted;
// zeta == 1 rows degenerate to Huffman and are allowed to floor).
ZetaSweepResult sweep_zeta(const SimConfig& cfg, std::span<const double> zeta_grid,
                           double ebn0_db);

const char* to_string(Scheme s);
const char* to_string(Code c);
const char* to_string(ChannelModel c);
const char* to_string(EstimatorKind e);
std::string to_string(const CfoMode& m);

}  // namespace bmocz::sim
