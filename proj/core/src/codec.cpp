#include "bmocz/codec.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bmocz {

Codeword encode(const ConstellationSpec& spec, std::span<const uint8_t> bits) {
    const ZeroPattern pattern = map_bits(spec, bits);
    const ComplexSeq raw = poly_from_roots(pattern.zeros, Cpx{1.0, 0.0});
    return Codeword{normalize_energy(raw, static_cast<double>(spec.K + 1)), spec};
}

std::vector<uint8_t> dizet_decode(const ConstellationSpec& spec,
                                  std::span<const Cpx> received) {
    if (static_cast<int>(received.size()) != spec.K + 1) {
        throw std::invalid_argument("dizet_decode: expected K+1 samples");
    }
    std::vector<uint8_t> bits(static_cast<size_t>(spec.K));
    for (int k = 0; k < spec.K; ++k) {
        const auto [outer, inner] = zero_pair(spec, k);
        const double out_mag = std::abs(eval_poly(received, outer));
        const double in_mag = std::abs(eval_poly(received, inner));
        const double scale = std::pow(spec.radius_at(k), spec.K);
        bits[static_cast<size_t>(k)] = out_mag < scale * in_mag ? 1 : 0;
    }
    return bits;
}

std::vector<double> dizet_margins(const ConstellationSpec& spec,
                                  std::span<const Cpx> received) {
    if (static_cast<int>(received.size()) != spec.K + 1) {
        throw std::invalid_argument("dizet_margins: expected K+1 samples");
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> margins(static_cast<size_t>(spec.K));
    for (int k = 0; k < spec.K; ++k) {
        const auto [outer, inner] = zero_pair(spec, k);
        const double out_mag = std::abs(eval_poly(received, outer));
        const double in_mag = std::abs(eval_poly(received, inner));
        const double scaled_in = std::pow(spec.radius_at(k), spec.K) * in_mag;
        double m;
        if (out_mag == 0.0 && scaled_in == 0.0) {
            m = 0.0;
        } else if (out_mag == 0.0) {
            m = kInf;
        } else if (scaled_in == 0.0) {
            m = -kInf;
        } else {
            m = std::log(scaled_in) - std::log(out_mag);
        }
        margins[static_cast<size_t>(k)] = m;
    }
    return margins;
}

FractionalDizet::FractionalDizet(const ConstellationSpec& spec, int oversample)
    : spec_(spec), q_(oversample) {
    if (!spec_.is_huffman()) {
        throw std::invalid_argument("FractionalDizet: unsupported constellation (zeta != 1)");
    }
    if (q_ < 1) throw std::invalid_argument("FractionalDizet: Q must be >= 1");
    const int grid = q_ * spec_.K;
    twiddle_.resize(static_cast<size_t>(grid));
    for (int m = 0; m < grid; ++m) {
        twiddle_[static_cast<size_t>(m)] =
            std::polar(1.0, 2.0 * std::numbers::pi * m / grid);
    }
    pow_out_.resize(static_cast<size_t>(spec_.K + 1));
    pow_in_.resize(static_cast<size_t>(spec_.K + 1));
    for (int k = 0; k <= spec_.K; ++k) {
        pow_out_[static_cast<size_t>(k)] = std::pow(spec_.R, k);
        pow_in_[static_cast<size_t>(k)] = std::pow(spec_.R, -k);
    }
    scale_ = std::pow(spec_.R, spec_.K);
}

FractionalResult FractionalDizet::operator()(std::span<const Cpx> received) const {
    const int K = spec_.K;
    if (static_cast<int>(received.size()) != K + 1) {
        throw std::invalid_argument("fractional_dizet: expected K+1 samples");
    }
    const int grid = q_ * K;

    // Magnitude profiles on the outer and inner circles: the value at grid
    // index m is |Y(r e^{j 2 pi m / (QK)})| with r = R and 1/R.
    std::vector<double> g_out(static_cast<size_t>(grid));
    std::vector<double> g_in(static_cast<size_t>(grid));
    for (int m = 0; m < grid; ++m) {
        Cpx acc_out{0.0, 0.0};
        Cpx acc_in{0.0, 0.0};
        int idx = 0;
        for (int k = 0; k <= K; ++k) {
            const Cpx w = twiddle_[static_cast<size_t>(idx)];
            acc_out += received[static_cast<size_t>(k)] * pow_out_[static_cast<size_t>(k)] * w;
            acc_in += received[static_cast<size_t>(k)] * pow_in_[static_cast<size_t>(k)] * w;
            idx += m;
            if (idx >= grid) idx -= grid;
        }
        g_out[static_cast<size_t>(m)] = std::abs(acc_out);
        g_in[static_cast<size_t>(m)] = std::abs(acc_in);
    }

    // Shift s reads the decoder grid at angles 2 pi (jQ - s) / (QK), i.e.
    // the constellation grid rotated by -s/Q of the base angle, matching the
    // direction in which a CFO rotates the received zeros.
    auto slot = [&](int j, int s) {
        int m = j * q_ - s;
        if (m < 0) m += grid;
        return static_cast<size_t>(m);
    };
    int best_s = 0;
    double best_score = -1.0;
    for (int s = 0; s < q_; ++s) {
        double score = 0.0;
        for (int j = 0; j < K; ++j) {
            const size_t m = slot(j, s);
            score += std::abs(g_out[m] - scale_ * g_in[m]);
        }
        if (score > best_score) {
            best_score = score;
            best_s = s;
        }
    }

    FractionalResult result;
    result.epsilon_hat = static_cast<double>(best_s) / q_;
    result.bits.resize(static_cast<size_t>(K));
    for (int j = 0; j < K; ++j) {
        const size_t m = slot(j, best_s);
        result.bits[static_cast<size_t>(j)] = g_out[m] < scale_ * g_in[m] ? 1 : 0;
    }
    return result;
}

FractionalResult fractional_dizet(const ConstellationSpec& spec,
                                  std::span<const Cpx> received, int oversample) {
    return FractionalDizet(spec, oversample)(received);
}

}  // namespace bmocz
