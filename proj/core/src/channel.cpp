#include "bmocz/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmocz {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::complex<double> TrialRng::next_cnormal(double variance) {
    // Box-Muller; each part carries variance/2.
    double u1 = next_double();
    const double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double mag = std::sqrt(-variance * std::log(u1));
    return std::polar(mag, kTwoPi * u2);
}

ComplexSeq apply_cfo(std::span<const Cpx> y, double phi) {
    ComplexSeq out(y.begin(), y.end());
    const Cpx step = std::polar(1.0, phi);
    Cpx rot{1.0, 0.0};
    for (size_t k = 1; k < out.size(); ++k) {
        rot *= step;
        out[k] *= rot;
    }
    return out;
}

double ebn0_to_n0(const NoiseConfig& cfg) {
    if (cfg.bits_per_block < 1) {
        throw std::invalid_argument("ebn0_to_n0: bits_per_block must be >= 1");
    }
    return cfg.block_energy /
           (cfg.bits_per_block * std::pow(10.0, cfg.ebn0_db / 10.0));
}

ComplexSeq transmit(std::span<const Cpx> codeword, const ChannelDraw& draw) {
    if (draw.noise.size() != codeword.size()) {
        throw std::invalid_argument("transmit: noise length must match codeword");
    }
    ComplexSeq y(codeword.size());
    for (size_t k = 0; k < y.size(); ++k) {
        y[k] = codeword[k] * draw.h + draw.noise[k];
    }
    return apply_cfo(y, draw.phi);
}

ChannelDraw sample_draw(TrialRng& rng, FadingMode fading, CfoMode cfo,
                        double n0, int seq_len) {
    if (n0 < 0.0) throw std::invalid_argument("sample_draw: n0 must be >= 0");
    ChannelDraw draw;
    draw.h = fading == FadingMode::Rayleigh ? rng.next_cnormal(1.0) : Cpx{1.0, 0.0};
    switch (cfo.kind) {
        case CfoMode::None:
            draw.phi = 0.0;
            break;
        case CfoMode::Uniform: {
            const double lo = cfo.lo;
            const double hi = cfo.hi > cfo.lo ? cfo.hi : kTwoPi;
            draw.phi = lo + (hi - lo) * rng.next_double();
            break;
        }
        case CfoMode::Fixed:
            draw.phi = cfo.phi;
            break;
    }
    draw.noise.resize(static_cast<size_t>(seq_len));
    for (Cpx& w : draw.noise) {
        w = n0 > 0.0 ? rng.next_cnormal(n0) : Cpx{0.0, 0.0};
    }
    return draw;
}

}  // namespace bmocz
