#pragma once

#include <span>

#include "bmocz/polyzeros.hpp"
#include "bmocz/rng.hpp"

namespace bmocz {

struct ChannelDraw {
    Cpx h{1.0, 0.0};
    double phi = 0.0;
    ComplexSeq noise;  // K+1 samples
};

struct NoiseConfig {
    double ebn0_db = 0.0;
    int bits_per_block = 1;     // B information bits carried by the block
    double block_energy = 0.0;  // K+1
};

enum class FadingMode { Awgn, Rayleigh };

struct CfoMode {
    enum Kind { None, Uniform, Fixed } kind = None;
    double phi = 0.0;       // for Fixed
    double lo = 0.0;        // support of the uniform draw
    double hi = 0.0;        // 0,0 means the full [0, 2pi)

    static CfoMode none() { return {}; }
    static CfoMode uniform() { return {Uniform, 0.0, 0.0, 0.0}; }
    static CfoMode uniform_range(double lo, double hi) { return {Uniform, 0.0, lo, hi}; }
    static CfoMode fixed(double phi) { return {Fixed, phi, 0.0, 0.0}; }
};

// Entry k multiplied by e^{+j phi k} (the m_phi modulation).
ComplexSeq apply_cfo(std::span<const Cpx> y, double phi);

// N0 = block_energy / (B * 10^(ebn0_db/10)); complex noise variance per
// sample, split evenly between real and imaginary parts.
double ebn0_to_n0(const NoiseConfig& cfg);

// m_phi (x) (x*h + w), composed exactly in that order.
ComplexSeq transmit(std::span<const Cpx> codeword, const ChannelDraw& draw);

ChannelDraw sample_draw(TrialRng& rng, FadingMode fading, CfoMode cfo,
                        double n0, int seq_len);

}  // namespace bmocz
