#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmocz/constellation.hpp"
#include "bmocz/polyzeros.hpp"

namespace bmocz {

// Transmit block: K+1 coefficients with energy K+1 and a real, strictly
// positive constant term.
struct Codeword {
    ComplexSeq coeffs;
    ConstellationSpec spec;
};

struct FractionalResult {
    double epsilon_hat = 0.0;          // fractional multiple of 2pi/K, in [0,1)
    std::vector<uint8_t> bits;         // valid up to a cyclic permutation
};

Codeword encode(const ConstellationSpec& spec, std::span<const uint8_t> bits);

// DiZeT rule: bit k = 1 iff |Y(r_k e^{j psi_k})| < r_k^K |Y(r_k^{-1} e^{j psi_k})|.
std::vector<uint8_t> dizet_decode(const ConstellationSpec& spec,
                                  std::span<const Cpx> received);

// Soft diagnostic: margin k = ln(r_k^K |Y(inner)|) - ln|Y(outer)|.
// Sign reproduces dizet_decode; +/- infinity when an evaluation is exactly 0.
std::vector<double> dizet_margins(const ConstellationSpec& spec,
                                  std::span<const Cpx> received);

// Oversampled DiZeT decoder estimating the fractional CFO component for
// Huffman constellations. Evaluates the received polynomial at Q*K uniform
// angles on both circles and picks the sub-bin shift maximizing the
// inner/outer magnitude separation. Precomputes twiddle tables, so reuse
// one instance across trials.
class FractionalDizet {
public:
    FractionalDizet(const ConstellationSpec& spec, int oversample);

    FractionalResult operator()(std::span<const Cpx> received) const;

    const ConstellationSpec& spec() const { return spec_; }
    int oversample() const { return q_; }

private:
    ConstellationSpec spec_;
    int q_;
    std::vector<Cpx> twiddle_;        // e^{+j 2 pi m / (QK)}
    std::vector<double> pow_out_;     // R^k
    std::vector<double> pow_in_;      // R^{-k}
    double scale_;                    // R^K
};

FractionalResult fractional_dizet(const ConstellationSpec& spec,
                                  std::span<const Cpx> received, int oversample);

}  // namespace bmocz
