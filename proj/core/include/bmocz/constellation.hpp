#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bmocz/polyzeros.hpp"

namespace bmocz {

// Zero-grid geometry shared by Huffman BMOCZ (zeta == 1) and the jutted
// variant (zeta > 1, first zero pair pushed out to radius zeta*R).
struct ConstellationSpec {
    int K;        // zeros / bits per block
    double R;     // base radius, > 1
    double zeta;  // asymmetry factor, >= 1

    ConstellationSpec(int k_bits, double radius, double asym);

    double radius_at(int k) const { return k == 0 ? zeta * R : R; }
    double phase_at(int k) const;
    bool is_huffman() const { return zeta == 1.0; }
};

struct ZeroPattern {
    std::vector<Cpx> zeros;  // K entries, one per bit
};

// R = sqrt(1 + sin(pi/K)).
double default_radius(int k_bits);

// Bit k = 1 picks the outer zero r_k e^{j psi_k}, bit 0 the inner
// conjugate-reciprocal r_k^{-1} e^{j psi_k}.
ZeroPattern map_bits(const ConstellationSpec& spec, std::span<const uint8_t> bits);

// (outer, inner) zero pair for position k; inner == 1/conj(outer).
std::pair<Cpx, Cpx> zero_pair(const ConstellationSpec& spec, int k);

}  // namespace bmocz
