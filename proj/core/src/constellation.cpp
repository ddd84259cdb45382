#include "bmocz/constellation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmocz {

ConstellationSpec::ConstellationSpec(int k_bits, double radius, double asym)
    : K(k_bits), R(radius), zeta(asym) {
    if (K < 2) throw std::invalid_argument("ConstellationSpec: K must be >= 2");
    if (R <= 1.0) throw std::invalid_argument("ConstellationSpec: R must be > 1");
    if (zeta < 1.0) throw std::invalid_argument("ConstellationSpec: zeta must be >= 1");
}

double ConstellationSpec::phase_at(int k) const {
    return 2.0 * std::numbers::pi * k / K;
}

double default_radius(int k_bits) {
    if (k_bits < 2) throw std::invalid_argument("default_radius: K must be >= 2");
    return std::sqrt(1.0 + std::sin(std::numbers::pi / k_bits));
}

ZeroPattern map_bits(const ConstellationSpec& spec, std::span<const uint8_t> bits) {
    if (static_cast<int>(bits.size()) != spec.K) {
        throw std::invalid_argument("map_bits: expected K bits");
    }
    ZeroPattern pattern;
    pattern.zeros.reserve(bits.size());
    for (int k = 0; k < spec.K; ++k) {
        const double r = spec.radius_at(k);
        const double mag = bits[static_cast<size_t>(k)] ? r : 1.0 / r;
        pattern.zeros.push_back(std::polar(mag, spec.phase_at(k)));
    }
    return pattern;
}

std::pair<Cpx, Cpx> zero_pair(const ConstellationSpec& spec, int k) {
    if (k < 0 || k >= spec.K) {
        throw std::invalid_argument("zero_pair: index out of range");
    }
    const double r = spec.radius_at(k);
    const double psi = spec.phase_at(k);
    return {std::polar(r, psi), std::polar(1.0 / r, psi)};
}

}  // namespace bmocz
