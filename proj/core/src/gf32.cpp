#include "bmocz/fec/gf32.hpp"

namespace bmocz::fec {

Gf32::Tables::Tables() {
    // alpha = x, reduction by x^5 + x^2 + 1 (0b100101).
    uint8_t v = 1;
    for (int i = 0; i < 62; ++i) {
        exp[i] = v;
        if (i < 31) log[v] = static_cast<uint8_t>(i);
        v = static_cast<uint8_t>(v << 1);
        if (v & 0x20u) v ^= 0x25u;
    }
    log[0] = 0;  // unused sentinel
}

const Gf32::Tables& Gf32::tables() {
    static const Tables t;
    return t;
}

uint8_t Gf32::mul(uint8_t a, uint8_t b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.exp[t.log[a] + t.log[b]];
}

uint8_t Gf32::inv(uint8_t a) {
    const Tables& t = tables();
    return t.exp[31 - t.log[a]];
}

uint8_t Gf32::pow_alpha(int e) {
    e %= 31;
    if (e < 0) e += 31;
    return tables().exp[e];
}

int Gf32::log_alpha(uint8_t a) { return tables().log[a]; }

}  // namespace bmocz::fec
