#pragma once

#include <cstdint>

namespace bmocz::fec {

// GF(2^5) generated by the primitive polynomial x^5 + x^2 + 1.
class Gf32 {
public:
    static constexpr int kOrder = 31;  // multiplicative group size

    static uint8_t mul(uint8_t a, uint8_t b);
    static uint8_t inv(uint8_t a);            // a != 0
    static uint8_t pow_alpha(int e);          // alpha^(e mod 31)
    static int log_alpha(uint8_t a);          // a != 0

private:
    struct Tables {
        uint8_t exp[62];
        uint8_t log[32];
        Tables();
    };
    static const Tables& tables();
};

}  // namespace bmocz::fec
