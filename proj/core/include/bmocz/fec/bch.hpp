#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bmocz::fec {

// Binary BCH codes of length 31 over GF(2^5): (31,16) with t=3 and
// (31,21) with t=2. Codeword bit i is the coefficient of x^(30-i), so a
// codeword reads message-first: bits [0,k) are the message, [k,31) parity.
struct BchCode {
    int n = 31;
    int k = 0;
    int t = 0;
    std::vector<uint8_t> generator;  // ascending degree, GF(2) coefficients

    static const BchCode& bch_31_16();
    static const BchCode& bch_31_21();
};

struct BchDecodeResult {
    bool ok = false;
    std::vector<uint8_t> msg;       // k bits (first k bits of the codeword)
    std::vector<uint8_t> codeword;  // corrected n bits
};

// Systematic encoding: message bits then generator-polynomial remainder.
std::vector<uint8_t> bch_encode(const BchCode& code, std::span<const uint8_t> msg);

// Syndromes over GF(2^5), Berlekamp-Massey locator, Chien search.
// Corrects up to t errors; ok=false when the locator is inconsistent.
BchDecodeResult bch_decode(const BchCode& code, std::span<const uint8_t> word);

}  // namespace bmocz::fec
