#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bmocz::fec {

// 31-bit words are packed into uint32_t with bit i holding codeword bit i.

uint32_t pack31(std::span<const uint8_t> bits);
std::vector<uint8_t> unpack31(uint32_t word);

// Left cyclic rotation: out[j] = in[(j + s) mod 31].
uint32_t rot31(uint32_t word, int s);

// (31,16) cyclically permutable code built on the (31,21) BCH code: every
// message maps to a full-period codeword, so all 31 cyclic shifts are
// distinct and decode back to (message, shift). Corrects up to 2 bit errors.
class CpcCodebook {
public:
    static constexpr int kMessages = 1 << 16;

    // Enumerates the 2^21 (31,21) codewords, keeps the cyclic classes of
    // full period 31, orders their lexicographically-smallest
    // representatives ascending and assigns the first 2^16 to messages.
    static CpcCodebook build();

    uint32_t encode(uint32_t msg) const;

    struct DecodeResult {
        bool ok = false;
        uint32_t msg = 0;
        int shift = 0;  // u such that the clean word equals rot31(encode(msg), u)
    };
    DecodeResult decode(uint32_t word) const;

    const std::vector<uint32_t>& representatives() const { return reps_; }

    // Flat binary format: magic "CPC1", then 65536 little-endian uint32
    // records holding the representatives.
    void save(const std::string& path) const;
    static CpcCodebook load(const std::string& path);

private:
    std::vector<uint32_t> reps_;                       // msg -> representative
    std::unordered_map<uint32_t, uint32_t> class_map_; // canonical rep -> msg

    void rebuild_index();
};

}  // namespace bmocz::fec
