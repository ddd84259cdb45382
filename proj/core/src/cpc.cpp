#include "bmocz/fec/cpc.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "bmocz/fec/bch.hpp"

namespace bmocz::fec {

namespace {

constexpr uint32_t kMask31 = 0x7fffffffu;

// Lexicographic order over bit strings b0..b30 (b0 most significant):
// compare bit-reversed packings as integers.
uint32_t rev31(uint32_t w) {
    uint32_t out = 0;
    for (int i = 0; i < 31; ++i) {
        out = (out << 1) | ((w >> i) & 1u);
    }
    return out;
}

struct Canonical {
    uint32_t member = 0;  // lexicographically smallest rotation
    uint32_t key = 0;     // its rev31 value
    bool full_period = true;
};

Canonical canonicalize(uint32_t w) {
    // Reversal swaps the rotation direction, so the smallest rev31 key over
    // rotations of w equals the smallest rotation of rev31(w).
    const uint32_t rv = rev31(w);
    uint32_t best = rv;
    int best_t = 0;
    uint32_t rot = rv;
    bool full_period = true;
    for (int t = 1; t < 31; ++t) {
        rot = ((rot >> 1) | (rot << 30)) & kMask31;
        if (rot == rv) full_period = false;
        if (rot < best) {
            best = rot;
            best_t = t;
        }
    }
    Canonical c;
    c.key = best;
    c.full_period = full_period;
    c.member = best_t == 0 ? (w & kMask31)
                           : (((w >> (31 - best_t)) | (w << best_t)) & kMask31);
    return c;
}

// Packed systematic (31,21) encoder; bit i of the result is codeword bit i.
uint32_t encode_31_21(uint32_t msg) {
    static const uint16_t kGenTaps = [] {
        const BchCode& code = BchCode::bch_31_21();
        uint16_t taps = 0;
        for (int j = 0; j < 10; ++j) {
            if (code.generator[static_cast<size_t>(9 - j)]) taps |= static_cast<uint16_t>(1u << j);
        }
        return taps;
    }();
    uint16_t rem = 0;
    for (int i = 0; i < 21; ++i) {
        const uint16_t in = static_cast<uint16_t>((msg >> i) & 1u);
        const uint16_t feedback = static_cast<uint16_t>(in ^ (rem & 1u));
        rem >>= 1;
        if (feedback) rem ^= kGenTaps;
    }
    uint32_t word = msg & 0x1fffffu;
    for (int j = 0; j < 10; ++j) {
        word |= ((rem >> j) & 1u) << (21 + j);
    }
    return word;
}

}  // namespace

uint32_t pack31(std::span<const uint8_t> bits) {
    if (bits.size() != 31) throw std::invalid_argument("pack31: expected 31 bits");
    uint32_t w = 0;
    for (int i = 0; i < 31; ++i) {
        if (bits[static_cast<size_t>(i)]) w |= 1u << i;
    }
    return w;
}

std::vector<uint8_t> unpack31(uint32_t word) {
    std::vector<uint8_t> bits(31);
    for (int i = 0; i < 31; ++i) bits[static_cast<size_t>(i)] = (word >> i) & 1u;
    return bits;
}

uint32_t rot31(uint32_t word, int s) {
    s %= 31;
    if (s < 0) s += 31;
    if (s == 0) return word & kMask31;
    return ((word >> s) | (word << (31 - s))) & kMask31;
}

CpcCodebook CpcCodebook::build() {
    // Verify the packed encoder against the reference bit-level encoder once.
    {
        std::vector<uint8_t> msg_bits(21, 0);
        msg_bits[0] = 1;
        msg_bits[7] = 1;
        msg_bits[20] = 1;
        uint32_t msg = 0;
        for (int i = 0; i < 21; ++i) msg |= static_cast<uint32_t>(msg_bits[static_cast<size_t>(i)]) << i;
        if (encode_31_21(msg) != pack31(bch_encode(BchCode::bch_31_21(), msg_bits))) {
            throw std::logic_error("cpc: packed encoder mismatch");
        }
    }

    std::unordered_set<uint32_t> classes;
    classes.reserve(1 << 17);
    for (uint32_t msg = 0; msg < (1u << 21); ++msg) {
        const uint32_t word = encode_31_21(msg);
        const Canonical canon = canonicalize(word);
        if (!canon.full_period) continue;
        classes.insert(canon.member);
    }
    if (classes.size() < static_cast<size_t>(kMessages)) {
        throw std::runtime_error("cpc: fewer full-period classes than messages");
    }

    std::vector<uint32_t> reps(classes.begin(), classes.end());
    std::sort(reps.begin(), reps.end(),
              [](uint32_t a, uint32_t b) { return rev31(a) < rev31(b); });
    reps.resize(static_cast<size_t>(kMessages));

    CpcCodebook book;
    book.reps_ = std::move(reps);
    book.rebuild_index();
    return book;
}

void CpcCodebook::rebuild_index() {
    class_map_.clear();
    class_map_.reserve(reps_.size() * 2);
    for (uint32_t msg = 0; msg < reps_.size(); ++msg) {
        class_map_.emplace(reps_[msg], msg);
    }
}

uint32_t CpcCodebook::encode(uint32_t msg) const {
    if (msg >= reps_.size()) throw std::invalid_argument("cpc_encode: message out of range");
    return reps_[msg];
}

CpcCodebook::DecodeResult CpcCodebook::decode(uint32_t word) const {
    const BchCode& code = BchCode::bch_31_21();
    for (int s = 0; s < 31; ++s) {
        const BchDecodeResult dec = bch_decode(code, unpack31(rot31(word, s)));
        if (!dec.ok) continue;
        const uint32_t corrected = pack31(dec.codeword);
        const Canonical canon = canonicalize(corrected);
        const auto it = class_map_.find(canon.member);
        if (it == class_map_.end()) continue;
        const uint32_t rep = reps_[it->second];
        const uint32_t clean = rot31(corrected, -s);  // undo the trial shift
        for (int u = 0; u < 31; ++u) {
            if (rot31(rep, u) == clean) return DecodeResult{true, it->second, u};
        }
    }
    return DecodeResult{};
}

void CpcCodebook::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cpc save: cannot open " + path);
    out.write("CPC1", 4);
    for (uint32_t rep : reps_) {
        unsigned char le[4] = {
            static_cast<unsigned char>(rep & 0xff),
            static_cast<unsigned char>((rep >> 8) & 0xff),
            static_cast<unsigned char>((rep >> 16) & 0xff),
            static_cast<unsigned char>((rep >> 24) & 0xff),
        };
        out.write(reinterpret_cast<const char*>(le), 4);
    }
    if (!out) throw std::runtime_error("cpc save: write failed for " + path);
}

CpcCodebook CpcCodebook::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cpc load: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != "CPC1") {
        throw std::runtime_error("cpc load: bad magic in " + path);
    }
    CpcCodebook book;
    book.reps_.resize(static_cast<size_t>(kMessages));
    for (uint32_t& rep : book.reps_) {
        unsigned char le[4];
        in.read(reinterpret_cast<char*>(le), 4);
        if (!in) throw std::runtime_error("cpc load: truncated file " + path);
        rep = static_cast<uint32_t>(le[0]) | (static_cast<uint32_t>(le[1]) << 8) |
              (static_cast<uint32_t>(le[2]) << 16) | (static_cast<uint32_t>(le[3]) << 24);
    }
    book.rebuild_index();
    return book;
}

}  // namespace bmocz::fec
