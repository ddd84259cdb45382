#include "bmocz/fec/bch.hpp"

#include <array>
#include <stdexcept>

#include "bmocz/fec/gf32.hpp"

namespace bmocz::fec {

namespace {

// Minimal polynomial of alpha^c over GF(2): product of (x - alpha^e) over
// the cyclotomic coset of c. Coefficients land in {0,1}.
std::vector<uint8_t> minimal_poly(int c) {
    std::array<bool, 31> in_coset{};
    int e = c % 31;
    std::vector<int> coset;
    while (!in_coset[static_cast<size_t>(e)]) {
        in_coset[static_cast<size_t>(e)] = true;
        coset.push_back(e);
        e = (e * 2) % 31;
    }
    std::vector<uint8_t> poly{1};  // over GF(32), ascending degree
    for (int exp : coset) {
        const uint8_t root = Gf32::pow_alpha(exp);
        std::vector<uint8_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= Gf32::mul(poly[i], root);
        }
        poly = std::move(next);
    }
    for (uint8_t& coef : poly) {
        if (coef > 1) throw std::logic_error("minimal_poly: non-binary coefficient");
    }
    return poly;
}

std::vector<uint8_t> poly_mul_gf2(const std::vector<uint8_t>& a,
                                  const std::vector<uint8_t>& b) {
    std::vector<uint8_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
    }
    return out;
}

BchCode make_code(int k, int t, const std::vector<int>& coset_leaders) {
    BchCode code;
    code.k = k;
    code.t = t;
    code.generator = {1};
    for (int c : coset_leaders) {
        code.generator = poly_mul_gf2(code.generator, minimal_poly(c));
    }
    if (static_cast<int>(code.generator.size()) != code.n - k + 1) {
        throw std::logic_error("bch: unexpected generator degree");
    }
    return code;
}

}  // namespace

const BchCode& BchCode::bch_31_16() {
    static const BchCode code = make_code(16, 3, {1, 3, 5});
    return code;
}

const BchCode& BchCode::bch_31_21() {
    static const BchCode code = make_code(21, 2, {1, 3});
    return code;
}

std::vector<uint8_t> bch_encode(const BchCode& code, std::span<const uint8_t> msg) {
    if (static_cast<int>(msg.size()) != code.k) {
        throw std::invalid_argument("bch_encode: expected k message bits");
    }
    const int parity = code.n - code.k;
    // Long division of m(x) * x^(n-k); bit i carries the x^(n-1-i) coefficient.
    std::vector<uint8_t> rem(static_cast<size_t>(parity), 0);
    for (int i = 0; i < code.k; ++i) {
        const uint8_t feedback = msg[static_cast<size_t>(i)] ^ rem[0];
        for (int j = 0; j < parity - 1; ++j) {
            rem[static_cast<size_t>(j)] =
                rem[static_cast<size_t>(j + 1)] ^
                (feedback & code.generator[static_cast<size_t>(parity - 1 - j)]);
        }
        rem[static_cast<size_t>(parity - 1)] = feedback & code.generator[0];
    }
    std::vector<uint8_t> word(static_cast<size_t>(code.n));
    for (int i = 0; i < code.k; ++i) word[static_cast<size_t>(i)] = msg[static_cast<size_t>(i)];
    for (int j = 0; j < parity; ++j) word[static_cast<size_t>(code.k + j)] = rem[static_cast<size_t>(j)];
    return word;
}

BchDecodeResult bch_decode(const BchCode& code, std::span<const uint8_t> word) {
    if (static_cast<int>(word.size()) != code.n) {
        throw std::invalid_argument("bch_decode: expected n bits");
    }
    const int two_t = 2 * code.t;

    auto syndromes = [&](std::span<const uint8_t> w, std::span<uint8_t> s) {
        bool all_zero = true;
        for (int j = 1; j <= two_t; ++j) {
            const uint8_t a = Gf32::pow_alpha(j);
            uint8_t acc = 0;  // Horner over coefficients x^30 .. x^0
            for (int i = 0; i < code.n; ++i) {
                acc = static_cast<uint8_t>(Gf32::mul(acc, a) ^ w[static_cast<size_t>(i)]);
            }
            s[static_cast<size_t>(j - 1)] = acc;
            if (acc != 0) all_zero = false;
        }
        return all_zero;
    };

    BchDecodeResult result;
    result.codeword.assign(word.begin(), word.end());

    std::vector<uint8_t> synd(static_cast<size_t>(two_t));
    if (syndromes(word, synd)) {
        result.ok = true;
        result.msg.assign(result.codeword.begin(), result.codeword.begin() + code.k);
        return result;
    }

    // Berlekamp-Massey error locator.
    std::vector<uint8_t> lambda{1};
    std::vector<uint8_t> prev{1};
    int length = 0;
    int gap = 1;
    uint8_t prev_disc = 1;
    for (int n = 0; n < two_t; ++n) {
        uint8_t disc = synd[static_cast<size_t>(n)];
        for (int i = 1; i <= length && i < static_cast<int>(lambda.size()); ++i) {
            disc ^= Gf32::mul(lambda[static_cast<size_t>(i)], synd[static_cast<size_t>(n - i)]);
        }
        if (disc == 0) {
            ++gap;
            continue;
        }
        const uint8_t factor = Gf32::mul(disc, Gf32::inv(prev_disc));
        std::vector<uint8_t> updated = lambda;
        if (updated.size() < prev.size() + static_cast<size_t>(gap)) {
            updated.resize(prev.size() + static_cast<size_t>(gap), 0);
        }
        for (size_t i = 0; i < prev.size(); ++i) {
            updated[i + static_cast<size_t>(gap)] ^= Gf32::mul(factor, prev[i]);
        }
        if (2 * length <= n) {
            prev = lambda;
            prev_disc = disc;
            length = n + 1 - length;
            gap = 1;
        } else {
            ++gap;
        }
        lambda = std::move(updated);
    }
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    const int degree = static_cast<int>(lambda.size()) - 1;
    if (length > code.t || degree != length) {
        return result;  // ok = false
    }

    // Chien search: an error at coefficient x^p makes alpha^{-p} a root.
    int roots = 0;
    for (int p = 0; p < code.n; ++p) {
        const uint8_t x = Gf32::pow_alpha(-p);
        uint8_t acc = 0;
        for (size_t i = lambda.size(); i-- > 0;) {
            acc = static_cast<uint8_t>(Gf32::mul(acc, x) ^ lambda[i]);
        }
        if (acc == 0) {
            result.codeword[static_cast<size_t>(code.n - 1 - p)] ^= 1;
            ++roots;
        }
    }
    if (roots != degree) {
        result.codeword.assign(word.begin(), word.end());
        return result;
    }
    if (!syndromes(result.codeword, synd)) {
        result.codeword.assign(word.begin(), word.end());
        return result;
    }
    result.ok = true;
    result.msg.assign(result.codeword.begin(), result.codeword.begin() + code.k);
    return result;
}

}  // namespace bmocz::fec
