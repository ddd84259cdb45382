#include "bmocz/polyzeros.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmocz {

ComplexSeq poly_from_roots(std::span<const Cpx> roots, Cpx leading) {
    if (leading == Cpx{0.0, 0.0}) {
        throw std::invalid_argument("poly_from_roots: leading coefficient is zero");
    }
    // Accumulate in extended precision: the intermediate coefficients of a
    // degree-32 expansion are poorly conditioned in plain double.
    using Cld = std::complex<long double>;
    std::vector<Cld> coeffs{Cld(leading)};
    coeffs.reserve(roots.size() + 1);
    for (const Cpx& r : roots) {
        const Cld root(r);
        // Multiply by (z - root): shift up one degree, subtract root * old.
        coeffs.push_back(coeffs.back());
        for (size_t i = coeffs.size() - 2; i > 0; --i) {
            coeffs[i] = coeffs[i - 1] - root * coeffs[i];
        }
        coeffs[0] = -root * coeffs[0];
    }
    ComplexSeq out(coeffs.size());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = Cpx(static_cast<double>(coeffs[i].real()),
                     static_cast<double>(coeffs[i].imag()));
    }
    return out;
}

Cpx eval_poly(std::span<const Cpx> p, Cpx z) {
    Cpx acc{0.0, 0.0};
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * z + p[i];
    }
    return acc;
}

std::vector<double> spectrum_mag(std::span<const Cpx> p, int n_samples) {
    if (n_samples < 1) {
        throw std::invalid_argument("spectrum_mag: N must be >= 1");
    }
    std::vector<double> mags(static_cast<size_t>(n_samples));
    const double step = 2.0 * std::numbers::pi / n_samples;
    for (int n = 0; n < n_samples; ++n) {
        const Cpx w = std::polar(1.0, step * n);
        mags[static_cast<size_t>(n)] = std::abs(eval_poly(p, w));
    }
    return mags;
}

ComplexSeq normalize_energy(std::span<const Cpx> p, double target) {
    if (target <= 0.0) {
        throw std::invalid_argument("normalize_energy: target must be positive");
    }
    if (p.empty() || p[0] == Cpx{0.0, 0.0}) {
        throw std::invalid_argument("normalize_energy: constant term is zero");
    }
    double energy = 0.0;
    for (const Cpx& c : p) energy += std::norm(c);
    if (energy == 0.0) {
        throw std::invalid_argument("normalize_energy: zero sequence");
    }
    // |c| fixes the energy; the phase makes c * p[0] real and positive.
    const Cpx scale = std::sqrt(target / energy) * std::conj(p[0]) / std::abs(p[0]);
    ComplexSeq out(p.begin(), p.end());
    for (Cpx& c : out) c *= scale;
    out[0] = Cpx{out[0].real(), 0.0};  // clear rounding residue
    return out;
}

Aacf aacf(std::span<const Cpx> p) {
    const int k_max = static_cast<int>(p.size()) - 1;
    Aacf result;
    result.max_lag = k_max;
    result.lags.assign(static_cast<size_t>(2 * k_max + 1), Cpx{});
    for (int ell = 0; ell <= k_max; ++ell) {
        Cpx acc{0.0, 0.0};
        for (size_t i = 0; i + static_cast<size_t>(ell) < p.size(); ++i) {
            acc += std::conj(p[i]) * p[i + static_cast<size_t>(ell)];
        }
        result.lags[static_cast<size_t>(k_max + ell)] = acc;
        result.lags[static_cast<size_t>(k_max - ell)] = std::conj(acc);
    }
    return result;
}

}  // namespace bmocz
