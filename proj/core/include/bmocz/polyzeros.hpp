#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bmocz {

using Cpx = std::complex<double>;

// Polynomial coefficients in ascending degree order: coeffs[k] holds x_k.
using ComplexSeq = std::vector<Cpx>;

// Aperiodic auto-correlation, lags -K..K stored contiguously.
struct Aacf {
    std::vector<Cpx> lags;  // size 2K+1, index ell + K
    int max_lag = 0;

    Cpx at(int ell) const { return lags[static_cast<size_t>(ell + max_lag)]; }
};

// Coefficients of leading * prod_k (z - roots[k]), ascending order.
// Throws std::invalid_argument when leading == 0.
ComplexSeq poly_from_roots(std::span<const Cpx> roots, Cpx leading);

// Horner evaluation of sum_k p[k] z^k.
Cpx eval_poly(std::span<const Cpx> p, Cpx z);

// N uniform samples of the spectral magnitude:
//   out[n] = | sum_k p[k] e^{+j 2 pi n k / N} |,  n in [N].
// Unnormalized transform with positive exponent.
std::vector<double> spectrum_mag(std::span<const Cpx> p, int n_samples);

// Scales p so its squared 2-norm equals target and the constant term
// becomes real and strictly positive.
ComplexSeq normalize_energy(std::span<const Cpx> p, double target);

// Aperiodic auto-correlation: lag ell in [0,K] is sum_i conj(p_i) p_{i+ell};
// negative lags by Hermitian symmetry.
Aacf aacf(std::span<const Cpx> p);

}  // namespace bmocz
