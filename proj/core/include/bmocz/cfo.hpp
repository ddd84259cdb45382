#pragma once

#include <span>
#include <vector>

#include "bmocz/constellation.hpp"
#include "bmocz/polyzeros.hpp"

namespace bmocz {

// N uniform samples of the codebook-invariant spectral magnitude |X(e^{jw})|.
struct TemplateVector {
    std::vector<double> values;
    ConstellationSpec spec;

    int size() const { return static_cast<int>(values.size()); }
};

struct SearchWindow {
    double phi_min = 0.0;
    double phi_max = 0.0;
};

struct EstimatorConfig {
    int grid_size = 64;     // N
    double delta = 0.2;     // window size, in (0,1)
    int iterations = 2;

    void validate(int k_bits) const;
};

// Template from the canonical all-ones message; identical for every message
// in the codebook.
TemplateVector make_template(const ConstellationSpec& spec, int n_samples);

// score[n] = sum_m t[m] * | sum_k y_k e^{-j phi_n k} e^{+j 2 pi m k / N} |
// with phi_n = phi_min + (phi_max - phi_min) n / N.
std::vector<double> correlation_scores(std::span<const Cpx> received,
                                       const TemplateVector& tmpl,
                                       const SearchWindow& window);

struct OnceEstimate {
    double phi_hat = 0.0;
    int index = 0;
};

// Argmax of the correlation scores (lowest index on ties);
// phi_hat = phi_min + (phi_max - phi_min) * n_hat / N.
OnceEstimate estimate_once(std::span<const Cpx> received,
                           const TemplateVector& tmpl,
                           const SearchWindow& window);

// Iterative search: start from [0, 2pi), shrink the window around the
// running estimate by delta/iteration, clamping to [0, 2pi].
double estimate_cfo(std::span<const Cpx> received, const TemplateVector& tmpl,
                    const EstimatorConfig& config);

// Entry k multiplied by e^{-j phi k}.
ComplexSeq derotate(std::span<const Cpx> received, double phi);

}  // namespace bmocz
