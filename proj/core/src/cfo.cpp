#include "bmocz/cfo.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "bmocz/codec.hpp"

namespace bmocz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Per-N forward twiddle rows: row k holds e^{+j 2 pi m k / N} for m in [N].
// Shared across calls; the score search is the simulator's hot loop.
struct TwiddleTable {
    int n = 0;
    int max_k = 0;
    std::vector<Cpx> rows;  // (max_k + 1) x n

    const Cpx* row(int k) const { return rows.data() + static_cast<size_t>(k) * n; }
};

std::shared_ptr<const TwiddleTable> twiddles_for(int n, int max_k) {
    static std::mutex mu;
    static std::unordered_map<int, std::shared_ptr<const TwiddleTable>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end() && it->second->max_k >= max_k) return it->second;
    auto table = std::make_shared<TwiddleTable>();
    table->n = n;
    table->max_k = max_k;
    table->rows.resize(static_cast<size_t>(max_k + 1) * n);
    for (int k = 0; k <= max_k; ++k) {
        Cpx* row = table->rows.data() + static_cast<size_t>(k) * n;
        for (int m = 0; m < n; ++m) {
            row[m] = std::polar(1.0, kTwoPi * ((static_cast<long long>(m) * k) % n) / n);
        }
    }
    cache[n] = table;
    return table;
}

bool is_full_circle(const SearchWindow& w) {
    return w.phi_min == 0.0 && w.phi_max == kTwoPi;
}

void check_dims(std::span<const Cpx> received, const TemplateVector& tmpl) {
    if (static_cast<int>(received.size()) != tmpl.spec.K + 1) {
        throw std::invalid_argument("cfo: received length must be K+1");
    }
    if (tmpl.size() < tmpl.spec.K + 1) {
        throw std::invalid_argument("cfo: template grid smaller than K+1");
    }
}

// General path: column n is the N-point magnitude spectrum of the received
// sequence de-rotated by phi_n.
void scores_general(std::span<const Cpx> received, const TemplateVector& tmpl,
                    const SearchWindow& window, std::vector<double>& scores) {
    const int n_grid = tmpl.size();
    const int k_len = static_cast<int>(received.size());
    const auto table = twiddles_for(n_grid, k_len - 1);

    std::vector<Cpx> column(static_cast<size_t>(n_grid));
    for (int n = 0; n < n_grid; ++n) {
        const double phi_n =
            window.phi_min + (window.phi_max - window.phi_min) * n / n_grid;
        const Cpx step = std::polar(1.0, -phi_n);
        std::fill(column.begin(), column.end(), Cpx{0.0, 0.0});
        Cpx rot{1.0, 0.0};
        for (int k = 0; k < k_len; ++k) {
            const Cpx d = received[static_cast<size_t>(k)] * rot;
            const Cpx* w = table->row(k);
            for (int m = 0; m < n_grid; ++m) column[static_cast<size_t>(m)] += d * w[m];
            rot *= step;
        }
        double acc = 0.0;
        for (int m = 0; m < n_grid; ++m) {
            acc += tmpl.values[static_cast<size_t>(m)] * std::abs(column[static_cast<size_t>(m)]);
        }
        scores[static_cast<size_t>(n)] = acc;
    }
}

// First-iteration window [0, 2pi): phi_n lands on the transform grid, so
// every column is a circular shift of one magnitude spectrum.
void scores_full_circle(std::span<const Cpx> received, const TemplateVector& tmpl,
                        std::vector<double>& scores) {
    const int n_grid = tmpl.size();
    const int k_len = static_cast<int>(received.size());
    const auto table = twiddles_for(n_grid, k_len - 1);

    std::vector<Cpx> spectrum(static_cast<size_t>(n_grid), Cpx{0.0, 0.0});
    for (int k = 0; k < k_len; ++k) {
        const Cpx d = received[static_cast<size_t>(k)];
        const Cpx* w = table->row(k);
        for (int m = 0; m < n_grid; ++m) spectrum[static_cast<size_t>(m)] += d * w[m];
    }
    std::vector<double> mags(static_cast<size_t>(n_grid));
    for (int m = 0; m < n_grid; ++m) mags[static_cast<size_t>(m)] = std::abs(spectrum[static_cast<size_t>(m)]);

    for (int n = 0; n < n_grid; ++n) {
        double acc = 0.0;
        int idx = n_grid - n;
        if (idx == n_grid) idx = 0;
        for (int m = 0; m < n_grid; ++m) {
            acc += tmpl.values[static_cast<size_t>(m)] * mags[static_cast<size_t>(idx)];
            ++idx;
            if (idx == n_grid) idx = 0;
        }
        scores[static_cast<size_t>(n)] = acc;
    }
}

}  // namespace

void EstimatorConfig::validate(int k_bits) const {
    if (grid_size < k_bits + 1) {
        throw std::invalid_argument("EstimatorConfig: N must be >= K+1");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("EstimatorConfig: delta must be in (0,1)");
    }
    if (iterations < 1) {
        throw std::invalid_argument("EstimatorConfig: iterations must be >= 1");
    }
}

TemplateVector make_template(const ConstellationSpec& spec, int n_samples) {
    if (n_samples < spec.K + 1) {
        throw std::invalid_argument("make_template: N must be >= K+1");
    }
    const std::vector<uint8_t> ones(static_cast<size_t>(spec.K), 1);
    const Codeword cw = encode(spec, ones);
    return TemplateVector{spectrum_mag(cw.coeffs, n_samples), spec};
}

std::vector<double> correlation_scores(std::span<const Cpx> received,
                                       const TemplateVector& tmpl,
                                       const SearchWindow& window) {
    check_dims(received, tmpl);
    std::vector<double> scores(static_cast<size_t>(tmpl.size()));
    if (is_full_circle(window)) {
        scores_full_circle(received, tmpl, scores);
    } else {
        scores_general(received, tmpl, window, scores);
    }
    return scores;
}

OnceEstimate estimate_once(std::span<const Cpx> received, const TemplateVector& tmpl,
                           const SearchWindow& window) {
    const std::vector<double> scores = correlation_scores(received, tmpl, window);
    int best = 0;
    for (int n = 1; n < static_cast<int>(scores.size()); ++n) {
        if (scores[static_cast<size_t>(n)] > scores[static_cast<size_t>(best)]) best = n;
    }
    const double phi_hat =
        window.phi_min + (window.phi_max - window.phi_min) * best / tmpl.size();
    return OnceEstimate{phi_hat, best};
}

double estimate_cfo(std::span<const Cpx> received, const TemplateVector& tmpl,
                    const EstimatorConfig& config) {
    config.validate(tmpl.spec.K);
    SearchWindow window{0.0, kTwoPi};
    double phi_hat = 0.0;
    for (int iter = 1; iter <= config.iterations; ++iter) {
        phi_hat = estimate_once(received, tmpl, window).phi_hat;
        window.phi_min = phi_hat - config.delta / iter;
        window.phi_max = phi_hat + config.delta / iter;
        if (window.phi_min < 0.0) window.phi_min = 0.0;
        if (window.phi_max > kTwoPi) window.phi_max = kTwoPi;
    }
    return phi_hat;
}

ComplexSeq derotate(std::span<const Cpx> received, double phi) {
    ComplexSeq out(received.begin(), received.end());
    const Cpx step = std::polar(1.0, -phi);
    Cpx rot{1.0, 0.0};
    for (size_t k = 1; k < out.size(); ++k) {
        rot *= step;
        out[k] *= rot;
    }
    return out;
}

}  // namespace bmocz
