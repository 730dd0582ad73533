#pragma once

// Test-only reference computations, deliberately written with plain loops
// and none of the library's accumulation machinery.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

// Gini via the pairwise mean-absolute-difference formula
//   G = sum_i sum_j |y_i - y_j| / (2 N^2 mu)
inline double gini_pairwise(const std::vector<double>& values) {
    const std::size_t n = values.size();
    double total = 0.0;
    for (double v : values) total += v;
    const double mu = total / static_cast<double>(n);
    double abs_diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            abs_diff += std::abs(values[i] - values[j]);
        }
    }
    return abs_diff / (2.0 * static_cast<double>(n) * static_cast<double>(n) * mu);
}

// Entropy by direct evaluation, no compensation.
inline double entropy_direct(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) total += v;
    double h = 0.0;
    for (double v : values) {
        if (v > 0.0) {
            const double s = v / total;
            h -= s * std::log(s);
        }
    }
    return h;
}

// Full-set HHI by direct evaluation.
inline double hhi_full_direct(const std::vector<double>& values) {
    double total = 0.0;
    for (double v : values) total += v;
    double h = 0.0;
    for (double v : values) {
        const double s = v / total;
        h += s * s;
    }
    return h;
}

// Random wealth vectors with a controlled share of zero entries; always at
// least one strictly positive value.
class VectorGen {
public:
    explicit VectorGen(std::uint32_t seed) : rng_(seed) {}

    std::vector<double> next(std::size_t min_n = 2, std::size_t max_n = 200,
                             double zero_fraction = 0.2) {
        std::uniform_int_distribution<std::size_t> size_dist(min_n, max_n);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::lognormal_distribution<double> value(10.0, 2.0);

        const std::size_t n = size_dist(rng_);
        std::vector<double> out(n, 0.0);
        for (auto& v : out) {
            if (unit(rng_) >= zero_fraction) v = value(rng_);
        }
        if (std::all_of(out.begin(), out.end(), [](double v) { return v == 0.0; })) {
            out[0] = value(rng_);
        }
        return out;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace testsupport
