#pragma once

#include <span>

#include "regionstat/error.hpp"
#include "regionstat/wealth.hpp"

namespace regionstat {

// Descriptive-statistics block for one wealth vector.
//
// Conventions, chosen once and applied everywhere:
//   - variance / std_dev / std_err use the sample (N-1) denominator,
//   - skewness and kurtosis use population central moments,
//     skewness = m3 / m2^(3/2), kurtosis = m4 / m2^2 (non-excess),
//   - median on even N is the midpoint of the central pair,
//   - rms^2 = mean^2 + population variance holds as an identity.
struct SummaryStats {
    double min = 0.0;
    double max = 0.0;
    double sum = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double rms = 0.0;
    double std_dev = 0.0;
    double variance = 0.0;
    double std_err = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double mean_over_sd = 0.0;
    double nonparam_skew = 0.0; // 3 * (mean - median) / std_dev
    long n = 0;

    double kurtosis_excess() const { return kurtosis - 3.0; }
};

// Requires N >= 2 (throws TooFewEntries otherwise).
SummaryStats summarize(std::span<const double> values);
SummaryStats summarize(const WealthVector& v);

} // namespace regionstat
