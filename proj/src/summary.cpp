#include "regionstat/summary.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "regionstat/accumulate.hpp"
#include "regionstat/error.hpp"

namespace regionstat {

SummaryStats summarize(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        fail(Errc::TooFewEntries,
             "need at least 2 entries, got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(values[i])) {
            fail(Errc::InvalidArgument,
                 "non-finite value at position " + std::to_string(i));
        }
    }

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const auto dn = static_cast<double>(n);

    SummaryStats s;
    s.n = static_cast<long>(n);
    s.min = sorted.front();
    s.max = sorted.back();
    s.sum = compensated_sum(sorted);
    s.mean = s.sum / dn;
    s.median = (n % 2 == 1) ? sorted[n / 2]
                            : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    CompensatedSum sq, d2, d3, d4;
    for (double v : sorted) {
        sq.add(v * v);
        const double d = v - s.mean;
        const double dd = d * d;
        d2.add(dd);
        d3.add(dd * d);
        d4.add(dd * dd);
    }
    s.rms = std::sqrt(sq.value() / dn);
    const double m2 = d2.value() / dn; // population moments
    const double m3 = d3.value() / dn;
    const double m4 = d4.value() / dn;

    s.variance = d2.value() / (dn - 1.0); // sample variance
    s.std_dev = std::sqrt(s.variance);
    s.std_err = s.std_dev / std::sqrt(dn);
    s.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    s.kurtosis = m2 > 0.0 ? m4 / (m2 * m2) : 0.0;
    s.mean_over_sd = s.std_dev > 0.0 ? s.mean / s.std_dev : 0.0;
    s.nonparam_skew = s.std_dev > 0.0 ? 3.0 * (s.mean - s.median) / s.std_dev : 0.0;
    return s;
}

SummaryStats summarize(const WealthVector& v) {
    const std::vector<double> vals = v.values();
    return summarize(vals);
}

} // namespace regionstat
