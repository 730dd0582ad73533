#include "regionstat/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "regionstat/accumulate.hpp"
#include "regionstat/error.hpp"

namespace regionstat {

namespace {

void check_values(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            fail(Errc::InvalidArgument,
                 "non-finite value at position " + std::to_string(i));
        }
        if (values[i] < 0.0) {
            fail(Errc::NegativeValue,
                 "negative value " + std::to_string(values[i]) + " at position " +
                     std::to_string(i));
        }
    }
}

// Sorted ascending copy plus its compensated total. Every kernel goes
// through here, which makes all of them exactly permutation invariant.
struct SortedValues {
    std::vector<double> values;
    double total = 0.0;
};

SortedValues sorted_positive_checked(std::span<const double> values) {
    check_values(values);
    SortedValues out;
    out.values.assign(values.begin(), values.end());
    std::sort(out.values.begin(), out.values.end());
    out.total = compensated_sum(out.values);
    if (!(out.total > 0.0)) {
        fail(Errc::ZeroTotal, "all values are zero; shares are undefined");
    }
    return out;
}

} // namespace

std::vector<double> shares(std::span<const double> values) {
    const double total = sorted_positive_checked(values).total;
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(v / total);
    return out;
}

double entropy(std::span<const double> values) {
    const SortedValues sv = sorted_positive_checked(values);
    CompensatedSum acc;
    for (double v : sv.values) {
        if (v > 0.0) {
            const double s = v / sv.total;
            acc.add(-s * std::log(s)); // 0*ln(0) := 0, zeros skipped
        }
    }
    return acc.value();
}

double theil(std::span<const double> values) {
    const double h = entropy(values);
    return std::log(static_cast<double>(values.size())) - h;
}

double hhi_top_k(std::span<const double> values, int k) {
    if (k < 1) fail(Errc::InvalidArgument, "top-k must be >= 1, got " + std::to_string(k));
    const double total = sorted_positive_checked(values).total;

    // Descending by value, boundary ties broken by input position. Which
    // tied entry survives the cut does not change the squared-share sum.
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });

    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(k), values.size());
    CompensatedSum acc;
    for (std::size_t i = 0; i < keep; ++i) {
        const double s = values[order[i]] / total;
        acc.add(s * s);
    }
    return acc.value();
}

double hhi_normalized(double hhi, long n) {
    if (n < 2) {
        fail(Errc::DegenerateUnit,
             "normalized HHI needs at least 2 entities, got " + std::to_string(n));
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    return (hhi - inv_n) / (1.0 - inv_n);
}

double gini(std::span<const double> values) {
    const SortedValues sv = sorted_positive_checked(values);
    const auto n = static_cast<double>(sv.values.size());
    CompensatedSum rank_weighted;
    for (std::size_t i = 0; i < sv.values.size(); ++i) {
        rank_weighted.add(static_cast<double>(i + 1) * sv.values[i]);
    }
    return 2.0 * rank_weighted.value() / (n * sv.total) - (n + 1.0) / n;
}

LorenzCurve lorenz_curve(std::span<const double> values) {
    const SortedValues sv = sorted_positive_checked(values);
    const auto n = static_cast<double>(sv.values.size());

    // Plain running sum: adding nonnegative terms keeps partials monotone
    // and the final ratio lands exactly on 1.
    std::vector<double> cumulative(sv.values.size());
    double run = 0.0;
    for (std::size_t i = 0; i < sv.values.size(); ++i) {
        run += sv.values[i];
        cumulative[i] = run;
    }

    LorenzCurve curve;
    curve.points.reserve(sv.values.size() + 1);
    curve.points.push_back({0.0, 0.0});
    for (std::size_t i = 0; i < sv.values.size(); ++i) {
        curve.points.push_back(
            {static_cast<double>(i + 1) / n, cumulative[i] / run});
    }
    curve.points.back() = {1.0, 1.0};
    return curve;
}

double gini_from_lorenz(const LorenzCurve& curve) {
    const auto& pts = curve.points;
    if (pts.size() < 2 || pts.front() != LorenzPoint{0.0, 0.0} ||
        pts.back() != LorenzPoint{1.0, 1.0}) {
        fail(Errc::MalformedCurve, "curve must run from (0,0) to (1,1)");
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].population_fraction < pts[i - 1].population_fraction ||
            pts[i].wealth_fraction < pts[i - 1].wealth_fraction) {
            fail(Errc::MalformedCurve,
                 "coordinates must be nondecreasing (violated at point " +
                     std::to_string(i) + ")");
        }
    }
    CompensatedSum area;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double dx = pts[i].population_fraction - pts[i - 1].population_fraction;
        area.add(0.5 * dx * (pts[i].wealth_fraction + pts[i - 1].wealth_fraction));
    }
    return 1.0 - 2.0 * area.value();
}

IndexBundle compute_bundle(std::span<const double> values, int top_k) {
    IndexBundle b;
    b.n_entities = static_cast<long>(values.size());
    b.top_k_used = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(top_k), values.size()));
    b.entropy = entropy(values);
    b.max_entropy = std::log(static_cast<double>(values.size()));
    b.theil = b.max_entropy - b.entropy;
    b.hhi = hhi_top_k(values, top_k);
    b.hhi_normalized = b.n_entities >= 2
                           ? hhi_normalized(b.hhi, b.n_entities)
                           : std::numeric_limits<double>::quiet_NaN();
    b.gini = gini(values);
    return b;
}

std::vector<double> shares(const WealthVector& v) { return shares(v.values()); }
double entropy(const WealthVector& v) { return entropy(v.values()); }
double theil(const WealthVector& v) { return theil(v.values()); }
double gini(const WealthVector& v) { return gini(v.values()); }
LorenzCurve lorenz_curve(const WealthVector& v) { return lorenz_curve(v.values()); }

double hhi_top_k(const WealthVector& v, int k) {
    if (k < 1) fail(Errc::InvalidArgument, "top-k must be >= 1, got " + std::to_string(k));
    std::vector<double> vals = v.values();
    check_values(vals);
    const double total = stable_total(vals);
    if (!(total > 0.0)) fail(Errc::ZeroTotal, "all values are zero; shares are undefined");

    // Same selection as the span overload, but boundary ties break on the
    // entity id so the kept set is reproducible across entry orders.
    std::vector<std::size_t> order(vals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (vals[a] != vals[b]) return vals[a] > vals[b];
        return v.entries[a].entity_id < v.entries[b].entity_id;
    });
    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(k), vals.size());
    CompensatedSum acc;
    for (std::size_t i = 0; i < keep; ++i) {
        const double s = vals[order[i]] / total;
        acc.add(s * s);
    }
    return acc.value();
}

IndexBundle compute_bundle(const WealthVector& v, int top_k) {
    return compute_bundle(v.values(), top_k);
}

} // namespace regionstat
