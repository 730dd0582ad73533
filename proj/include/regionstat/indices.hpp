#pragma once

#include <span>
#include <utility>
#include <vector>

#include "regionstat/error.hpp"
#include "regionstat/wealth.hpp"

namespace regionstat {

inline constexpr int kDefaultTopK = 50;

// Cumulative-share polyline: points (k/N, cumulative wealth share of the
// k poorest entities), entities sorted ascending by value. Starts at (0,0),
// ends exactly at (1,1).
struct LorenzPoint {
    double population_fraction = 0.0;
    double wealth_fraction = 0.0;

    bool operator==(const LorenzPoint&) const = default;
};

struct LorenzCurve {
    std::vector<LorenzPoint> points;

    bool operator==(const LorenzCurve&) const = default;
};

// One unit-year's full indicator set.
// hhi_normalized is NaN for single-entity units (the rescaling divides by
// zero there) and may be negative under top-k truncation; it is reported
// raw, never clamped.
struct IndexBundle {
    double entropy = 0.0;
    double max_entropy = 0.0;
    double theil = 0.0;
    double hhi = 0.0;
    double hhi_normalized = 0.0;
    double gini = 0.0;
    long n_entities = 0;
    int top_k_used = 0;
};

// Market shares y_i / sum(y), in input order. The total is accumulated over
// a sorted copy so the result is independent of entry order.
std::vector<double> shares(std::span<const double> values);
std::vector<double> shares(const WealthVector& v);

// Shannon entropy of the share distribution, in nats, with 0*ln(0) = 0.
// Zero-valued entities still count toward N.
double entropy(std::span<const double> values);
double entropy(const WealthVector& v);

// Theil index: ln(N) - entropy. Zero at perfect equality, ln(N) at full
// concentration.
double theil(std::span<const double> values);
double theil(const WealthVector& v);

// Herfindahl-Hirschman concentration over the min(k, N) largest values.
// Shares are taken against the full total, not the top-k total. Boundary
// ties are broken by entity id (by input position for the span overload);
// the squared-share sum is the same whichever tied entity is kept.
double hhi_top_k(std::span<const double> values, int k = kDefaultTopK);
double hhi_top_k(const WealthVector& v, int k = kDefaultTopK);

// Normalized Herfindahl H* = (HHI - 1/n) / (1 - 1/n), with n the unit's
// full entity count (not k). Requires n >= 2. Under top-k truncation the
// result can drop below zero; the raw value is returned.
double hhi_normalized(double hhi, long n);

// Gini coefficient via the sorted-rank formula
//   G = 2 * sum(i * y_(i)) / (N * sum(y)) - (N + 1) / N,
// values ascending, ranks 1..N. Tie order does not affect the result.
double gini(std::span<const double> values);
double gini(const WealthVector& v);

// N+1 Lorenz points; monotone in both coordinates by construction.
LorenzCurve lorenz_curve(std::span<const double> values);
LorenzCurve lorenz_curve(const WealthVector& v);

// Gini as 1 - 2 * (trapezoidal area under the curve). Same algebra as
// gini() on discrete data, kept as an independent route for cross-checks.
double gini_from_lorenz(const LorenzCurve& curve);

// All indicators of one unit-year in one pass.
IndexBundle compute_bundle(const WealthVector& v, int top_k = kDefaultTopK);
IndexBundle compute_bundle(std::span<const double> values, int top_k = kDefaultTopK);

} // namespace regionstat
