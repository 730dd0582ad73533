#pragma once

#include <span>
#include <string>
#include <vector>

namespace regionstat {

// One territorial entity's wealth value, e.g. a municipality's aggregated
// tax income in euros.
struct WealthEntry {
    std::string entity_id;
    double value = 0.0;
};

// The per-entity wealth values of one territorial unit in one year.
// Values must be nonnegative and entity ids unique; index kernels enforce
// both on entry.
struct WealthVector {
    std::vector<WealthEntry> entries;
    std::string unit_label;
    int year = 0;

    std::vector<double> values() const {
        std::vector<double> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.value);
        return out;
    }

    std::size_t size() const noexcept { return entries.size(); }
};

inline WealthVector make_wealth_vector(std::span<const double> values,
                                       std::string unit_label = {}, int year = 0) {
    WealthVector v;
    v.unit_label = std::move(unit_label);
    v.year = year;
    v.entries.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        v.entries.push_back({"e" + std::to_string(i), values[i]});
    }
    return v;
}

} // namespace regionstat
