#pragma once

// Deterministic synthetic panels. Values come from an integer hash rather
// than std::random distributions so fixtures are identical on every
// platform and run.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "regionstat/panel.hpp"

namespace testsupport {

inline double hash_unit(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

inline std::uint64_t id_key(const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : id) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 1099511628211ULL;
    }
    return h;
}

// Heavy-tailed city value, mildly growing year over year.
inline double city_value(const std::string& id, int year) {
    const double u = hash_unit(id_key(id) * 31 + static_cast<std::uint64_t>(year));
    const double growth = 1.0 + 0.02 * static_cast<double>(year - 2007);
    return std::exp(8.0 + 6.0 * u) * growth;
}

// 200 baseline cities in 3 regions / 8 provinces over 2007-2011, with the
// historical years carrying the pre-event entity set and hierarchy:
//   - H001,H002       merged into C001 effective 2011
//   - H003,H004,H005  merged into C002 effective 2010
//   - H006            absorbed into C003 effective 2009
//   - C010 P11->P12 (2009), C011 P11->P13 (2008), C012 P22->P21 (2010)
//   - C013 moved from P13/R1 to P22/R2 effective 2008
struct SyntheticProvinces {
    static constexpr const char* province[8] = {"P11", "P12", "P13", "P21",
                                                "P22", "P23", "P31", "P32"};
    static constexpr const char* region[8] = {"R1", "R1", "R1", "R2",
                                              "R2", "R2", "R3", "R3"};
};

inline std::string synth_city_id(int i) {
    std::string n = std::to_string(i);
    return "C" + std::string(3 - n.size(), '0') + n;
}

inline regionstat::TerritorialPanel make_synthetic_panel() {
    using regionstat::CityRecord;
    regionstat::TerritorialPanel panel;

    for (int year = 2007; year <= 2011; ++year) {
        regionstat::YearSlice slice;
        for (int i = 1; i <= 200; ++i) {
            const std::string id = synth_city_id(i);
            if (id == "C001" && year < 2011) continue;
            if (id == "C002" && year < 2010) continue;

            const int p = (i - 1) % 8;
            CityRecord rec;
            rec.name = "City " + std::to_string(i);
            rec.province = SyntheticProvinces::province[p];
            rec.region = SyntheticProvinces::region[p];
            rec.ati = city_value(id, year);

            if (id == "C010" && year < 2009) rec.province = "P11";
            if (id == "C011" && year < 2008) rec.province = "P11";
            if (id == "C012" && year < 2010) rec.province = "P22";
            if (id == "C013" && year < 2008) {
                rec.province = "P13";
                rec.region = "R1";
            }
            slice.emplace(id, std::move(rec));
        }

        auto add_source = [&](const std::string& id, const char* province,
                              const char* region) {
            CityRecord rec;
            rec.name = "Old town " + id;
            rec.province = province;
            rec.region = region;
            rec.ati = city_value(id, year);
            slice.emplace(id, std::move(rec));
        };
        if (year < 2011) {
            add_source("H001", "P11", "R1");
            add_source("H002", "P11", "R1");
        }
        if (year < 2010) {
            add_source("H003", "P12", "R1");
            add_source("H004", "P12", "R1");
            add_source("H005", "P12", "R1");
        }
        if (year < 2009) add_source("H006", "P13", "R1");

        panel.years.emplace(year, std::move(slice));
    }
    return panel;
}

inline regionstat::Crosswalk make_synthetic_crosswalk() {
    using regionstat::AdminEvent;
    using regionstat::EventKind;
    regionstat::Crosswalk cw;
    cw.baseline_year = 2011;
    // deliberately not in chronological order
    cw.events.push_back({EventKind::ReassignProvince, {"C010"}, "P12", 2009});
    cw.events.push_back({EventKind::ReassignRegion, {"C013"}, "R2", 2008});
    cw.events.push_back({EventKind::Merge, {"H001", "H002"}, "C001", 2011});
    cw.events.push_back({EventKind::Merge, {"H003", "H004", "H005"}, "C002", 2010});
    cw.events.push_back({EventKind::Absorb, {"H006"}, "C003", 2009});
    cw.events.push_back({EventKind::ReassignProvince, {"C011"}, "P13", 2008});
    cw.events.push_back({EventKind::ReassignProvince, {"C012"}, "P21", 2010});
    return cw;
}

// Large stable panel for throughput checks: n_cities across 20 regions and
// ~107 provinces, identical entity set every year.
inline regionstat::TerritorialPanel make_large_panel(int n_cities = 8092,
                                                     int first_year = 2007,
                                                     int n_years = 5) {
    using regionstat::CityRecord;
    regionstat::TerritorialPanel panel;
    constexpr int n_regions = 20;
    constexpr int n_provinces = 107;

    for (int year = first_year; year < first_year + n_years; ++year) {
        regionstat::YearSlice slice;
        for (int i = 1; i <= n_cities; ++i) {
            std::string n = std::to_string(i);
            const std::string id = "M" + std::string(4 - std::min<std::size_t>(4, n.size()), '0') + n;
            const int p = (i - 1) % n_provinces;
            CityRecord rec;
            rec.name = "Town " + n;
            rec.province = "PR" + std::to_string(p + 1);
            rec.region = "REG" + std::to_string(p % n_regions + 1);
            rec.ati = city_value(id, year);
            slice.emplace(id, std::move(rec));
        }
        panel.years.emplace(year, std::move(slice));
    }
    return panel;
}

} // namespace testsupport
