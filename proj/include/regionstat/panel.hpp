#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace regionstat {

// One city's record within a year: display name, administrative position
// and wealth value. Each city belongs to exactly one province, and each
// province to exactly one region, within any single year.
struct CityRecord {
    std::string name;
    std::string province;
    std::string region;
    double ati = 0.0;

    bool operator==(const CityRecord&) const = default;
};

// city_id -> record, ordered for deterministic iteration.
using YearSlice = std::map<std::string, CityRecord>;

// Multi-year panel of per-city wealth values plus the city/province/region
// hierarchy of each year. Before harmonization the entity set and the
// hierarchy may differ across years.
struct TerritorialPanel {
    std::map<int, YearSlice> years;

    bool has_year(int year) const { return years.count(year) != 0; }

    std::vector<int> year_list() const {
        std::vector<int> out;
        out.reserve(years.size());
        for (const auto& [y, slice] : years) out.push_back(y);
        return out;
    }

    std::set<std::string> entity_set(int year) const {
        std::set<std::string> out;
        auto it = years.find(year);
        if (it == years.end()) return out;
        for (const auto& [id, rec] : it->second) out.insert(id);
        return out;
    }

    bool operator==(const TerritorialPanel&) const = default;
};

enum class EventKind {
    Merge,            // >= 2 source cities replaced by one new city
    Absorb,           // source cities folded into an existing city
    ReassignProvince, // one city moved to another province, same region
    ReassignRegion,   // one city moved to another region
};

const char* event_kind_name(EventKind kind) noexcept;

// One administrative change, effective from `effective_year` on: data for
// years >= effective_year already reflects it, earlier years do not.
struct AdminEvent {
    EventKind kind = EventKind::Merge;
    std::vector<std::string> sources;
    std::string target; // city id for merge/absorb, province or region name for reassigns
    int effective_year = 0;
};

// Ordered event list mapping every historical entity set onto the
// baseline year's set.
struct Crosswalk {
    int baseline_year = 0;
    std::vector<AdminEvent> events;
};

} // namespace regionstat
