#include "regionstat/harmonize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace regionstat {

const char* event_kind_name(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::Merge: return "merge";
        case EventKind::Absorb: return "absorb";
        case EventKind::ReassignProvince: return "reassign_province";
        case EventKind::ReassignRegion: return "reassign_region";
    }
    return "unknown";
}

namespace {

bool consuming(EventKind k) {
    return k == EventKind::Merge || k == EventKind::Absorb;
}

std::string year_str(int y) { return std::to_string(y); }

// Chronological application order; merges/absorptions precede reassignments
// within one effective year; original list order breaks remaining ties.
std::vector<const AdminEvent*> ordered_events(const Crosswalk& cw) {
    std::vector<const AdminEvent*> out;
    out.reserve(cw.events.size());
    for (const auto& e : cw.events) out.push_back(&e);
    std::stable_sort(out.begin(), out.end(), [](const AdminEvent* a, const AdminEvent* b) {
        if (a->effective_year != b->effective_year)
            return a->effective_year < b->effective_year;
        return consuming(a->kind) && !consuming(b->kind);
    });
    return out;
}

class Collector {
public:
    explicit Collector(std::vector<Finding>& findings) : findings_(findings) {}

    void add(Errc code, std::string message) {
        findings_.push_back({code, std::move(message)});
    }

    bool empty() const { return findings_.empty(); }

private:
    std::vector<Finding>& findings_;
};

// Returns the ids referenced by events but absent everywhere, so later
// passes can skip re-reporting them year by year.
std::set<std::string> check_structure(const TerritorialPanel& panel, const Crosswalk& cw,
                                      Collector& out) {
    // Every city id the data or the event targets ever mention.
    std::set<std::string> known_ids;
    for (const auto& [year, slice] : panel.years) {
        for (const auto& [id, rec] : slice) known_ids.insert(id);
    }
    for (const auto& e : cw.events) {
        if (consuming(e.kind)) known_ids.insert(e.target);
    }

    std::map<std::string, int> consuming_sources; // city -> count
    std::map<std::string, std::set<std::pair<EventKind, int>>> reassign_sources;
    std::set<std::string> unknown_reported;

    for (const auto& e : cw.events) {
        switch (e.kind) {
            case EventKind::Merge:
                if (e.sources.size() < 2) {
                    out.add(Errc::InvalidArgument, "merge into '" + e.target +
                                                       "' needs at least 2 sources");
                }
                break;
            case EventKind::Absorb:
                if (e.sources.empty()) {
                    out.add(Errc::InvalidArgument,
                            "absorb into '" + e.target + "' needs at least 1 source");
                }
                break;
            case EventKind::ReassignProvince:
            case EventKind::ReassignRegion:
                if (e.sources.size() != 1) {
                    out.add(Errc::InvalidArgument,
                            std::string(event_kind_name(e.kind)) +
                                " carries exactly one source city");
                }
                break;
        }

        if (e.effective_year > cw.baseline_year) {
            out.add(Errc::InvalidArgument,
                    std::string(event_kind_name(e.kind)) + " effective in " +
                        year_str(e.effective_year) + " postdates the baseline year " +
                        year_str(cw.baseline_year));
        }

        for (const auto& s : e.sources) {
            if (!known_ids.count(s) && unknown_reported.insert(s).second) {
                out.add(Errc::UnknownEntity,
                        "event references city '" + s + "' absent from the panel");
            }
            if (consuming(e.kind)) {
                if (++consuming_sources[s] == 2) {
                    out.add(Errc::ConflictingEvents,
                            "city '" + s + "' is a source of two merge/absorb events");
                }
            } else {
                auto key = std::make_pair(e.kind, e.effective_year);
                if (!reassign_sources[s].insert(key).second) {
                    out.add(Errc::ConflictingEvents,
                            "city '" + s + "' is reassigned twice in " +
                                year_str(e.effective_year));
                }
            }
        }
    }
    return unknown_reported;
}

// Per-year pass shared by validate and harmonize. Returns the year's
// harmonized values (id -> summed ati); hierarchy is resolved later.
std::map<std::string, double> apply_year(int year, const YearSlice& slice,
                                         const YearSlice& baseline,
                                         const std::vector<const AdminEvent*>& events,
                                         const std::set<std::string>& globally_unknown,
                                         Collector& out) {
    std::map<std::string, double> values;
    for (const auto& [id, rec] : slice) values[id] = rec.ati;

    for (const AdminEvent* e : events) {
        if (!consuming(e->kind)) continue;
        if (e->effective_year > year) {
            double moved = 0.0;
            for (const auto& s : e->sources) {
                auto it = values.find(s);
                if (it == values.end()) {
                    if (!globally_unknown.count(s)) {
                        out.add(Errc::UnknownEntity,
                                std::string(event_kind_name(e->kind)) + " source '" + s +
                                    "' absent in " + year_str(year));
                    }
                    continue;
                }
                moved += it->second;
                values.erase(it);
            }
            if (e->kind == EventKind::Merge && values.count(e->target)) {
                out.add(Errc::ConflictingEvents,
                        "merge target '" + e->target + "' already present in " +
                            year_str(year));
            }
            if (e->kind == EventKind::Absorb && !values.count(e->target)) {
                out.add(Errc::UnknownEntity, "absorb target '" + e->target +
                                                 "' absent in " + year_str(year));
            }
            values[e->target] += moved;
        } else {
            // Data on/after the effective year must already reflect the event.
            for (const auto& s : e->sources) {
                if (values.count(s)) {
                    out.add(Errc::UnknownEntity,
                            "city '" + s + "' still present in " + year_str(year) +
                                ", on or after its " + event_kind_name(e->kind) +
                                " effective in " + year_str(e->effective_year));
                }
            }
        }
    }

    for (const auto& [id, v] : values) {
        if (!baseline.count(id)) {
            out.add(Errc::EntitySetMismatch, "city '" + id + "' in " + year_str(year) +
                                                 " has no mapping onto the baseline set");
        }
    }
    for (const auto& [id, rec] : baseline) {
        if (!values.count(id)) {
            out.add(Errc::EntitySetMismatch,
                    "baseline city '" + id + "' missing from " + year_str(year));
        }
    }
    return values;
}

// Every hierarchy difference between a year and the baseline needs a
// licensing reassign event still ahead of that year.
void check_hierarchy_coverage(int year, const YearSlice& slice, const YearSlice& baseline,
                              const Crosswalk& cw, Collector& out) {
    std::map<std::string, int> consumed_after; // source -> effective year
    std::map<std::string, std::vector<std::pair<EventKind, int>>> reassigns;
    for (const auto& e : cw.events) {
        for (const auto& s : e.sources) {
            if (consuming(e.kind)) {
                consumed_after[s] = std::max(consumed_after[s], e.effective_year);
            } else {
                reassigns[s].push_back({e.kind, e.effective_year});
            }
        }
    }

    for (const auto& [id, rec] : slice) {
        auto consumed = consumed_after.find(id);
        if (consumed != consumed_after.end() && consumed->second > year) continue;
        auto base = baseline.find(id);
        if (base == baseline.end()) continue; // already an entity-set finding

        const bool region_diff = rec.region != base->second.region;
        const bool province_diff = rec.province != base->second.province;
        if (!region_diff && !province_diff) continue;

        const EventKind needed =
            region_diff ? EventKind::ReassignRegion : EventKind::ReassignProvince;
        bool covered = false;
        auto it = reassigns.find(id);
        if (it != reassigns.end()) {
            for (const auto& [kind, eff] : it->second) {
                if (kind == needed && eff > year) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) {
            out.add(Errc::HierarchyMismatch,
                    "city '" + id + "' sits in " + rec.province + "/" + rec.region +
                        " in " + year_str(year) + " but in " + base->second.province +
                        "/" + base->second.region +
                        " at baseline, with no covering reassign event");
        }
    }
}

TerritorialPanel run(const TerritorialPanel& panel, const Crosswalk& cw,
                     std::vector<Finding>& findings) {
    Collector out(findings);

    auto baseline_it = panel.years.find(cw.baseline_year);
    if (baseline_it == panel.years.end()) {
        out.add(Errc::MissingBaselineYear,
                "panel has no data for baseline year " + year_str(cw.baseline_year));
        return {};
    }
    const YearSlice& baseline = baseline_it->second;

    const auto globally_unknown = check_structure(panel, cw, out);
    const auto events = ordered_events(cw);

    TerritorialPanel result;
    for (const auto& [year, slice] : panel.years) {
        auto values = apply_year(year, slice, baseline, events, globally_unknown, out);
        check_hierarchy_coverage(year, slice, baseline, cw, out);

        YearSlice harmonized;
        for (const auto& [id, ati] : values) {
            auto base = baseline.find(id);
            if (base == baseline.end()) continue;
            CityRecord rec = base->second; // baseline name and hierarchy
            rec.ati = ati;
            harmonized.emplace(id, std::move(rec));
        }
        result.years.emplace(year, std::move(harmonized));
    }
    return result;
}

} // namespace

ValidationReport validate_crosswalk(const TerritorialPanel& panel, const Crosswalk& cw) {
    ValidationReport report;
    run(panel, cw, report.findings);
    return report;
}

TerritorialPanel harmonize(const TerritorialPanel& panel, const Crosswalk& cw) {
    std::vector<Finding> findings;
    TerritorialPanel result = run(panel, cw, findings);
    if (!findings.empty()) {
        const auto& first = findings.front();
        std::string msg = first.message;
        if (findings.size() > 1) {
            msg += " (and " + std::to_string(findings.size() - 1) + " further findings)";
        }
        fail(first.code, msg);
    }
    return result;
}

} // namespace regionstat
