#include "regionstat/hierarchy.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "regionstat/error.hpp"

namespace regionstat {

const char* level_name(Level level) noexcept {
    switch (level) {
        case Level::Country: return "country";
        case Level::Region: return "region";
        case Level::Province: return "province";
    }
    return "unknown";
}

const char* index_name_str(IndexName name) noexcept {
    switch (name) {
        case IndexName::Theil: return "theil";
        case IndexName::Gini: return "gini";
        case IndexName::Hhi: return "hhi";
    }
    return "unknown";
}

double index_value(const IndexBundle& bundle, IndexName name) noexcept {
    switch (name) {
        case IndexName::Theil: return bundle.theil;
        case IndexName::Gini: return bundle.gini;
        case IndexName::Hhi: return bundle.hhi;
    }
    return 0.0;
}

namespace {

int env_thread_cap() {
    const char* raw = std::getenv("REGIONSTAT_THREADS");
    if (!raw) return 0;
    char* end = nullptr;
    long parsed = std::strtol(raw, &end, 10);
    if (end == raw || parsed < 1) return 1;
    return static_cast<int>(std::min(parsed, 256L));
}

const YearSlice& slice_or_fail(const TerritorialPanel& panel, int year) {
    auto it = panel.years.find(year);
    if (it == panel.years.end()) {
        fail(Errc::MissingYear, "panel has no data for year " + std::to_string(year));
    }
    return it->second;
}

} // namespace

std::vector<UnitRef> list_units(const TerritorialPanel& panel, Level level, int year) {
    const YearSlice& slice = slice_or_fail(panel, year);
    if (level == Level::Country) return {UnitRef{Level::Country, kCountryUnit}};

    std::set<std::string> names;
    for (const auto& [id, rec] : slice) {
        names.insert(level == Level::Region ? rec.region : rec.province);
    }
    std::vector<UnitRef> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back({level, n});
    return out;
}

WealthVector unit_vector(const TerritorialPanel& panel, const UnitRef& unit, int year) {
    const YearSlice& slice = slice_or_fail(panel, year);

    WealthVector v;
    v.unit_label = unit.name;
    v.year = year;
    for (const auto& [id, rec] : slice) {
        const bool member = unit.level == Level::Country ||
                            (unit.level == Level::Region && rec.region == unit.name) ||
                            (unit.level == Level::Province && rec.province == unit.name);
        if (member) v.entries.push_back({id, rec.ati});
    }
    if (v.entries.empty() && unit.level != Level::Country) {
        fail(Errc::UnknownUnit, std::string(level_name(unit.level)) + " '" + unit.name +
                                    "' has no member cities in " + std::to_string(year));
    }
    return v;
}

UnitYearResult compute_unit_year(const TerritorialPanel& panel, const UnitRef& unit,
                                 int year, int top_k) {
    WealthVector v = unit_vector(panel, unit, year);
    UnitYearResult r;
    r.unit = unit;
    r.year = year;
    r.bundle = compute_bundle(v, top_k);
    if (v.entries.size() >= 2) r.stats = summarize(v);
    r.lorenz = lorenz_curve(v);
    return r;
}

std::vector<UnitYearResult> compute_all(const TerritorialPanel& panel,
                                        std::span<const Level> levels,
                                        std::span<const int> years, int top_k,
                                        int max_threads) {
    struct Job {
        UnitRef unit;
        int year;
    };
    std::vector<Job> jobs;
    for (Level level : levels) {
        for (int year : years) {
            for (auto& unit : list_units(panel, level, year)) {
                jobs.push_back({std::move(unit), year});
            }
        }
    }

    std::vector<UnitYearResult> results(jobs.size());
    int cap = max_threads > 0 ? max_threads : env_thread_cap();
    if (cap == 0) cap = static_cast<int>(std::thread::hardware_concurrency());
    cap = std::max(1, std::min<int>(cap, static_cast<int>(jobs.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                results[i] = compute_unit_year(panel, jobs[i].unit, jobs[i].year, top_k);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    if (cap <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(cap));
        for (int t = 0; t < cap; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::sort(results.begin(), results.end(),
              [](const UnitYearResult& a, const UnitYearResult& b) {
                  if (a.unit != b.unit) return a.unit < b.unit;
                  return a.year < b.year;
              });
    return results;
}

Ranking rank_units(std::span<const UnitYearResult> results, IndexName index, int year) {
    if (results.empty()) fail(Errc::EmptyResults, "nothing to rank");

    const Level level = results.front().unit.level;
    Ranking ranking;
    ranking.index = index;
    ranking.level = level;
    ranking.year = year;
    for (const auto& r : results) {
        if (r.unit.level != level) {
            fail(Errc::MixedLevels, "ranking mixes " + std::string(level_name(level)) +
                                        " and " + level_name(r.unit.level) + " results");
        }
        if (r.year != year) {
            fail(Errc::MixedYears, "ranking for " + std::to_string(year) +
                                       " was given a result for " + std::to_string(r.year));
        }
        ranking.entries.push_back({r.unit.name, index_value(r.bundle, index), 0, false});
    }

    std::sort(ranking.entries.begin(), ranking.entries.end(),
              [](const RankEntry& a, const RankEntry& b) {
                  if (a.value != b.value) return a.value > b.value;
                  return a.unit < b.unit;
              });
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        ranking.entries[i].rank = static_cast<int>(i + 1);
        const bool tie_prev = i > 0 && ranking.entries[i - 1].value == ranking.entries[i].value;
        const bool tie_next = i + 1 < ranking.entries.size() &&
                              ranking.entries[i + 1].value == ranking.entries[i].value;
        ranking.entries[i].tied = tie_prev || tie_next;
    }
    return ranking;
}

std::vector<RankShift> detect_rank_shifts(std::span<const UnitYearResult> results,
                                          IndexName index, int year_from, int year_to) {
    std::vector<UnitYearResult> from, to;
    for (const auto& r : results) {
        if (r.year == year_from) from.push_back(r);
        if (r.year == year_to) to.push_back(r);
    }
    if (from.empty() || to.empty()) {
        fail(Errc::MissingYear, "rank shift needs results for both years");
    }

    const Ranking before = rank_units(from, index, year_from);
    const Ranking after = rank_units(to, index, year_to);

    std::map<std::string, int> after_rank;
    for (const auto& e : after.entries) after_rank[e.unit] = e.rank;

    struct Change {
        std::string unit;
        int before = 0;
        int after = 0;
    };
    std::vector<Change> changed;
    for (const auto& e : before.entries) {
        auto it = after_rank.find(e.unit);
        if (it == after_rank.end()) {
            fail(Errc::MissingYear, "unit '" + e.unit + "' has no result for " +
                                        std::to_string(year_to));
        }
        if (e.rank != it->second) changed.push_back({e.unit, e.rank, it->second});
        after_rank.erase(it);
    }
    if (!after_rank.empty()) {
        fail(Errc::MissingYear, "unit '" + after_rank.begin()->first +
                                    "' has no result for " + std::to_string(year_from));
    }

    // Changed units in before-rank order, reciprocal swaps paired up.
    std::sort(changed.begin(), changed.end(),
              [](const Change& a, const Change& b) { return a.before < b.before; });

    std::vector<RankShift> shifts;
    std::vector<bool> used(changed.size(), false);
    for (std::size_t i = 0; i < changed.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        RankShift shift;
        shift.index = index;
        shift.year_from = year_from;
        shift.year_to = year_to;
        shift.unit_a = changed[i].unit;
        shift.rank_a_before = changed[i].before;
        shift.rank_a_after = changed[i].after;
        for (std::size_t j = i + 1; j < changed.size(); ++j) {
            if (used[j]) continue;
            if (changed[j].before == changed[i].after &&
                changed[j].after == changed[i].before) {
                used[j] = true;
                shift.unit_b = changed[j].unit;
                shift.rank_b_before = changed[j].before;
                shift.rank_b_after = changed[j].after;
                break;
            }
        }
        shifts.push_back(std::move(shift));
    }
    return shifts;
}

std::vector<RankEntry> extract_clusters(const Ranking& ranking, ClusterMode mode, int size) {
    if (ranking.entries.empty()) fail(Errc::EmptyResults, "empty ranking");
    if (size < 1) fail(Errc::InvalidArgument, "cluster size must be >= 1");
    if (static_cast<std::size_t>(size) > ranking.entries.size()) {
        fail(Errc::SizeTooLarge, "cluster size " + std::to_string(size) +
                                     " exceeds ranking of " +
                                     std::to_string(ranking.entries.size()));
    }

    std::vector<RankEntry> out;
    out.reserve(static_cast<std::size_t>(size));
    if (mode == ClusterMode::TopK) {
        out.assign(ranking.entries.begin(), ranking.entries.begin() + size);
    } else {
        // ascending by value: last rank first
        for (std::size_t i = 0; i < static_cast<std::size_t>(size); ++i) {
            out.push_back(ranking.entries[ranking.entries.size() - 1 - i]);
        }
    }
    return out;
}

std::vector<NationalFlag> national_comparison(std::span<const UnitYearResult> regional,
                                              const UnitYearResult& national,
                                              IndexName index, int year) {
    if (national.year != year) {
        fail(Errc::MissingYear, "national result is for " + std::to_string(national.year) +
                                    ", not " + std::to_string(year));
    }
    const double national_value = index_value(national.bundle, index);
    std::vector<NationalFlag> flags;
    flags.reserve(regional.size());
    for (const auto& r : regional) {
        if (r.year != year) {
            fail(Errc::MissingYear, "regional result for '" + r.unit.name +
                                        "' is for " + std::to_string(r.year) + ", not " +
                                        std::to_string(year));
        }
        const double v = index_value(r.bundle, index);
        Standing standing = Standing::Equal;
        if (v > national_value) standing = Standing::Above;
        if (v < national_value) standing = Standing::Below;
        flags.push_back({r.unit.name, v, national_value, standing});
    }
    std::sort(flags.begin(), flags.end(),
              [](const NationalFlag& a, const NationalFlag& b) { return a.unit < b.unit; });
    return flags;
}

} // namespace regionstat
