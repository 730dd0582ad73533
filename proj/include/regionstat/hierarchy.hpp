#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regionstat/indices.hpp"
#include "regionstat/panel.hpp"
#include "regionstat/summary.hpp"

namespace regionstat {

enum class Level { Country, Region, Province };

const char* level_name(Level level) noexcept;

// Name of the single country-level unit.
inline constexpr const char* kCountryUnit = "ALL";

struct UnitRef {
    Level level = Level::Country;
    std::string name;

    bool operator==(const UnitRef&) const = default;
    auto operator<=>(const UnitRef&) const = default;
};

// Indicator set ranked in reports: the three the comparative analyses use.
enum class IndexName { Theil, Gini, Hhi };

const char* index_name_str(IndexName name) noexcept;
double index_value(const IndexBundle& bundle, IndexName name) noexcept;

// All indicators of one territorial unit in one year. stats is absent for
// single-city units (the descriptive block needs N >= 2).
struct UnitYearResult {
    UnitRef unit;
    int year = 0;
    IndexBundle bundle;
    std::optional<SummaryStats> stats;
    LorenzCurve lorenz;
};

struct RankEntry {
    std::string unit;
    double value = 0.0;
    int rank = 0;     // 1 = highest index value
    bool tied = false;
};

struct Ranking {
    IndexName index = IndexName::Theil;
    Level level = Level::Region;
    int year = 0;
    std::vector<RankEntry> entries;
};

// One rank change between two years. Reciprocal swaps carry both units;
// rank changes with no swap partner carry unit_a only.
struct RankShift {
    IndexName index = IndexName::Theil;
    int year_from = 0;
    int year_to = 0;
    std::string unit_a;
    int rank_a_before = 0;
    int rank_a_after = 0;
    std::optional<std::string> unit_b;
    int rank_b_before = 0;
    int rank_b_after = 0;
};

enum class Standing { Above, Below, Equal };

struct NationalFlag {
    std::string unit;
    double value = 0.0;
    double national_value = 0.0;
    Standing standing = Standing::Equal;
};

enum class ClusterMode { BottomK, TopK };

// Units of the given level present in the panel year, sorted by name.
std::vector<UnitRef> list_units(const TerritorialPanel& panel, Level level, int year);

// The unit's member-city wealth vector for one year.
WealthVector unit_vector(const TerritorialPanel& panel, const UnitRef& unit, int year);

// All indicators for one unit-year, N = member-city count.
UnitYearResult compute_unit_year(const TerritorialPanel& panel, const UnitRef& unit,
                                 int year, int top_k = kDefaultTopK);

// Every unit of the requested levels for every requested year. Unit-years
// are computed in parallel (capped by REGIONSTAT_THREADS or max_threads);
// results come back sorted by (level, unit, year) regardless of schedule.
std::vector<UnitYearResult> compute_all(const TerritorialPanel& panel,
                                        std::span<const Level> levels,
                                        std::span<const int> years,
                                        int top_k = kDefaultTopK,
                                        int max_threads = 0);

// Descending ranking (rank 1 = most concentrated/unequal); ties broken by
// unit name and flagged. All results must share one level and the year.
Ranking rank_units(std::span<const UnitYearResult> results, IndexName index, int year);

// All units whose rank changed between the two years, reciprocal swaps
// paired. Every changed unit appears in exactly one shift.
std::vector<RankShift> detect_rank_shifts(std::span<const UnitYearResult> results,
                                          IndexName index, int year_from, int year_to);

// The `size` lowest- (or highest-) ranked entries. BottomK returns them
// ascending by value, TopK descending.
std::vector<RankEntry> extract_clusters(const Ranking& ranking, ClusterMode mode,
                                        int size);

// Flags each regional value above/below/equal relative to the national one.
std::vector<NationalFlag> national_comparison(std::span<const UnitYearResult> regional,
                                              const UnitYearResult& national,
                                              IndexName index, int year);

} // namespace regionstat
