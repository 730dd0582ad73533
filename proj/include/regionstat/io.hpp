#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regionstat/harmonize.hpp"
#include "regionstat/hierarchy.hpp"
#include "regionstat/panel.hpp"

namespace regionstat {

// Panel CSV schema (header mandatory, comma-separated, dot decimal, UTF-8, LF):
//   year,city_id,city_name,province_code,region_name,ati_eur
inline constexpr const char* kPanelHeader =
    "year,city_id,city_name,province_code,region_name,ati_eur";

TerritorialPanel ingest_panel(const std::string& path);
TerritorialPanel parse_panel(std::string_view text, const std::string& origin);

// Emission is byte-stable: years ascending, city ids ascending, values in
// shortest round-trip decimal form, LF line endings.
std::string render_panel(const TerritorialPanel& panel);
void emit_panel(const TerritorialPanel& panel, const std::string& path);

// Crosswalk file: one event per line, `kind;sources;target;effective_year`
// with comma-separated source ids. Blank lines and lines starting with '#'
// are skipped. An empty file is the identity crosswalk.
Crosswalk ingest_crosswalk(const std::string& path, int baseline_year);
Crosswalk parse_crosswalk(std::string_view text, int baseline_year, const std::string& origin);

enum class TableFormat { Table, Csv };

// Indicator table of one unit: rows Entropy / Max. Entropy / Theil index /
// Herfindahl / Norm. Herfindahl / Gini Coeff., years as columns. Results
// must be nonempty and share one unit.
std::string render_index_table(std::span<const UnitYearResult> results, TableFormat fmt);

// Descriptive-statistics block of one unit, years as columns. The text
// variant scales large rows by a power of ten noted in the row label; the
// csv variant carries raw values.
std::string render_summary_table(std::span<const UnitYearResult> results, TableFormat fmt);

std::string render_lorenz_csv(const LorenzCurve& curve);

// Static SVG of one or more labelled curves against the equality diagonal.
// y_offset displaces successive curves upward for readability; the legend
// flags it. Data files are never offset.
std::string render_lorenz_svg(std::span<const std::pair<std::string, LorenzCurve>> curves,
                              double y_offset = 0.0);

std::string render_validation_report(const ValidationReport& report);
std::string render_ranking_csv(const Ranking& ranking);
std::string render_rank_shifts_csv(std::span<const RankShift> shifts);
std::string render_clusters_csv(const Ranking& ranking, ClusterMode mode,
                                std::span<const RankEntry> cluster);
std::string render_national_csv(IndexName index, int year,
                                std::span<const NationalFlag> flags);

// Shortest decimal form that parses back to the same double; locale-free.
std::string format_number(double v);
// Fixed decimal places, locale-free.
std::string format_fixed(double v, int places);

void write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

} // namespace regionstat
