#include "regionstat/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "regionstat/error.hpp"

namespace regionstat {

namespace {

std::string loc(const std::string& origin, std::size_t line, std::size_t column) {
    return origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

// Minimal CSV field splitter with double-quote escaping.
std::vector<std::string> split_csv(std::string_view line, const std::string& origin,
                                   std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (quoted) {
        fail(Errc::ParseError, loc(origin, line_no, line.size()) + "unterminated quote");
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

int parse_int(std::string_view field, const std::string& origin, std::size_t line_no,
              std::size_t column) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        fail(Errc::ParseError, loc(origin, line_no, column) + "expected integer, got '" +
                                   std::string(field) + "'");
    }
    return value;
}

double parse_decimal(std::string_view field, const std::string& origin, std::size_t line_no,
                     std::size_t column) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
        fail(Errc::ParseError, loc(origin, line_no, column) +
                                   "expected finite decimal, got '" + std::string(field) + "'");
    }
    return value;
}

constexpr std::array<const char*, 6> kIndexRows = {
    "Entropy", "Max. Entropy", "Theil index", "Herfindahl", "Norm. Herfindahl",
    "Gini Coeff."};

double index_row_value(const IndexBundle& b, std::size_t row) {
    switch (row) {
        case 0: return b.entropy;
        case 1: return b.max_entropy;
        case 2: return b.theil;
        case 3: return b.hhi;
        case 4: return b.hhi_normalized;
        default: return b.gini;
    }
}

constexpr std::array<const char*, 13> kSummaryRows = {
    "min.", "Max.", "Sum", "mean", "median", "RMS", "Std. Dev.", "Var.",
    "Std. Err.", "Skewness", "Kurtosis", "mean/StdDev", "3(mean-median)/StdDev"};

double summary_row_value(const SummaryStats& s, std::size_t row) {
    switch (row) {
        case 0: return s.min;
        case 1: return s.max;
        case 2: return s.sum;
        case 3: return s.mean;
        case 4: return s.median;
        case 5: return s.rms;
        case 6: return s.std_dev;
        case 7: return s.variance;
        case 8: return s.std_err;
        case 9: return s.skewness;
        case 10: return s.kurtosis;
        case 11: return s.mean_over_sd;
        default: return s.nonparam_skew;
    }
}

std::string pad_left(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return s + std::string(width - s.size(), ' ');
}

const std::vector<UnitYearResult>& require_one_unit(std::span<const UnitYearResult> results,
                                                    std::vector<UnitYearResult>& storage) {
    if (results.empty()) fail(Errc::EmptyResults, "no results to render");
    for (const auto& r : results) {
        if (!(r.unit == results.front().unit)) {
            fail(Errc::InvalidArgument, "table rendering needs results of a single unit");
        }
    }
    storage.assign(results.begin(), results.end());
    std::sort(storage.begin(), storage.end(),
              [](const UnitYearResult& a, const UnitYearResult& b) { return a.year < b.year; });
    return storage;
}

std::string svg_coord(double v) { return format_fixed(v, 2); }

constexpr std::array<const char*, 6> kCurvePalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string format_fixed(double v, int places) {
    if (std::isnan(v)) return "nan";
    // classic-locale stream: emission stays dot-decimal whatever the host
    // process did to its locale
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss << std::fixed << std::setprecision(places) << v;
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::InvalidArgument, path + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(Errc::InvalidArgument, path + ": write failed");
}

TerritorialPanel parse_panel(std::string_view text, const std::string& origin) {
    const auto lines = split_lines(text);
    if (lines.empty()) fail(Errc::ParseError, origin + ":1:1: empty file, header expected");
    if (lines[0] != kPanelHeader) {
        fail(Errc::ParseError, loc(origin, 1, 1) + "header must be exactly '" +
                                   kPanelHeader + "'");
    }

    TerritorialPanel panel;
    std::map<std::pair<int, std::string>, std::size_t> seen; // (year, city) -> line
    std::map<std::pair<int, std::string>, std::string> province_region;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (lines[i].empty()) continue;
        auto fields = split_csv(lines[i], origin, line_no);
        if (fields.size() != 6) {
            fail(Errc::ParseError, loc(origin, line_no, 1) + "expected 6 fields, got " +
                                       std::to_string(fields.size()));
        }
        const int year = parse_int(fields[0], origin, line_no, 1);
        const std::string& city_id = fields[1];
        if (city_id.empty()) {
            fail(Errc::ParseError, loc(origin, line_no, 2) + "empty city_id");
        }
        const double ati = parse_decimal(fields[5], origin, line_no, 6);
        if (ati < 0.0) {
            fail(Errc::NegativeValue, loc(origin, line_no, 6) + "ati_eur must be >= 0, got " +
                                          std::string(fields[5]));
        }

        auto key = std::make_pair(year, city_id);
        if (auto it = seen.find(key); it != seen.end()) {
            fail(Errc::DuplicateRow, loc(origin, line_no, 2) + "duplicate (year, city_id) (" +
                                         std::to_string(year) + ", " + city_id +
                                         "), first seen at line " + std::to_string(it->second));
        }
        seen.emplace(key, line_no);

        // one region per province within a year
        auto pr_key = std::make_pair(year, fields[3]);
        auto [pr_it, inserted] = province_region.emplace(pr_key, fields[4]);
        if (!inserted && pr_it->second != fields[4]) {
            fail(Errc::ParseError, loc(origin, line_no, 5) + "province '" + fields[3] +
                                       "' mapped to both region '" + pr_it->second +
                                       "' and '" + fields[4] + "' in " +
                                       std::to_string(year));
        }

        panel.years[year].emplace(city_id,
                                  CityRecord{fields[2], fields[3], fields[4], ati});
    }
    return panel;
}

TerritorialPanel ingest_panel(const std::string& path) {
    return parse_panel(read_file(path), path);
}

std::string render_panel(const TerritorialPanel& panel) {
    std::string out(kPanelHeader);
    out.push_back('\n');
    for (const auto& [year, slice] : panel.years) {
        for (const auto& [id, rec] : slice) {
            out += std::to_string(year);
            out.push_back(',');
            out += csv_escape(id);
            out.push_back(',');
            out += csv_escape(rec.name);
            out.push_back(',');
            out += csv_escape(rec.province);
            out.push_back(',');
            out += csv_escape(rec.region);
            out.push_back(',');
            out += format_number(rec.ati);
            out.push_back('\n');
        }
    }
    return out;
}

void emit_panel(const TerritorialPanel& panel, const std::string& path) {
    write_file(path, render_panel(panel));
}

Crosswalk parse_crosswalk(std::string_view text, int baseline_year,
                          const std::string& origin) {
    Crosswalk cw;
    cw.baseline_year = baseline_year;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        std::string_view line = lines[i];
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t sep = line.find(';', start);
            if (sep == std::string_view::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, sep - start));
            start = sep + 1;
        }
        if (fields.size() != 4) {
            fail(Errc::ParseError, loc(origin, line_no, 1) +
                                       "expected 'kind;sources;target;effective_year', got " +
                                       std::to_string(fields.size()) + " fields");
        }

        AdminEvent event;
        if (fields[0] == "merge") event.kind = EventKind::Merge;
        else if (fields[0] == "absorb") event.kind = EventKind::Absorb;
        else if (fields[0] == "reassign_province") event.kind = EventKind::ReassignProvince;
        else if (fields[0] == "reassign_region") event.kind = EventKind::ReassignRegion;
        else {
            fail(Errc::UnknownEventKind, loc(origin, line_no, 1) + "unknown event kind '" +
                                             std::string(fields[0]) + "'");
        }

        std::string_view srcs = fields[1];
        std::size_t pos = 0;
        while (pos <= srcs.size() && !srcs.empty()) {
            std::size_t sep = srcs.find(',', pos);
            std::string_view id = sep == std::string_view::npos
                                      ? srcs.substr(pos)
                                      : srcs.substr(pos, sep - pos);
            if (id.empty()) {
                fail(Errc::ParseError, loc(origin, line_no, 2) + "empty source id");
            }
            event.sources.emplace_back(id);
            if (sep == std::string_view::npos) break;
            pos = sep + 1;
        }
        if (fields[2].empty()) {
            fail(Errc::ParseError, loc(origin, line_no, 3) + "empty target");
        }
        event.target = std::string(fields[2]);
        event.effective_year = parse_int(fields[3], origin, line_no, 4);
        cw.events.push_back(std::move(event));
    }
    return cw;
}

Crosswalk ingest_crosswalk(const std::string& path, int baseline_year) {
    return parse_crosswalk(read_file(path), baseline_year, path);
}

std::string render_index_table(std::span<const UnitYearResult> results, TableFormat fmt) {
    std::vector<UnitYearResult> sorted;
    const auto& rows = require_one_unit(results, sorted);

    if (fmt == TableFormat::Csv) {
        std::string out = "indicator";
        for (const auto& r : rows) out += "," + std::to_string(r.year);
        out.push_back('\n');
        for (std::size_t row = 0; row < kIndexRows.size(); ++row) {
            out += csv_escape(kIndexRows[row]);
            for (const auto& r : rows) {
                const double v = index_row_value(r.bundle, row);
                out.push_back(',');
                out += std::isnan(v) ? "n/a" : format_fixed(v, 6);
            }
            out.push_back('\n');
        }
        return out;
    }

    constexpr std::size_t label_w = 22;
    constexpr std::size_t col_w = 12;
    const auto& unit = rows.front().unit;
    std::string out = "unit: " + unit.name + "  level: " + level_name(unit.level) + "\n";
    out += pad_right("Cities", label_w);
    for (const auto& r : rows) out += pad_left(std::to_string(r.year), col_w);
    out.push_back('\n');
    out += pad_right("", label_w);
    for (const auto& r : rows) {
        out += pad_left("N=" + std::to_string(r.bundle.n_entities), col_w);
    }
    out.push_back('\n');

    bool negative_flag = false;
    for (std::size_t row = 0; row < kIndexRows.size(); ++row) {
        out += pad_right(kIndexRows[row], label_w);
        for (const auto& r : rows) {
            const double v = index_row_value(r.bundle, row);
            std::string cell = std::isnan(v) ? "n/a" : format_fixed(v, 6);
            if (row == 4 && v < 0.0) {
                cell += "*";
                negative_flag = true;
            }
            out += pad_left(cell, col_w);
        }
        out.push_back('\n');
    }
    if (negative_flag) {
        out += "* negative under top-k truncation; reported unclamped\n";
    }
    return out;
}

std::string render_summary_table(std::span<const UnitYearResult> results, TableFormat fmt) {
    std::vector<UnitYearResult> sorted;
    const auto& rows = require_one_unit(results, sorted);

    if (fmt == TableFormat::Csv) {
        std::string out = "statistic";
        for (const auto& r : rows) out += "," + std::to_string(r.year);
        out.push_back('\n');
        for (std::size_t row = 0; row < kSummaryRows.size(); ++row) {
            out += csv_escape(kSummaryRows[row]);
            for (const auto& r : rows) {
                out.push_back(',');
                out += r.stats ? format_number(summary_row_value(*r.stats, row)) : "n/a";
            }
            out.push_back('\n');
        }
        return out;
    }

    constexpr std::size_t label_w = 34;
    constexpr std::size_t col_w = 12;
    const auto& unit = rows.front().unit;
    std::string out = "unit: " + unit.name + "  level: " + level_name(unit.level) + "\n";
    out += pad_right("statistic", label_w);
    for (const auto& r : rows) out += pad_left(std::to_string(r.year), col_w);
    out.push_back('\n');

    for (std::size_t row = 0; row < kSummaryRows.size(); ++row) {
        // Rows of large magnitude are scaled by a power of ten carried in
        // the row label, mirroring the usual compact presentation.
        double max_abs = 0.0;
        for (const auto& r : rows) {
            if (r.stats) max_abs = std::max(max_abs, std::abs(summary_row_value(*r.stats, row)));
        }
        int exponent = 0;
        if (max_abs >= 1e4) exponent = static_cast<int>(std::floor(std::log10(max_abs)));

        std::string label = kSummaryRows[row];
        if (exponent != 0) label += " (x1e-" + std::to_string(exponent) + ")";
        out += pad_right(label, label_w);
        const double scale = std::pow(10.0, -exponent);
        for (const auto& r : rows) {
            std::string cell =
                r.stats ? format_fixed(summary_row_value(*r.stats, row) * scale, 4) : "n/a";
            out += pad_left(cell, col_w);
        }
        out.push_back('\n');
    }
    return out;
}

std::string render_lorenz_csv(const LorenzCurve& curve) {
    std::string out = "population_fraction,wealth_fraction\n";
    for (const auto& p : curve.points) {
        out += format_number(p.population_fraction);
        out.push_back(',');
        out += format_number(p.wealth_fraction);
        out.push_back('\n');
    }
    return out;
}

std::string render_lorenz_svg(std::span<const std::pair<std::string, LorenzCurve>> curves,
                              double y_offset) {
    if (curves.empty()) fail(Errc::EmptyResults, "no curves to plot");

    constexpr double margin = 60.0;
    constexpr double plot = 520.0;
    constexpr double size = 640.0;
    const double y_span = 1.0 + y_offset * static_cast<double>(curves.size() - 1);

    const auto px = [&](double x) { return margin + x * plot; };
    const auto py = [&](double y) { return margin + (y_span - y) / y_span * plot; };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
        "viewBox=\"0 0 640 640\">\n";
    svg += "<rect x=\"" + svg_coord(margin) + "\" y=\"" + svg_coord(margin) + "\" width=\"" +
           svg_coord(plot) + "\" height=\"" + svg_coord(plot) +
           "\" fill=\"white\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + svg_coord(px(0.0)) + "\" y1=\"" + svg_coord(py(0.0)) + "\" x2=\"" +
           svg_coord(px(1.0)) + "\" y2=\"" + svg_coord(py(1.0)) +
           "\" stroke=\"black\" stroke-dasharray=\"4 4\"/>\n";

    for (std::size_t c = 0; c < curves.size(); ++c) {
        const double offset = y_offset * static_cast<double>(c);
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += kCurvePalette[c % kCurvePalette.size()];
        svg += "\" stroke-width=\"1.5\" points=\"";
        const auto& pts = curves[c].second.points;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) svg.push_back(' ');
            svg += svg_coord(px(pts[i].population_fraction));
            svg.push_back(',');
            svg += svg_coord(py(pts[i].wealth_fraction + offset));
        }
        svg += "\"/>\n";
    }

    for (std::size_t c = 0; c < curves.size(); ++c) {
        std::string label = curves[c].first;
        if (y_offset > 0.0 && c > 0) {
            label += " (y +" + format_number(y_offset * static_cast<double>(c)) +
                     ", presentation only)";
        }
        svg += "<text x=\"" + svg_coord(margin + 10.0) + "\" y=\"" +
               svg_coord(margin + 18.0 + 16.0 * static_cast<double>(c)) +
               "\" font-size=\"12\" fill=\"";
        svg += kCurvePalette[c % kCurvePalette.size()];
        svg += "\">" + label + "</text>\n";
    }

    svg += "<text x=\"" + svg_coord(margin + plot / 2.0 - 60.0) + "\" y=\"" +
           svg_coord(size - 15.0) + "\" font-size=\"13\">population share</text>\n";
    svg += "<text x=\"15\" y=\"" + svg_coord(margin + plot / 2.0) +
           "\" font-size=\"13\" transform=\"rotate(-90 15 " + svg_coord(margin + plot / 2.0) +
           ")\">wealth share</text>\n";
    svg += "</svg>\n";
    return svg;
}

std::string render_validation_report(const ValidationReport& report) {
    std::string out = "findings: " + std::to_string(report.findings.size()) + "\n";
    for (const auto& f : report.findings) {
        out += errc_name(f.code);
        out += ": ";
        out += f.message;
        out.push_back('\n');
    }
    return out;
}

std::string render_ranking_csv(const Ranking& ranking) {
    std::string out = "index,level,year,rank,unit,value,tied\n";
    for (const auto& e : ranking.entries) {
        out += index_name_str(ranking.index);
        out.push_back(',');
        out += level_name(ranking.level);
        out.push_back(',');
        out += std::to_string(ranking.year);
        out.push_back(',');
        out += std::to_string(e.rank);
        out.push_back(',');
        out += csv_escape(e.unit);
        out.push_back(',');
        out += format_fixed(e.value, 6);
        out.push_back(',');
        out += e.tied ? "true" : "false";
        out.push_back('\n');
    }
    return out;
}

std::string render_rank_shifts_csv(std::span<const RankShift> shifts) {
    std::string out =
        "index,year_from,year_to,unit_a,rank_a_before,rank_a_after,"
        "unit_b,rank_b_before,rank_b_after\n";
    for (const auto& s : shifts) {
        out += index_name_str(s.index);
        out.push_back(',');
        out += std::to_string(s.year_from);
        out.push_back(',');
        out += std::to_string(s.year_to);
        out.push_back(',');
        out += csv_escape(s.unit_a);
        out.push_back(',');
        out += std::to_string(s.rank_a_before);
        out.push_back(',');
        out += std::to_string(s.rank_a_after);
        out.push_back(',');
        if (s.unit_b) {
            out += csv_escape(*s.unit_b);
            out.push_back(',');
            out += std::to_string(s.rank_b_before);
            out.push_back(',');
            out += std::to_string(s.rank_b_after);
        } else {
            out += ",,";
        }
        out.push_back('\n');
    }
    return out;
}

std::string render_clusters_csv(const Ranking& ranking, ClusterMode mode,
                                std::span<const RankEntry> cluster) {
    std::string out = "index,level,year,mode,rank,unit,value\n";
    const char* mode_str = mode == ClusterMode::BottomK ? "bottom" : "top";
    for (const auto& e : cluster) {
        out += index_name_str(ranking.index);
        out.push_back(',');
        out += level_name(ranking.level);
        out.push_back(',');
        out += std::to_string(ranking.year);
        out.push_back(',');
        out += mode_str;
        out.push_back(',');
        out += std::to_string(e.rank);
        out.push_back(',');
        out += csv_escape(e.unit);
        out.push_back(',');
        out += format_fixed(e.value, 6);
        out.push_back('\n');
    }
    return out;
}

std::string render_national_csv(IndexName index, int year,
                                std::span<const NationalFlag> flags) {
    std::string out = "index,year,unit,value,national_value,standing\n";
    for (const auto& f : flags) {
        out += index_name_str(index);
        out.push_back(',');
        out += std::to_string(year);
        out.push_back(',');
        out += csv_escape(f.unit);
        out.push_back(',');
        out += format_fixed(f.value, 6);
        out.push_back(',');
        out += format_fixed(f.national_value, 6);
        out.push_back(',');
        switch (f.standing) {
            case Standing::Above: out += "above"; break;
            case Standing::Below: out += "below"; break;
            case Standing::Equal: out += "equal"; break;
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace regionstat
