#include "regionstat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "regionstat/error.hpp"
#include "regionstat/harmonize.hpp"
#include "regionstat/io.hpp"

namespace regionstat {

namespace fs = std::filesystem;

namespace {

int parse_year_token(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(Errc::InvalidArgument, "bad year '" + std::string(token) + "' in --years");
    }
    return value;
}

std::vector<int> parse_years_arg(const std::string& arg) {
    std::vector<int> years;
    if (arg.empty()) return years;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
        std::size_t comma = arg.find(',', pos);
        std::string token = comma == std::string::npos ? arg.substr(pos)
                                                       : arg.substr(pos, comma - pos);
        if (token.empty()) fail(Errc::InvalidArgument, "empty token in --years");
        std::size_t dash = token.find('-');
        if (dash == std::string::npos) {
            years.push_back(parse_year_token(token));
        } else {
            const int from = parse_year_token(token.substr(0, dash));
            const int to = parse_year_token(token.substr(dash + 1));
            if (to < from) fail(Errc::InvalidArgument, "bad year range '" + token + "'");
            for (int y = from; y <= to; ++y) years.push_back(y);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(years.begin(), years.end());
    years.erase(std::unique(years.begin(), years.end()), years.end());
    return years;
}

std::vector<Level> parse_levels(const std::vector<std::string>& names,
                                std::vector<Level> fallback) {
    if (names.empty()) return fallback;
    std::vector<Level> levels;
    for (const auto& n : names) {
        if (n == "country") levels.push_back(Level::Country);
        else if (n == "region") levels.push_back(Level::Region);
        else if (n == "province") levels.push_back(Level::Province);
        else fail(Errc::InvalidArgument, "unknown level '" + n + "'");
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

IndexName parse_index(const std::string& name) {
    if (name == "theil") return IndexName::Theil;
    if (name == "gini") return IndexName::Gini;
    if (name == "hhi") return IndexName::Hhi;
    fail(Errc::InvalidArgument, "unknown index '" + name + "' (theil|gini|hhi)");
}

std::string slug(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                          (c >= '0' && c <= '9') || c == '-';
        out.push_back(keep ? c : '_');
    }
    return out;
}

void write_under(const std::string& root, const std::string& rel, std::string_view content) {
    fs::path path = fs::path(root) / rel;
    fs::create_directories(path.parent_path());
    write_file(path.string(), content);
}

struct Pipeline {
    TerritorialPanel raw;
    Crosswalk crosswalk;
    TerritorialPanel panel; // harmonized
    std::vector<int> years;
    std::vector<Level> levels;
};

Pipeline prepare(const RunConfig& cfg, bool harmonized_needed) {
    if (cfg.panel_path.empty()) fail(Errc::InvalidArgument, "--panel is required");
    Pipeline p;
    p.raw = ingest_panel(cfg.panel_path);
    if (p.raw.years.empty()) fail(Errc::ParseError, cfg.panel_path + ": panel has no rows");

    const int baseline =
        cfg.baseline_year != 0 ? cfg.baseline_year : p.raw.years.rbegin()->first;
    p.crosswalk = cfg.crosswalk_path.empty()
                      ? Crosswalk{baseline, {}}
                      : ingest_crosswalk(cfg.crosswalk_path, baseline);

    if (harmonized_needed) p.panel = harmonize(p.raw, p.crosswalk);

    p.years = cfg.years.empty() ? p.raw.year_list() : cfg.years;
    p.levels = cfg.levels;
    return p;
}

// results grouped per unit, units ordered
std::map<UnitRef, std::vector<UnitYearResult>> group_by_unit(
    std::vector<UnitYearResult> results) {
    std::map<UnitRef, std::vector<UnitYearResult>> grouped;
    for (auto& r : results) grouped[r.unit].push_back(std::move(r));
    return grouped;
}

TableFormat table_format(const RunConfig& cfg) {
    return cfg.format == "table" ? TableFormat::Table : TableFormat::Csv;
}

const char* table_ext(const RunConfig& cfg) {
    return cfg.format == "table" ? "txt" : "csv";
}

int run_validate(const RunConfig& cfg, std::ostream& out) {
    Pipeline p = prepare(cfg, false);
    std::size_t rows = 0;
    for (const auto& [year, slice] : p.raw.years) rows += slice.size();
    out << "panel: " << rows << " rows, " << p.raw.years.size() << " years\n";
    for (const auto& [year, slice] : p.raw.years) {
        out << "  " << year << ": " << slice.size() << " cities\n";
    }
    out << "baseline year: " << p.crosswalk.baseline_year << ", events: "
        << p.crosswalk.events.size() << "\n";
    const ValidationReport report = validate_crosswalk(p.raw, p.crosswalk);
    out << render_validation_report(report);
    return report.ok() ? 0 : 1;
}

int run_harmonize(const RunConfig& cfg, std::ostream& out) {
    Pipeline p = prepare(cfg, true);
    if (cfg.out_file.empty()) fail(Errc::InvalidArgument, "--out is required");
    emit_panel(p.panel, cfg.out_file);
    out << "harmonized " << p.panel.years.size() << " years onto baseline "
        << p.crosswalk.baseline_year << ", " << p.panel.years.begin()->second.size()
        << " cities per year -> " << cfg.out_file << "\n";
    return 0;
}

int run_tables(const RunConfig& cfg, std::ostream& out, bool summary) {
    Pipeline p = prepare(cfg, true);
    auto results = compute_all(p.panel, p.levels, p.years, cfg.top_k, cfg.threads);
    auto grouped = group_by_unit(std::move(results));

    int written = 0;
    for (const auto& [unit, unit_results] : grouped) {
        const std::string text = summary
                                     ? render_summary_table(unit_results, table_format(cfg))
                                     : render_index_table(unit_results, table_format(cfg));
        if (cfg.out_dir.empty()) {
            out << text << "\n";
        } else {
            const std::string rel = std::string(summary ? "summary/" : "indices/") +
                                    level_name(unit.level) + "/" + slug(unit.name) + "." +
                                    table_ext(cfg);
            write_under(cfg.out_dir, rel, text);
        }
        ++written;
    }
    if (!cfg.out_dir.empty()) {
        out << "wrote " << written << (summary ? " summary" : " index") << " tables to "
            << cfg.out_dir << "\n";
    }
    return 0;
}

int run_lorenz(const RunConfig& cfg, std::ostream& out) {
    if (cfg.out_dir.empty()) fail(Errc::InvalidArgument, "--out is required");
    Pipeline p = prepare(cfg, true);
    auto results = compute_all(p.panel, p.levels, p.years, cfg.top_k, cfg.threads);
    auto grouped = group_by_unit(std::move(results));

    const bool want_csv = cfg.format.find("csv") != std::string::npos;
    const bool want_svg = cfg.format.find("svg") != std::string::npos;
    int files = 0;
    for (const auto& [unit, unit_results] : grouped) {
        const std::string base =
            std::string("lorenz/") + level_name(unit.level) + "/" + slug(unit.name);
        std::vector<std::pair<std::string, LorenzCurve>> labelled;
        for (const auto& r : unit_results) {
            if (want_csv) {
                write_under(cfg.out_dir, base + "_" + std::to_string(r.year) + ".csv",
                            render_lorenz_csv(r.lorenz));
                ++files;
            }
            labelled.emplace_back(std::to_string(r.year), r.lorenz);
        }
        if (want_svg) {
            write_under(cfg.out_dir, base + ".svg",
                        render_lorenz_svg(labelled, cfg.lorenz_offset));
            ++files;
        }
    }
    out << "wrote " << files << " lorenz files to " << cfg.out_dir << "\n";
    return 0;
}

int run_rank_shifts(const RunConfig& cfg, std::ostream& out) {
    Pipeline p = prepare(cfg, true);
    if (p.years.size() < 2) {
        fail(Errc::InvalidArgument, "rank shifts need at least two years");
    }
    const int year_from = p.years.front();
    const int year_to = p.years.back();
    const std::vector<int> both = {year_from, year_to};

    for (Level level : p.levels) {
        if (level == Level::Country) continue; // a single unit has no ranking
        const std::vector<Level> one = {level};
        auto results = compute_all(p.panel, one, both, cfg.top_k, cfg.threads);
        auto shifts = detect_rank_shifts(results, cfg.index, year_from, year_to);
        const std::string text = render_rank_shifts_csv(shifts);
        if (cfg.out_dir.empty()) {
            out << text;
        } else {
            write_under(cfg.out_dir,
                        std::string("rank_shifts/") + level_name(level) + "_" +
                            index_name_str(cfg.index) + "_" + std::to_string(year_from) +
                            "_" + std::to_string(year_to) + ".csv",
                        text);
        }
    }
    if (!cfg.out_dir.empty()) out << "wrote rank shifts to " << cfg.out_dir << "\n";
    return 0;
}

int run_clusters(const RunConfig& cfg, std::ostream& out) {
    Pipeline p = prepare(cfg, true);
    for (Level level : p.levels) {
        if (level == Level::Country) continue;
        const std::vector<Level> one = {level};
        auto results = compute_all(p.panel, one, p.years, cfg.top_k, cfg.threads);
        for (int year : p.years) {
            std::vector<UnitYearResult> of_year;
            for (const auto& r : results) {
                if (r.year == year) of_year.push_back(r);
            }
            const Ranking ranking = rank_units(of_year, cfg.index, year);
            const auto cluster = extract_clusters(ranking, cfg.cluster_mode, cfg.cluster_size);
            const std::string text = render_clusters_csv(ranking, cfg.cluster_mode, cluster);
            if (cfg.out_dir.empty()) {
                out << text;
            } else {
                const char* mode = cfg.cluster_mode == ClusterMode::BottomK ? "bottom" : "top";
                write_under(cfg.out_dir,
                            std::string("clusters/") + level_name(level) + "_" +
                                index_name_str(cfg.index) + "_" + mode +
                                std::to_string(cfg.cluster_size) + "_" +
                                std::to_string(year) + ".csv",
                            text);
            }
        }
    }
    if (!cfg.out_dir.empty()) out << "wrote clusters to " << cfg.out_dir << "\n";
    return 0;
}

int run_report(const RunConfig& cfg, std::ostream& out) {
    if (cfg.out_dir.empty()) fail(Errc::InvalidArgument, "--out is required");
    Pipeline p = prepare(cfg, false);

    const ValidationReport report = validate_crosswalk(p.raw, p.crosswalk);
    write_under(cfg.out_dir, "validation.txt", render_validation_report(report));
    if (!report.ok()) {
        out << "validation failed with " << report.findings.size()
            << " findings, see validation.txt\n";
        return 1;
    }
    p.panel = harmonize(p.raw, p.crosswalk);
    write_under(cfg.out_dir, "harmonized_panel.csv", render_panel(p.panel));

    auto results = compute_all(p.panel, p.levels, p.years, cfg.top_k, cfg.threads);
    auto grouped = group_by_unit(results);

    for (const auto& [unit, unit_results] : grouped) {
        const std::string dir_slug = std::string(level_name(unit.level)) + "/" + slug(unit.name);
        write_under(cfg.out_dir, "indices/" + dir_slug + "." + table_ext(cfg),
                    render_index_table(unit_results, table_format(cfg)));
        write_under(cfg.out_dir, "summary/" + dir_slug + "." + table_ext(cfg),
                    render_summary_table(unit_results, table_format(cfg)));
        std::vector<std::pair<std::string, LorenzCurve>> labelled;
        for (const auto& r : unit_results) {
            write_under(cfg.out_dir, "lorenz/" + dir_slug + "_" + std::to_string(r.year) + ".csv",
                        render_lorenz_csv(r.lorenz));
            labelled.emplace_back(std::to_string(r.year), r.lorenz);
        }
        write_under(cfg.out_dir, "lorenz/" + dir_slug + ".svg",
                    render_lorenz_svg(labelled, cfg.lorenz_offset));
    }

    constexpr std::array<IndexName, 3> kIndices = {IndexName::Theil, IndexName::Gini,
                                                   IndexName::Hhi};
    for (Level level : p.levels) {
        if (level == Level::Country) continue;
        std::vector<UnitYearResult> of_level;
        for (const auto& r : results) {
            if (r.unit.level == level) of_level.push_back(r);
        }
        for (IndexName index : kIndices) {
            for (int year : p.years) {
                std::vector<UnitYearResult> of_year;
                for (const auto& r : of_level) {
                    if (r.year == year) of_year.push_back(r);
                }
                const Ranking ranking = rank_units(of_year, index, year);
                write_under(cfg.out_dir,
                            std::string("rankings/") + level_name(level) + "_" +
                                index_name_str(index) + "_" + std::to_string(year) + ".csv",
                            render_ranking_csv(ranking));
                for (ClusterMode mode : {ClusterMode::BottomK, ClusterMode::TopK}) {
                    const int size =
                        std::min<int>(cfg.cluster_size,
                                      static_cast<int>(ranking.entries.size()));
                    const auto cluster = extract_clusters(ranking, mode, size);
                    const char* mode_str = mode == ClusterMode::BottomK ? "bottom" : "top";
                    write_under(cfg.out_dir,
                                std::string("clusters/") + level_name(level) + "_" +
                                    index_name_str(index) + "_" + mode_str +
                                    std::to_string(size) + "_" + std::to_string(year) + ".csv",
                                render_clusters_csv(ranking, mode, cluster));
                }
            }
            if (p.years.size() >= 2) {
                auto shifts =
                    detect_rank_shifts(of_level, index, p.years.front(), p.years.back());
                write_under(cfg.out_dir,
                            std::string("rank_shifts/") + level_name(level) + "_" +
                                index_name_str(index) + "_" + std::to_string(p.years.front()) +
                                "_" + std::to_string(p.years.back()) + ".csv",
                            render_rank_shifts_csv(shifts));
            }
        }
    }

    const bool has_country =
        std::find(p.levels.begin(), p.levels.end(), Level::Country) != p.levels.end();
    const bool has_region =
        std::find(p.levels.begin(), p.levels.end(), Level::Region) != p.levels.end();
    if (has_country && has_region) {
        for (IndexName index : kIndices) {
            for (int year : p.years) {
                std::vector<UnitYearResult> regional;
                const UnitYearResult* national = nullptr;
                for (const auto& r : results) {
                    if (r.year != year) continue;
                    if (r.unit.level == Level::Region) regional.push_back(r);
                    if (r.unit.level == Level::Country) national = &r;
                }
                if (!national || regional.empty()) continue;
                auto flags = national_comparison(regional, *national, index, year);
                write_under(cfg.out_dir,
                            std::string("national/") + index_name_str(index) + "_" +
                                std::to_string(year) + ".csv",
                            render_national_csv(index, year, flags));
            }
        }
    }

    out << "report written to " << cfg.out_dir << "\n";
    return 0;
}

void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& years_arg,
                        std::vector<std::string>& level_names, std::string& index_name) {
    sub->add_option("--panel", cfg.panel_path, "panel CSV file")->required();
    sub->add_option("--crosswalk", cfg.crosswalk_path, "crosswalk event file");
    sub->add_option("--baseline-year", cfg.baseline_year,
                    "baseline year (default: latest in panel)");
    sub->add_option("--years", years_arg, "years, e.g. 2007-2011 or 2007,2009");
    sub->add_option("--level", level_names, "country|region|province (repeatable)");
    sub->add_option("--top-k", cfg.top_k, "largest-K cutoff for the concentration index")
        ->check(CLI::PositiveNumber);
    sub->add_option("--index", index_name, "theil|gini|hhi");
    sub->add_option("--cluster-size", cfg.cluster_size, "cluster size")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "csv|table");
    sub->add_option("--threads", cfg.threads, "worker thread cap (0 = auto)");
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"inequality and concentration analytics over territorial wealth panels"};
    app.name("regionstat");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string years_arg;
    std::vector<std::string> level_names;
    std::string index_name = "theil";
    std::string cluster_mode = "bottom";

    auto* validate = app.add_subcommand("validate", "check a panel and crosswalk");
    auto* harmonize_cmd =
        app.add_subcommand("harmonize", "write the harmonized panel CSV");
    auto* indices = app.add_subcommand("indices", "per-unit indicator tables");
    auto* summary = app.add_subcommand("summary", "per-unit descriptive statistics");
    auto* lorenz = app.add_subcommand("lorenz", "lorenz curve data and plots");
    auto* rank_shifts =
        app.add_subcommand("rank-shifts", "rank changes between first and last year");
    auto* clusters = app.add_subcommand("clusters", "lowest/highest ranked units");
    auto* report = app.add_subcommand("report", "full pipeline into an output tree");

    for (CLI::App* sub :
         {validate, harmonize_cmd, indices, summary, lorenz, rank_shifts, clusters, report}) {
        add_common_options(sub, cfg, years_arg, level_names, index_name);
    }
    for (CLI::App* sub : {indices, summary, lorenz, rank_shifts, clusters, report}) {
        sub->add_option("--out", cfg.out_dir, "output directory");
    }
    harmonize_cmd->add_option("--out", cfg.out_file, "output CSV path")->required();
    report->get_option("--out")->required();
    for (CLI::App* sub : {lorenz, report}) {
        sub->add_option("--lorenz-offset", cfg.lorenz_offset,
                        "vertical offset between curves in the SVG overlay");
    }
    for (CLI::App* sub : {clusters, report}) {
        sub->add_option("--cluster-mode", cluster_mode, "bottom|top");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        err << app.help();
        return 64;
    }

    try {
        cfg.years = parse_years_arg(years_arg);
        cfg.index = parse_index(index_name);
        if (cluster_mode == "bottom") cfg.cluster_mode = ClusterMode::BottomK;
        else if (cluster_mode == "top") cfg.cluster_mode = ClusterMode::TopK;
        else fail(Errc::InvalidArgument, "unknown cluster mode '" + cluster_mode + "'");

        const std::vector<Level> all = {Level::Country, Level::Region, Level::Province};
        const std::vector<Level> region_only = {Level::Region};
        cfg.levels =
            parse_levels(level_names, app.got_subcommand(report) ? all : region_only);

        if (app.got_subcommand(validate)) return run_validate(cfg, out);
        if (app.got_subcommand(harmonize_cmd)) return run_harmonize(cfg, out);
        if (app.got_subcommand(indices)) return run_tables(cfg, out, false);
        if (app.got_subcommand(summary)) return run_tables(cfg, out, true);
        if (app.got_subcommand(lorenz)) {
            if (lorenz->get_option("--format")->count() == 0) cfg.format = "csv,svg";
            return run_lorenz(cfg, out);
        }
        if (app.got_subcommand(rank_shifts)) return run_rank_shifts(cfg, out);
        if (app.got_subcommand(clusters)) return run_clusters(cfg, out);
        if (app.got_subcommand(report)) return run_report(cfg, out);
        err << "no subcommand selected\n";
        return 64;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}

int cli_run(const std::vector<std::string>& args) {
    return cli_run(args, std::cout, std::cerr);
}

} // namespace regionstat
