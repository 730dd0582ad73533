#pragma once

#include <string>
#include <vector>

#include "regionstat/hierarchy.hpp"

namespace regionstat {

// Everything one pipeline run needs. Populated from CLI flags; defaults
// match the conventional choices (top 50 cities, bottom-four clusters).
struct RunConfig {
    std::string panel_path;
    std::string crosswalk_path;          // empty = identity crosswalk
    int baseline_year = 0;               // 0 = latest year in the panel
    int top_k = kDefaultTopK;
    int cluster_size = 4;
    std::vector<Level> levels = {Level::Country, Level::Region};
    std::vector<int> years;              // empty = all panel years
    IndexName index = IndexName::Theil;
    ClusterMode cluster_mode = ClusterMode::BottomK;
    std::string format = "csv";          // csv | table (| svg for lorenz)
    double lorenz_offset = 0.0;
    std::string out_dir;
    std::string out_file;
    int threads = 0;                     // 0 = REGIONSTAT_THREADS or hardware
};

// The whole command-line surface, callable in-process. Returns the exit
// status; diagnostics go to the given streams.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_run(const std::vector<std::string>& args);

} // namespace regionstat
