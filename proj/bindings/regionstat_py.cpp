#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "regionstat/cli.hpp"
#include "regionstat/harmonize.hpp"
#include "regionstat/hierarchy.hpp"
#include "regionstat/io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace regionstat;

namespace {

Level level_from_string(const std::string& name) {
    if (name == "country") return Level::Country;
    if (name == "region") return Level::Region;
    if (name == "province") return Level::Province;
    throw Error(Errc::InvalidArgument, "unknown level '" + name + "'");
}

std::vector<std::pair<double, double>> curve_to_pairs(const LorenzCurve& curve) {
    std::vector<std::pair<double, double>> out;
    out.reserve(curve.points.size());
    for (const auto& p : curve.points) {
        out.emplace_back(p.population_fraction, p.wealth_fraction);
    }
    return out;
}

LorenzCurve pairs_to_curve(const std::vector<std::pair<double, double>>& points) {
    LorenzCurve curve;
    curve.points.reserve(points.size());
    for (const auto& [x, y] : points) curve.points.push_back({x, y});
    return curve;
}

} // namespace

PYBIND11_MODULE(_regionstat, m) {
    m.doc() = "wealth-panel inequality and concentration analytics";

    py::register_exception<Error>(m, "RegionstatError");

    py::class_<IndexBundle>(m, "IndexBundle")
        .def_readonly("entropy", &IndexBundle::entropy)
        .def_readonly("max_entropy", &IndexBundle::max_entropy)
        .def_readonly("theil", &IndexBundle::theil)
        .def_readonly("hhi", &IndexBundle::hhi)
        .def_readonly("hhi_normalized", &IndexBundle::hhi_normalized)
        .def_readonly("gini", &IndexBundle::gini)
        .def_readonly("n_entities", &IndexBundle::n_entities)
        .def_readonly("top_k_used", &IndexBundle::top_k_used)
        .def("__repr__", [](const IndexBundle& b) {
            std::ostringstream s;
            s << "IndexBundle(n=" << b.n_entities << ", entropy=" << b.entropy
              << ", theil=" << b.theil << ", hhi=" << b.hhi << ", gini=" << b.gini << ")";
            return s.str();
        });

    py::class_<SummaryStats>(m, "SummaryStats")
        .def_readonly("min", &SummaryStats::min)
        .def_readonly("max", &SummaryStats::max)
        .def_readonly("sum", &SummaryStats::sum)
        .def_readonly("mean", &SummaryStats::mean)
        .def_readonly("median", &SummaryStats::median)
        .def_readonly("rms", &SummaryStats::rms)
        .def_readonly("std_dev", &SummaryStats::std_dev)
        .def_readonly("variance", &SummaryStats::variance)
        .def_readonly("std_err", &SummaryStats::std_err)
        .def_readonly("skewness", &SummaryStats::skewness)
        .def_readonly("kurtosis", &SummaryStats::kurtosis)
        .def_readonly("mean_over_sd", &SummaryStats::mean_over_sd)
        .def_readonly("nonparam_skew", &SummaryStats::nonparam_skew)
        .def_readonly("n", &SummaryStats::n)
        .def("kurtosis_excess", &SummaryStats::kurtosis_excess)
        .def("__repr__", [](const SummaryStats& s) {
            std::ostringstream out;
            out << "SummaryStats(n=" << s.n << ", mean=" << s.mean
                << ", median=" << s.median << ", std_dev=" << s.std_dev << ")";
            return out.str();
        });

    py::class_<TerritorialPanel>(m, "Panel")
        .def("years", &TerritorialPanel::year_list)
        .def("city_count",
             [](const TerritorialPanel& p, int year) {
                 return p.entity_set(year).size();
             },
             "year"_a)
        .def("units",
             [](const TerritorialPanel& p, const std::string& level, int year) {
                 std::vector<std::string> names;
                 for (const auto& u : list_units(p, level_from_string(level), year)) {
                     names.push_back(u.name);
                 }
                 return names;
             },
             "level"_a, "year"_a)
        .def("values",
             [](const TerritorialPanel& p, const std::string& level,
                const std::string& name, int year) {
                 return unit_vector(p, {level_from_string(level), name}, year).values();
             },
             "level"_a, "name"_a, "year"_a, "member-city wealth values of one unit-year");

    py::class_<Crosswalk>(m, "Crosswalk")
        .def_readonly("baseline_year", &Crosswalk::baseline_year)
        .def("__len__", [](const Crosswalk& cw) { return cw.events.size(); });

    m.def("shares",
          [](const std::vector<double>& v) { return shares(v); },
          "values"_a, "market shares y_i / sum(y), input order");
    m.def("entropy",
          [](const std::vector<double>& v) { return entropy(v); },
          "values"_a);
    m.def("theil",
          [](const std::vector<double>& v) { return theil(v); },
          "values"_a);
    m.def("gini",
          [](const std::vector<double>& v) { return gini(v); },
          "values"_a);
    m.def("hhi_top_k",
          [](const std::vector<double>& v, int k) { return hhi_top_k(v, k); },
          "values"_a, "k"_a = kDefaultTopK);
    m.def("hhi_normalized", &hhi_normalized, "hhi"_a, "n"_a);
    m.def("lorenz_curve",
          [](const std::vector<double>& v) {
              return curve_to_pairs(lorenz_curve(v));
          },
          "values"_a, "list of (population_fraction, wealth_fraction) points");
    m.def("gini_from_lorenz",
          [](const std::vector<std::pair<double, double>>& points) {
              return gini_from_lorenz(pairs_to_curve(points));
          },
          "points"_a);
    m.def("summarize",
          [](const std::vector<double>& v) { return summarize(v); },
          "values"_a);
    m.def("index_bundle",
          [](const std::vector<double>& v, int top_k) {
              return compute_bundle(v, top_k);
          },
          "values"_a, "top_k"_a = kDefaultTopK);

    m.def("load_panel", &ingest_panel, "path"_a);
    m.def("load_crosswalk", &ingest_crosswalk, "path"_a, "baseline_year"_a);
    m.def("harmonize", &harmonize, "panel"_a, "crosswalk"_a);
    m.def("validate",
          [](const TerritorialPanel& panel, const Crosswalk& cw) {
              std::vector<std::pair<std::string, std::string>> out;
              for (const auto& f : validate_crosswalk(panel, cw).findings) {
                  out.emplace_back(errc_name(f.code), f.message);
              }
              return out;
          },
          "panel"_a, "crosswalk"_a, "list of (code, message) findings; empty means clean");
    m.def("compute_unit_year",
          [](const TerritorialPanel& panel, const std::string& level,
             const std::string& name, int year, int top_k) {
              return compute_unit_year(panel, {level_from_string(level), name}, year,
                                       top_k)
                  .bundle;
          },
          "panel"_a, "level"_a, "name"_a, "year"_a, "top_k"_a = kDefaultTopK);
    m.def("cli_run",
          [](const std::vector<std::string>& args) { return cli_run(args); },
          "args"_a, "run a CLI subcommand in-process, returns the exit status");
}
