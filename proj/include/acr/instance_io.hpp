#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "acr/problems.hpp"
#include "acr/reactor.hpp"

namespace acr {

// parse failure carrying the 1-based input line it was detected on
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// ---------------------------------------------------------------------------
// Instance formats
// ---------------------------------------------------------------------------

// TSPLIB dialect: EDGE_WEIGHT_TYPE EUC_2D (coordinates, distances rounded to
// the nearest integer) or EXPLICIT with EDGE_WEIGHT_FORMAT FULL_MATRIX.
TspInstance parse_tsplib(std::string_view text);
std::string write_tsplib(const TspInstance&);

// OR-Library airland layout: "<planes> <freeze>" header, then per aircraft
// "appearance earliest target latest early-penalty late-penalty" followed by
// its separation row. The runway count is not part of the format.
AlspInstance parse_airland(std::string_view text, int runways = 1);
std::string write_airland(const AlspInstance&);

// one marker per line: name then a vector over {0 absent, 1 present, 2 unknown}
RhPanel parse_rh_panel(std::string_view text);
std::string write_rh_panel(const RhPanel&);

// ---------------------------------------------------------------------------
// Run configuration file: "key = value" lines, '#' comments. Unknown keys are
// rejected; missing keys keep the defaults below.
// ---------------------------------------------------------------------------

struct RunSettings {
    ReactorConfig reactor;
    int repeats = 1;
    int runways = 1;
    int capacity = 40;        // default for every group
    int tsp_capacity = 0;     // per-kind overrides, 0 = use `capacity`
    int alsp_capacity = 0;
    int rh_capacity = 0;
    std::vector<std::string> tsp_paths;
    std::vector<std::string> alsp_paths;
    std::vector<std::string> rh_paths;

    int capacity_for(ProblemKind kind) const;
};

RunSettings parse_config(std::string_view text);

// ---------------------------------------------------------------------------
// Result documents
// ---------------------------------------------------------------------------

struct GroupReport {
    std::string label;
    ProblemKind kind = ProblemKind::tsp;
    int atoms = 0;
    double best_mass = 0.0;        // minimum over all repeats
    Perm best_perm;
    std::int64_t saturation_epoch = -1;  // from the repeat that achieved the best mass
    double mean_best = 0.0;        // over repeats
    double stddev_best = 0.0;      // n-1 denominator; meaningful only when repeats >= 2
    double display_scale = 1.0;    // table values are divided by this
    double per_marker_avg = 0.0;   // rh only: best_mass / markers
    std::uint64_t r1 = 0, r2 = 0, r3 = 0;  // reaction totals over all repeats

    bool operator==(const GroupReport&) const = default;
};

struct ReportDocument {
    std::uint64_t seed = 0;
    int repeats = 1;
    std::vector<GroupReport> groups;

    bool operator==(const ReportDocument&) const = default;
};

enum class ReportFormat { table, machine };

// `table` renders aligned columns with "mean (stddev)" cells; `machine` emits
// key=value records that parse_report() reads back exactly.
std::string write_report(const ReportDocument&, ReportFormat);
ReportDocument parse_report(std::string_view machine_text);

}  // namespace acr
