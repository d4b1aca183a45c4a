#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace acr {

using Perm = std::vector<std::int32_t>;

// true iff every index in [0, p.size()) appears exactly once
bool is_permutation(const Perm& p);

// ---------------------------------------------------------------------------
// Traveling salesman
// ---------------------------------------------------------------------------

struct TspInstance {
    int n = 0;
    std::vector<std::vector<double>> costs;  // costs[i][j], zero diagonal
    bool symmetric = true;
    double display_scale = 1.0;  // report divisor for scaled synthetic instances
    std::string name;

    bool operator==(const TspInstance&) const = default;
};

void validate(const TspInstance&);

// closed-tour cost: sum of consecutive legs plus the leg back to the start
double tsp_cost(const TspInstance&, const Perm&);

// ---------------------------------------------------------------------------
// Aircraft landing
// ---------------------------------------------------------------------------

struct Aircraft {
    double appearance = 0.0;  // parsed and ignored: the problem is static
    double earliest = 0.0;
    double target = 0.0;
    double latest = 0.0;
    double early_penalty = 0.0;  // per unit time before target
    double late_penalty = 0.0;   // per unit time after target

    bool operator==(const Aircraft&) const = default;
};

struct AlspInstance {
    std::vector<Aircraft> aircraft;
    std::vector<std::vector<double>> sep;  // same-runway separation, zero diagonal
    int runways = 1;

    int size() const { return static_cast<int>(aircraft.size()); }
    bool operator==(const AlspInstance&) const = default;
};

void validate(const AlspInstance&);

struct LandingSchedule {
    std::vector<double> times;
    std::vector<int> runway_of;
    std::vector<std::uint8_t> violated;  // clamped to latest: window could not be met
    bool feasible = true;
    double cost = 0.0;
};

// surcharge per aircraft whose window cannot be met; keeps infeasible
// schedules heavy but still comparable
inline constexpr double kAlspBigM = 1e7;

// Order-to-schedule decoder. Aircraft are processed in permutation order; each
// one takes the runway with the smallest separation-feasible time (ties to the
// lowest runway index) and is delayed to its target when it would land early.
// Feasible schedules are then retimed: per runway the landing sequence is
// fixed and the times are re-optimized exactly over the time windows and
// separation chain, so an optimal permutation decodes to its true optimum.
LandingSchedule alsp_decode(const AlspInstance&, const Perm&);

// Total penalty: early_penalty * earliness + late_penalty * lateness per
// aircraft, plus kAlspBigM per violated aircraft.
double alsp_cost(const AlspInstance&, const LandingSchedule&);

// ---------------------------------------------------------------------------
// Radiation hybrid panel
// ---------------------------------------------------------------------------

enum class RhCell : std::uint8_t { absent = 0, present = 1, unknown = 2 };

struct RhPanel {
    int markers = 0;
    int hybrids = 0;
    std::vector<std::vector<RhCell>> cells;  // [marker][hybrid]
    std::vector<std::string> names;

    bool operator==(const RhPanel&) const = default;
};

void validate(const RhPanel&);

// obligate breaks: over adjacent marker pairs in the ordering, count hybrids
// where one marker is present and the other absent (unknown contributes 0)
long rh_breaks(const RhPanel&, const Perm&);
double rh_mass(const RhPanel&, const Perm&);

// ---------------------------------------------------------------------------
// Group instance: one of the three problem kinds
// ---------------------------------------------------------------------------

enum class ProblemKind { tsp, alsp, rh };

using GroupInstance = std::variant<TspInstance, AlspInstance, RhPanel>;

ProblemKind kind_of(const GroupInstance&);
const char* kind_name(ProblemKind);
int atoms_of(const GroupInstance&);  // permutation length
double mass_of(const GroupInstance&, const Perm&);

}  // namespace acr
