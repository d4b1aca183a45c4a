#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acr/problems.hpp"
#include "acr/random.hpp"

namespace acr {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// One candidate solution: a permutation of the owning problem's atoms, with
// its objective value cached as molecular mass (lighter = better).
struct Molecule {
    int group = 0;
    Perm perm;
    double mass = 0.0;
    std::uint64_t birth = 0;  // creation sequence number, breaks mass ties deterministically
};

struct ReactorConfig {
    std::uint64_t seed = 0;
    int reactions_per_epoch = -1;  // negative: default to the universe's total capacity
    double wall_probability = 0.1;
    double heavy_quantile = 0.25;
    double decay_fraction = 0.05;
    double saturation_share = 0.90;
    double saturation_tolerance = 0.01;  // relative mass band around the group best
    std::uint64_t max_epochs = 10000;
};

void validate(const ReactorConfig&);

// absolute saturation band used when the group best mass is exactly zero
inline constexpr double kZeroMassBand = 1e-9;

// ---------------------------------------------------------------------------
// Reaction rules
// ---------------------------------------------------------------------------

// Cycle reordering: trace the position cycle starting at `start` (next
// position = where parent a holds the atom parent b shows at the current
// position, until the cycle closes). The first child copies a on the cycle
// and b elsewhere; the second is the mirror.
std::pair<Perm, Perm> cycle_crossover(const Perm& a, const Perm& b, int start);

// swap atom l with atom l+1; the last position swaps with the first
Perm swap_with_next(const Perm& p, int l);

// swap atom l with atom l+step (step +1 or -1), wrapping at both ends
Perm swap_with_neighbour(const Perm& p, int l, int step);

// same-problem collision (rule R1); both reactants must share a group
std::pair<Molecule, Molecule> react_same(const Molecule& m1, const Molecule& m2, int l,
                                         const GroupInstance& instance);

// cross-problem collision (rule R2); reactants must be from different groups,
// each independently yields a product by swapping at its own collision point
std::pair<Molecule, Molecule> react_cross(const Molecule& m5, const Molecule& m6, int l5, int l6,
                                          const GroupInstance& inst5, const GroupInstance& inst6);

// wall/bottom collision (rule R3); heads moves the atom forward, tails backward
Molecule react_wall(const Molecule& m, int l, bool heads, const GroupInstance& instance);

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

struct GroupSpec {
    GroupInstance instance;
    int capacity = 0;
    std::string label;
};

struct EpochStats {
    std::uint64_t epoch = 0;
    std::vector<double> best_mass;       // per group
    std::vector<std::uint8_t> frozen;    // per group
    std::uint64_t same_reactions = 0;    // R1 events
    std::uint64_t cross_reactions = 0;   // R2 events
    std::uint64_t wall_collisions = 0;   // R3 applications
};

struct GroupResult {
    std::string label;
    ProblemKind kind = ProblemKind::tsp;
    int atoms = 0;
    double best_mass = 0.0;
    Perm best_perm;
    std::int64_t saturation_epoch = -1;  // -1: never saturated
    std::uint64_t same_reactions = 0;    // R1 events inside this group
    std::uint64_t cross_reactions = 0;   // R2 events with a reactant from this group
    std::uint64_t wall_collisions = 0;   // R3 applications in this group
};

struct RunReport {
    std::uint64_t epochs = 0;
    std::vector<GroupResult> groups;
    std::uint64_t same_reactions = 0;
    std::uint64_t cross_reactions = 0;
    std::uint64_t wall_collisions = 0;
};

class Universe {
public:
    Universe(std::vector<GroupSpec> groups, ReactorConfig config);

    // Mass-biased draw of two distinct molecules (possibly from different
    // groups): within each group molecules are ranked by mass ascending and
    // weighted k-r+1 for rank r of group size k, normalized over every
    // unfrozen molecule. Returns nothing once every group is frozen.
    std::optional<std::pair<Molecule, Molecule>> select_pair();

    // Add products to their groups, then trim each affected group back to its
    // capacity by dropping the heaviest molecules (ties drop the older one).
    void insert_and_trim(const std::vector<Molecule>& products);

    // Replace the heaviest decay_fraction of each unfrozen group (never the
    // single lightest molecule) with fresh random molecules.
    void decay();

    // true iff at least saturation_share of the group's molecules sit within
    // the tolerance band of the group's best mass
    bool is_saturated(int group) const;

    // One epoch: collision events, wall collisions for the heavy quantile,
    // decay, then freeze any group that saturated.
    EpochStats run_epoch();

    // Epochs until every group is frozen or max_epochs is reached.
    RunReport run_until_done();

    // accessors ------------------------------------------------------------
    int group_count() const { return static_cast<int>(groups_.size()); }
    const std::vector<Molecule>& molecules(int group) const;
    const GroupSpec& spec(int group) const;
    bool frozen(int group) const;
    std::int64_t saturation_epoch(int group) const;
    const Molecule& best(int group) const;  // lightest molecule
    std::uint64_t epoch() const { return epoch_; }
    const ReactorConfig& config() const { return config_; }

    // throws if any structural invariant is violated (used by tests)
    void check_invariants() const;

    // full structured-text state dump, for determinism comparisons
    std::string snapshot() const;

private:
    struct Group {
        GroupSpec spec;
        std::vector<Molecule> mols;
        bool frozen = false;
        std::int64_t saturation_epoch = -1;
        std::uint64_t same_reactions = 0;
        std::uint64_t cross_reactions = 0;
        std::uint64_t wall_collisions = 0;
    };

    struct Pick {
        int group;
        int index;
    };

    Molecule fresh_molecule(int group);
    std::vector<int> ascending_by_mass(const Group& g) const;
    std::optional<Pick> weighted_pick();
    void trim_group(Group& g);

    std::vector<Group> groups_;
    ReactorConfig config_;
    Rng rng_;
    std::uint64_t epoch_ = 0;
    std::uint64_t next_birth_ = 0;
    std::uint64_t total_same_ = 0;
    std::uint64_t total_cross_ = 0;
    std::uint64_t total_wall_ = 0;
};

// fraction-of-capacity counts used by decay and the wall-collision quantile
int fraction_count(double fraction, int capacity);

// saturation predicate over a group's mass list: at least `share` of the
// masses lie within best*(1+tolerance), or within kZeroMassBand of zero when
// the best mass is exactly zero
bool saturation_check(const std::vector<double>& masses, double share, double tolerance);

}  // namespace acr
