#include "acr/reactor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace acr {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_position(const Perm& p, int l, const char* what) {
    require(l >= 0 && static_cast<std::size_t>(l) < p.size(), what);
}

}  // namespace

void validate(const ReactorConfig& c) {
    if (c.wall_probability < 0.0 || c.wall_probability > 1.0)
        throw ConfigError("wall_probability must lie in [0, 1]");
    if (c.heavy_quantile <= 0.0 || c.heavy_quantile >= 1.0)
        throw ConfigError("heavy_quantile must lie in (0, 1)");
    if (c.decay_fraction < 0.0 || c.decay_fraction > 1.0)
        throw ConfigError("decay_fraction must lie in [0, 1]");
    if (c.saturation_share <= 0.0 || c.saturation_share > 1.0)
        throw ConfigError("saturation_share must lie in (0, 1]");
    if (c.saturation_tolerance < 0.0)
        throw ConfigError("saturation_tolerance must be nonnegative");
}

int fraction_count(double fraction, int capacity) {
    // nudge before ceil so 0.2 * 10 stays 2 despite binary rounding
    const int raw = static_cast<int>(std::ceil(fraction * capacity - 1e-9));
    return std::clamp(raw, 0, capacity - 1);
}

// ---------------------------------------------------------------------------
// Reaction rules
// ---------------------------------------------------------------------------

std::pair<Perm, Perm> cycle_crossover(const Perm& a, const Perm& b, int start) {
    require(a.size() == b.size(), "cycle_crossover: parent length mismatch");
    check_position(a, start, "cycle_crossover: start position out of range");
    const auto n = a.size();

    std::vector<std::int32_t> pos_in_a(n);
    for (std::size_t i = 0; i < n; ++i) pos_in_a[static_cast<std::size_t>(a[i])] = static_cast<std::int32_t>(i);

    std::vector<char> on_cycle(n, 0);
    int p = start;
    do {
        on_cycle[static_cast<std::size_t>(p)] = 1;
        p = pos_in_a[static_cast<std::size_t>(b[static_cast<std::size_t>(p)])];
    } while (p != start);

    Perm c1(n), c2(n);
    for (std::size_t i = 0; i < n; ++i) {
        c1[i] = on_cycle[i] ? a[i] : b[i];
        c2[i] = on_cycle[i] ? b[i] : a[i];
    }
    return {std::move(c1), std::move(c2)};
}

Perm swap_with_next(const Perm& p, int l) {
    check_position(p, l, "swap_with_next: position out of range");
    Perm q = p;
    const auto i = static_cast<std::size_t>(l);
    const std::size_t j = (i + 1 == q.size()) ? 0 : i + 1;
    std::swap(q[i], q[j]);
    return q;
}

Perm swap_with_neighbour(const Perm& p, int l, int step) {
    check_position(p, l, "swap_with_neighbour: position out of range");
    require(step == 1 || step == -1, "swap_with_neighbour: step must be +1 or -1");
    Perm q = p;
    const auto n = static_cast<int>(q.size());
    const int j = (l + step % n + n) % n;
    std::swap(q[static_cast<std::size_t>(l)], q[static_cast<std::size_t>(j)]);
    return q;
}

std::pair<Molecule, Molecule> react_same(const Molecule& m1, const Molecule& m2, int l,
                                         const GroupInstance& instance) {
    require(m1.group == m2.group, "react_same: reactants from different groups");
    auto [p1, p2] = cycle_crossover(m1.perm, m2.perm, l);
    Molecule c1{m1.group, std::move(p1), 0.0, 0};
    Molecule c2{m1.group, std::move(p2), 0.0, 0};
    c1.mass = mass_of(instance, c1.perm);
    c2.mass = mass_of(instance, c2.perm);
    return {std::move(c1), std::move(c2)};
}

std::pair<Molecule, Molecule> react_cross(const Molecule& m5, const Molecule& m6, int l5, int l6,
                                          const GroupInstance& inst5, const GroupInstance& inst6) {
    require(m5.group != m6.group, "react_cross: reactants from the same group");
    Molecule p5{m5.group, swap_with_next(m5.perm, l5), 0.0, 0};
    Molecule p6{m6.group, swap_with_next(m6.perm, l6), 0.0, 0};
    p5.mass = mass_of(inst5, p5.perm);
    p6.mass = mass_of(inst6, p6.perm);
    return {std::move(p5), std::move(p6)};
}

Molecule react_wall(const Molecule& m, int l, bool heads, const GroupInstance& instance) {
    Molecule out{m.group, swap_with_neighbour(m.perm, l, heads ? 1 : -1), 0.0, m.birth};
    out.mass = mass_of(instance, out.perm);
    return out;
}

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

Universe::Universe(std::vector<GroupSpec> groups, ReactorConfig config)
    : config_(config), rng_(config.seed) {
    validate(config_);
    if (groups.empty()) throw ConfigError("universe needs at least one problem group");
    groups_.reserve(groups.size());
    for (auto& spec : groups) {
        if (spec.capacity < 2) throw ConfigError("group capacity must be at least 2");
        std::visit([](const auto& inst) { validate(inst); }, spec.instance);
        Group g;
        g.spec = std::move(spec);
        groups_.push_back(std::move(g));
    }
    if (config_.reactions_per_epoch < 0) {
        int total = 0;
        for (const auto& g : groups_) total += g.spec.capacity;
        config_.reactions_per_epoch = total;
    }
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        auto& g = groups_[gi];
        g.mols.reserve(static_cast<std::size_t>(g.spec.capacity) + 2);
        for (int i = 0; i < g.spec.capacity; ++i)
            g.mols.push_back(fresh_molecule(static_cast<int>(gi)));
    }
}

Molecule Universe::fresh_molecule(int group) {
    const auto& inst = groups_[static_cast<std::size_t>(group)].spec.instance;
    Molecule m;
    m.group = group;
    m.perm = rng_.permutation(atoms_of(inst));
    m.mass = mass_of(inst, m.perm);
    m.birth = next_birth_++;
    return m;
}

std::vector<int> Universe::ascending_by_mass(const Group& g) const {
    std::vector<int> order(g.mols.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.mols[static_cast<std::size_t>(a)].mass < g.mols[static_cast<std::size_t>(b)].mass;
    });
    return order;
}

std::optional<Universe::Pick> Universe::weighted_pick() {
    std::uint64_t total = 0;
    for (const auto& g : groups_) {
        if (g.frozen) continue;
        const auto k = static_cast<std::uint64_t>(g.mols.size());
        total += k * (k + 1) / 2;
    }
    if (total == 0) return std::nullopt;

    std::uint64_t r = rng_.below(total);
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        const auto& g = groups_[gi];
        if (g.frozen) continue;
        const auto k = static_cast<std::uint64_t>(g.mols.size());
        const std::uint64_t group_weight = k * (k + 1) / 2;
        if (r >= group_weight) {
            r -= group_weight;
            continue;
        }
        const auto order = ascending_by_mass(g);
        for (std::size_t rank = 0; rank < order.size(); ++rank) {
            const std::uint64_t w = k - rank;  // lightest rank gets weight k
            if (r < w) return Pick{static_cast<int>(gi), order[rank]};
            r -= w;
        }
    }
    return std::nullopt;  // unreachable
}

std::optional<std::pair<Molecule, Molecule>> Universe::select_pair() {
    auto first = weighted_pick();
    if (!first) return std::nullopt;
    Pick second{};
    do {
        auto pick = weighted_pick();
        if (!pick) return std::nullopt;
        second = *pick;
    } while (second.group == first->group && second.index == first->index);
    return std::make_pair(groups_[static_cast<std::size_t>(first->group)].mols[static_cast<std::size_t>(first->index)],
                          groups_[static_cast<std::size_t>(second.group)].mols[static_cast<std::size_t>(second.index)]);
}

void Universe::insert_and_trim(const std::vector<Molecule>& products) {
    for (const auto& p : products) {
        require(p.group >= 0 && static_cast<std::size_t>(p.group) < groups_.size(),
                "insert_and_trim: unknown group");
        auto& g = groups_[static_cast<std::size_t>(p.group)];
        require(!g.frozen, "insert_and_trim: product for a frozen group");
        Molecule m = p;
        m.birth = next_birth_++;
        g.mols.push_back(std::move(m));
    }
    for (auto& g : groups_) trim_group(g);
}

void Universe::trim_group(Group& g) {
    while (g.mols.size() > static_cast<std::size_t>(g.spec.capacity)) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < g.mols.size(); ++i) {
            const auto& a = g.mols[i];
            const auto& b = g.mols[worst];
            if (a.mass > b.mass || (a.mass == b.mass && a.birth < b.birth)) worst = i;
        }
        g.mols.erase(g.mols.begin() + static_cast<std::ptrdiff_t>(worst));
    }
}

void Universe::decay() {
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        auto& g = groups_[gi];
        if (g.frozen) continue;
        const int k = static_cast<int>(g.mols.size());
        const int count = fraction_count(config_.decay_fraction, k);
        if (count == 0) continue;
        const auto order = ascending_by_mass(g);
        for (int pos = k - count; pos < k; ++pos)
            g.mols[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
                fresh_molecule(static_cast<int>(gi));
    }
}

bool saturation_check(const std::vector<double>& masses, double share, double tolerance) {
    double best = masses.front();
    for (double m : masses) best = std::min(best, m);
    const double band = best > 0.0 ? best * (1.0 + tolerance) : kZeroMassBand;
    int within = 0;
    for (double m : masses)
        if (m <= band) ++within;
    return static_cast<double>(within) >= share * static_cast<double>(masses.size()) - 1e-9;
}

bool Universe::is_saturated(int group) const {
    const auto& g = groups_[static_cast<std::size_t>(group)];
    std::vector<double> masses;
    masses.reserve(g.mols.size());
    for (const auto& m : g.mols) masses.push_back(m.mass);
    return saturation_check(masses, config_.saturation_share, config_.saturation_tolerance);
}

EpochStats Universe::run_epoch() {
    EpochStats stats;
    stats.best_mass.resize(groups_.size());
    stats.frozen.resize(groups_.size());

    const bool all_frozen =
        std::all_of(groups_.begin(), groups_.end(), [](const Group& g) { return g.frozen; });

    if (!all_frozen) {
        // collision events
        for (int ev = 0; ev < config_.reactions_per_epoch; ++ev) {
            auto picked_a = weighted_pick();
            if (!picked_a) break;
            const Pick a = *picked_a;
            Pick b = a;
            while (b.group == a.group && b.index == a.index) b = *weighted_pick();

            const auto& ga = groups_[static_cast<std::size_t>(a.group)];
            const auto& gb = groups_[static_cast<std::size_t>(b.group)];
            const Molecule& ma = ga.mols[static_cast<std::size_t>(a.index)];
            const Molecule& mb = gb.mols[static_cast<std::size_t>(b.index)];

            if (a.group == b.group) {
                const int l = rng_.index(static_cast<int>(ma.perm.size()));
                auto [c1, c2] = react_same(ma, mb, l, ga.spec.instance);
                insert_and_trim({c1, c2});
                ++stats.same_reactions;
                ++groups_[static_cast<std::size_t>(a.group)].same_reactions;
            } else {
                const int la = rng_.index(static_cast<int>(ma.perm.size()));
                const int lb = rng_.index(static_cast<int>(mb.perm.size()));
                auto [p5, p6] = react_cross(ma, mb, la, lb, ga.spec.instance, gb.spec.instance);
                insert_and_trim({p5, p6});
                ++stats.cross_reactions;
                ++groups_[static_cast<std::size_t>(a.group)].cross_reactions;
                ++groups_[static_cast<std::size_t>(b.group)].cross_reactions;
            }
        }

        // wall collisions for the heavy quantile (the lightest molecule is
        // never in the set, so the group best survives the epoch)
        for (auto& g : groups_) {
            if (g.frozen || config_.wall_probability <= 0.0) continue;
            const int k = static_cast<int>(g.mols.size());
            const int heavy = fraction_count(config_.heavy_quantile, k);
            if (heavy == 0) continue;
            const auto order = ascending_by_mass(g);
            for (int pos = k - heavy; pos < k; ++pos) {
                if (rng_.unit() >= config_.wall_probability) continue;
                auto& m = g.mols[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];
                const int l = rng_.index(static_cast<int>(m.perm.size()));
                const bool heads = rng_.unit() > 0.5;
                m = react_wall(m, l, heads, g.spec.instance);
                ++stats.wall_collisions;
                ++g.wall_collisions;
            }
        }

        decay();

        epoch_ += 1;
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            auto& g = groups_[gi];
            if (g.frozen) continue;
            if (is_saturated(static_cast<int>(gi))) {
                g.frozen = true;
                g.saturation_epoch = static_cast<std::int64_t>(epoch_);
            }
        }
    }

    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        stats.best_mass[gi] = best(static_cast<int>(gi)).mass;
        stats.frozen[gi] = groups_[gi].frozen ? 1 : 0;
    }
    stats.epoch = epoch_;
    total_same_ += stats.same_reactions;
    total_cross_ += stats.cross_reactions;
    total_wall_ += stats.wall_collisions;
    return stats;
}

RunReport Universe::run_until_done() {
    while (epoch_ < config_.max_epochs &&
           !std::all_of(groups_.begin(), groups_.end(), [](const Group& g) { return g.frozen; }))
        run_epoch();

    RunReport report;
    report.epochs = epoch_;
    report.same_reactions = total_same_;
    report.cross_reactions = total_cross_;
    report.wall_collisions = total_wall_;
    report.groups.reserve(groups_.size());
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        const auto& g = groups_[gi];
        GroupResult r;
        r.label = g.spec.label;
        r.kind = kind_of(g.spec.instance);
        r.atoms = atoms_of(g.spec.instance);
        const Molecule& b = best(static_cast<int>(gi));
        r.best_mass = b.mass;
        r.best_perm = b.perm;
        r.saturation_epoch = g.saturation_epoch;
        r.same_reactions = g.same_reactions;
        r.cross_reactions = g.cross_reactions;
        r.wall_collisions = g.wall_collisions;
        report.groups.push_back(std::move(r));
    }
    return report;
}

const std::vector<Molecule>& Universe::molecules(int group) const {
    return groups_.at(static_cast<std::size_t>(group)).mols;
}

const GroupSpec& Universe::spec(int group) const {
    return groups_.at(static_cast<std::size_t>(group)).spec;
}

bool Universe::frozen(int group) const {
    return groups_.at(static_cast<std::size_t>(group)).frozen;
}

std::int64_t Universe::saturation_epoch(int group) const {
    return groups_.at(static_cast<std::size_t>(group)).saturation_epoch;
}

const Molecule& Universe::best(int group) const {
    const auto& g = groups_.at(static_cast<std::size_t>(group));
    const Molecule* b = &g.mols.front();
    for (const auto& m : g.mols)
        if (m.mass < b->mass) b = &m;
    return *b;
}

void Universe::check_invariants() const {
    for (const auto& g : groups_) {
        if (g.mols.size() != static_cast<std::size_t>(g.spec.capacity))
            throw std::logic_error("universe invariant: group size != capacity");
        for (const auto& m : g.mols) {
            if (m.perm.size() != static_cast<std::size_t>(atoms_of(g.spec.instance)) ||
                !is_permutation(m.perm))
                throw std::logic_error("universe invariant: molecule is not a valid permutation");
            if (m.mass != mass_of(g.spec.instance, m.perm))
                throw std::logic_error("universe invariant: cached mass is stale");
        }
    }
}

std::string Universe::snapshot() const {
    std::ostringstream os;
    char buf[64];
    os << "epoch " << epoch_ << "\n";
    os << "rng " << rng_.state() << "\n";
    os << "groups " << groups_.size() << "\n";
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        const auto& g = groups_[gi];
        os << "group " << gi << " kind " << kind_name(kind_of(g.spec.instance)) << " atoms "
           << atoms_of(g.spec.instance) << " capacity " << g.spec.capacity << " frozen "
           << (g.frozen ? 1 : 0) << " satepoch " << g.saturation_epoch << "\n";
        for (const auto& m : g.mols) {
            std::snprintf(buf, sizeof buf, "%.17g", m.mass);
            os << "mol " << buf << " " << m.birth << " :";
            for (auto v : m.perm) os << ' ' << v;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace acr
