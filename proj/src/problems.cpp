#include "acr/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace acr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

bool is_permutation(const Perm& p) {
    const auto n = p.size();
    thread_local std::vector<char> seen;
    seen.assign(n, 0);
    for (auto v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

// ---------------------------------------------------------------------------
// TSP
// ---------------------------------------------------------------------------

void validate(const TspInstance& inst) {
    require(inst.n >= 1, "tsp: n must be positive");
    require(inst.costs.size() == static_cast<std::size_t>(inst.n), "tsp: cost matrix row count != n");
    for (int i = 0; i < inst.n; ++i) {
        const auto& row = inst.costs[static_cast<std::size_t>(i)];
        require(row.size() == static_cast<std::size_t>(inst.n), "tsp: cost matrix is not square");
        require(row[static_cast<std::size_t>(i)] == 0.0, "tsp: nonzero diagonal cost");
        for (double c : row) require(c >= 0.0, "tsp: negative cost");
    }
    if (inst.symmetric) {
        for (int i = 0; i < inst.n; ++i)
            for (int j = i + 1; j < inst.n; ++j)
                require(inst.costs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                            inst.costs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                        "tsp: symmetric flag set on asymmetric matrix");
    }
}

double tsp_cost(const TspInstance& inst, const Perm& perm) {
    require(perm.size() == static_cast<std::size_t>(inst.n) && is_permutation(perm),
            "tsp_cost: invalid permutation");
    double total = 0.0;
    for (int i = 0; i + 1 < inst.n; ++i)
        total += inst.costs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                           [static_cast<std::size_t>(perm[static_cast<std::size_t>(i) + 1])];
    total += inst.costs[static_cast<std::size_t>(perm.back())][static_cast<std::size_t>(perm.front())];
    return total;
}

// ---------------------------------------------------------------------------
// ALSP
// ---------------------------------------------------------------------------

void validate(const AlspInstance& inst) {
    const int n = inst.size();
    require(n >= 1, "alsp: no aircraft");
    require(inst.runways >= 1, "alsp: runway count must be positive");
    for (const auto& a : inst.aircraft) {
        require(a.earliest <= a.target && a.target <= a.latest,
                "alsp: time window must satisfy earliest <= target <= latest");
        require(a.early_penalty >= 0.0 && a.late_penalty >= 0.0, "alsp: negative penalty coefficient");
    }
    require(inst.sep.size() == static_cast<std::size_t>(n), "alsp: separation matrix row count mismatch");
    for (int i = 0; i < n; ++i) {
        const auto& row = inst.sep[static_cast<std::size_t>(i)];
        require(row.size() == static_cast<std::size_t>(n), "alsp: separation matrix is not square");
        require(row[static_cast<std::size_t>(i)] == 0.0, "alsp: nonzero separation diagonal");
        for (double s : row) require(s >= 0.0, "alsp: negative separation");
    }
}

namespace {

// Convex piecewise-linear function sampled at its kinks, +inf outside the
// kink range. Used for the exact per-runway retiming pass.
struct ConvexPl {
    struct Pt {
        double x;
        double v;
    };
    std::vector<Pt> pts;  // sorted by x

    double lo() const { return pts.front().x; }
    double hi() const { return pts.back().x; }

    double value(double x) const {
        if (x < lo() || x > hi()) return kInf;
        auto it = std::lower_bound(pts.begin(), pts.end(), x,
                                   [](const Pt& p, double q) { return p.x < q; });
        if (it != pts.end() && it->x == x) return it->v;
        const Pt& b = *it;
        const Pt& a = *(it - 1);
        return a.v + (b.v - a.v) * (x - a.x) / (b.x - a.x);
    }

    double min_value() const {
        double m = kInf;
        for (const auto& p : pts) m = std::min(m, p.v);
        return m;
    }

    // min over y <= x, as a new convex function flat right of the argmin
    ConvexPl running_min() const {
        ConvexPl out;
        const double m = min_value();
        bool flat = false;
        for (const auto& p : pts) {
            if (flat) {
                out.pts.push_back({p.x, m});
            } else {
                out.pts.push_back(p);
                if (p.v <= m) flat = true;
            }
        }
        return out;
    }

    // Largest minimizer over y <= ub (caller guarantees ub >= lo). Convexity
    // makes this min(ub, b*) with b* the largest unconstrained minimizer.
    double largest_argmin(double ub) const {
        const double m = min_value();
        const double tol = 1e-9 * std::max(1.0, std::abs(m));
        double bstar = lo();
        for (const auto& p : pts)
            if (p.v <= m + tol) bstar = std::max(bstar, p.x);
        return std::min(ub, bstar);
    }

    double largest_argmin() const { return largest_argmin(hi()); }
};

double deviation_cost(const Aircraft& a, double x) {
    return a.early_penalty * std::max(0.0, a.target - x) +
           a.late_penalty * std::max(0.0, x - a.target);
}

ConvexPl window_cost(const Aircraft& a) {
    ConvexPl f;
    f.pts.push_back({a.earliest, deviation_cost(a, a.earliest)});
    if (a.earliest < a.target && a.target < a.latest)
        f.pts.push_back({a.target, 0.0});
    if (a.latest > a.earliest)
        f.pts.push_back({a.latest, deviation_cost(a, a.latest)});
    return f;
}

// Exact optimal landing times for a fixed single-runway sequence, subject to
// time windows and adjacent separations. Returns false if the chain is
// infeasible (cannot happen for sequences built by the greedy pass).
bool retime_sequence(const AlspInstance& inst, const std::vector<int>& seq,
                     std::vector<double>& times_out) {
    const auto q = seq.size();
    if (q == 0) return true;

    std::vector<ConvexPl> funcs;
    funcs.reserve(q);
    funcs.push_back(window_cost(inst.aircraft[static_cast<std::size_t>(seq[0])]));
    for (std::size_t k = 1; k < q; ++k) {
        const auto& a = inst.aircraft[static_cast<std::size_t>(seq[k])];
        const double s = inst.sep[static_cast<std::size_t>(seq[k - 1])][static_cast<std::size_t>(seq[k])];
        const ConvexPl reach = funcs.back().running_min();

        std::vector<double> xs{a.earliest, a.latest};
        if (a.earliest < a.target && a.target < a.latest) xs.push_back(a.target);
        for (const auto& p : reach.pts) {
            const double shifted = p.x + s;
            if (shifted > a.earliest && shifted < a.latest) xs.push_back(shifted);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

        ConvexPl next;
        for (double x : xs) {
            // the running min stays flat right of its last kink
            const double reach_v = reach.value(std::min(x - s, reach.hi()));
            if (reach_v < kInf) next.pts.push_back({x, reach_v + deviation_cost(a, x)});
        }
        if (next.pts.empty()) return false;
        funcs.push_back(std::move(next));
    }

    std::vector<double> xs(q);
    xs[q - 1] = funcs[q - 1].largest_argmin();
    for (std::size_t k = q - 1; k-- > 0;) {
        const double s = inst.sep[static_cast<std::size_t>(seq[k])][static_cast<std::size_t>(seq[k + 1])];
        xs[k] = funcs[k].largest_argmin(xs[k + 1] - s);
    }
    for (std::size_t k = 0; k < q; ++k)
        times_out[static_cast<std::size_t>(seq[k])] = xs[k];
    return true;
}

bool all_pairs_separated(const AlspInstance& inst, const std::vector<int>& seq,
                         const std::vector<double>& times) {
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b) {
            const int i = seq[a];
            const int j = seq[b];
            if (times[static_cast<std::size_t>(j)] + 1e-9 <
                times[static_cast<std::size_t>(i)] + inst.sep[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                return false;
        }
    return true;
}

}  // namespace

LandingSchedule alsp_decode(const AlspInstance& inst, const Perm& perm) {
    const int n = inst.size();
    require(perm.size() == static_cast<std::size_t>(n) && is_permutation(perm),
            "alsp_decode: invalid permutation");

    LandingSchedule sched;
    sched.times.assign(static_cast<std::size_t>(n), 0.0);
    sched.runway_of.assign(static_cast<std::size_t>(n), 0);
    sched.violated.assign(static_cast<std::size_t>(n), 0);

    std::vector<std::vector<int>> runway_seq(static_cast<std::size_t>(inst.runways));

    for (int ai : perm) {
        const auto& a = inst.aircraft[static_cast<std::size_t>(ai)];
        int best_runway = 0;
        double best_time = kInf;
        for (int r = 0; r < inst.runways; ++r) {
            double t0 = a.earliest;
            for (int prev : runway_seq[static_cast<std::size_t>(r)])
                t0 = std::max(t0, sched.times[static_cast<std::size_t>(prev)] +
                                      inst.sep[static_cast<std::size_t>(prev)][static_cast<std::size_t>(ai)]);
            if (t0 < best_time) {
                best_time = t0;
                best_runway = r;
            }
        }
        double x = best_time;
        if (x < a.target) x = std::min(a.target, a.latest);
        if (x > a.latest) {
            x = a.latest;
            sched.violated[static_cast<std::size_t>(ai)] = 1;
            sched.feasible = false;
        }
        sched.times[static_cast<std::size_t>(ai)] = x;
        sched.runway_of[static_cast<std::size_t>(ai)] = best_runway;
        runway_seq[static_cast<std::size_t>(best_runway)].push_back(ai);
    }

    if (sched.feasible) {
        std::vector<double> retimed = sched.times;
        bool ok = true;
        for (const auto& seq : runway_seq)
            if (!retime_sequence(inst, seq, retimed)) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& seq : runway_seq)
                if (!all_pairs_separated(inst, seq, retimed)) {
                    ok = false;  // separation matrix violates the triangle rule
                    break;
                }
        if (ok) sched.times = std::move(retimed);
    }

    sched.cost = alsp_cost(inst, sched);
    return sched;
}

double alsp_cost(const AlspInstance& inst, const LandingSchedule& sched) {
    const int n = inst.size();
    require(sched.times.size() == static_cast<std::size_t>(n), "alsp_cost: schedule length mismatch");
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        total += deviation_cost(inst.aircraft[static_cast<std::size_t>(i)], sched.times[static_cast<std::size_t>(i)]);
    for (auto v : sched.violated)
        if (v) total += kAlspBigM;
    return total;
}

// ---------------------------------------------------------------------------
// RH panel
// ---------------------------------------------------------------------------

void validate(const RhPanel& panel) {
    require(panel.markers >= 2, "rh: need at least two markers");
    require(panel.hybrids >= 1, "rh: need at least one hybrid");
    require(panel.cells.size() == static_cast<std::size_t>(panel.markers), "rh: cell row count mismatch");
    for (const auto& row : panel.cells) {
        require(row.size() == static_cast<std::size_t>(panel.hybrids), "rh: ragged cell rows");
        bool typed = false;
        for (auto c : row)
            if (c != RhCell::unknown) typed = true;
        require(typed, "rh: marker with no typed entries");
    }
    if (!panel.names.empty())
        require(panel.names.size() == static_cast<std::size_t>(panel.markers), "rh: name count mismatch");
}

long rh_breaks(const RhPanel& panel, const Perm& perm) {
    require(perm.size() == static_cast<std::size_t>(panel.markers) && is_permutation(perm),
            "rh_breaks: invalid permutation");
    long breaks = 0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
        const auto& a = panel.cells[static_cast<std::size_t>(perm[i])];
        const auto& b = panel.cells[static_cast<std::size_t>(perm[i + 1])];
        for (int h = 0; h < panel.hybrids; ++h) {
            const RhCell ca = a[static_cast<std::size_t>(h)];
            const RhCell cb = b[static_cast<std::size_t>(h)];
            if ((ca == RhCell::present && cb == RhCell::absent) ||
                (ca == RhCell::absent && cb == RhCell::present))
                ++breaks;
        }
    }
    return breaks;
}

double rh_mass(const RhPanel& panel, const Perm& perm) {
    return static_cast<double>(rh_breaks(panel, perm));
}

// ---------------------------------------------------------------------------
// Group instance
// ---------------------------------------------------------------------------

ProblemKind kind_of(const GroupInstance& g) {
    if (std::holds_alternative<TspInstance>(g)) return ProblemKind::tsp;
    if (std::holds_alternative<AlspInstance>(g)) return ProblemKind::alsp;
    return ProblemKind::rh;
}

const char* kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::tsp: return "tsp";
        case ProblemKind::alsp: return "alsp";
        case ProblemKind::rh: return "rh";
    }
    return "?";
}

int atoms_of(const GroupInstance& g) {
    return std::visit(
        [](const auto& inst) -> int {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, TspInstance>) return inst.n;
            else if constexpr (std::is_same_v<T, AlspInstance>) return inst.size();
            else return inst.markers;
        },
        g);
}

double mass_of(const GroupInstance& g, const Perm& perm) {
    return std::visit(
        [&](const auto& inst) -> double {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, TspInstance>) return tsp_cost(inst, perm);
            else if constexpr (std::is_same_v<T, AlspInstance>) return alsp_decode(inst, perm).cost;
            else return rh_mass(inst, perm);
        },
        g);
}

}  // namespace acr
