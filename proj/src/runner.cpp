#include "acr/runner.hpp"

#include <cmath>
#include <stdexcept>

namespace acr {

ReportDocument run_batch(const BatchSpec& spec) {
    if (spec.repeats < 1) throw ConfigError("batch needs at least one repeat");
    if (spec.groups.empty()) throw ConfigError("batch needs at least one group");

    ReportDocument doc;
    doc.seed = spec.config.seed;
    doc.repeats = spec.repeats;

    const std::size_t n_groups = spec.groups.size();
    std::vector<std::vector<double>> bests(n_groups);
    std::vector<RunReport> reports;
    reports.reserve(static_cast<std::size_t>(spec.repeats));

    for (int r = 0; r < spec.repeats; ++r) {
        ReactorConfig cfg = spec.config;
        cfg.seed = spec.config.seed + static_cast<std::uint64_t>(r);
        Universe universe(spec.groups, cfg);
        RunReport report = universe.run_until_done();
        for (std::size_t g = 0; g < n_groups; ++g)
            bests[g].push_back(report.groups[g].best_mass);
        reports.push_back(std::move(report));
    }

    for (std::size_t g = 0; g < n_groups; ++g) {
        GroupReport gr;
        const auto& values = bests[g];

        int best_repeat = 0;
        for (int r = 1; r < spec.repeats; ++r)
            if (values[static_cast<std::size_t>(r)] < values[static_cast<std::size_t>(best_repeat)])
                best_repeat = r;
        const auto& winner = reports[static_cast<std::size_t>(best_repeat)].groups[g];

        gr.label = winner.label;
        gr.kind = winner.kind;
        gr.atoms = winner.atoms;
        gr.best_mass = winner.best_mass;
        gr.best_perm = winner.best_perm;
        gr.saturation_epoch = winner.saturation_epoch;

        double sum = 0.0;
        for (double v : values) sum += v;
        gr.mean_best = sum / static_cast<double>(spec.repeats);
        if (spec.repeats >= 2) {
            double ss = 0.0;
            for (double v : values) ss += (v - gr.mean_best) * (v - gr.mean_best);
            gr.stddev_best = std::sqrt(ss / static_cast<double>(spec.repeats - 1));
        }

        switch (gr.kind) {
            case ProblemKind::tsp:
                gr.display_scale = std::get<TspInstance>(spec.groups[g].instance).display_scale;
                break;
            case ProblemKind::rh:
                gr.display_scale = static_cast<double>(gr.atoms);
                gr.per_marker_avg = gr.best_mass / static_cast<double>(gr.atoms);
                break;
            case ProblemKind::alsp:
                break;
        }

        for (const auto& rep : reports) {
            gr.r1 += rep.groups[g].same_reactions;
            gr.r2 += rep.groups[g].cross_reactions;
            gr.r3 += rep.groups[g].wall_collisions;
        }
        doc.groups.push_back(std::move(gr));
    }
    return doc;
}

}  // namespace acr
