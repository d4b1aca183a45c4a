// acr: artificial chemical reactor solver for permutation problems.
// Subcommands: solve (run the reactor and report), oracle-check (compare a
// run against exhaustive ground truth), gen (emit synthetic instances).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acr/generators.hpp"
#include "acr/instance_io.hpp"
#include "acr/oracle.hpp"
#include "acr/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> tsp_paths;
    std::vector<std::string> alsp_paths;
    std::vector<std::string> rh_paths;
    int runways = 0;   // 0: not set on the command line
    int repeats = 0;   // 0: not set
    long seed = -1;    // -1: not set
    std::string format = "table";
    std::string out_path;
    int capacity = 0;
    int reactions = 0;
    long max_epochs = -1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << text;
}

std::string stem_of(const std::string& path) {
    const auto stem = std::filesystem::path(path).stem().string();
    return stem.empty() ? path : stem;
}

// merge config-file settings with command-line overrides and load instances
acr::BatchSpec build_batch(const CommonOptions& opt) {
    acr::RunSettings rs;
    if (!opt.config_path.empty()) rs = acr::parse_config(read_file(opt.config_path));

    for (const auto& p : opt.tsp_paths) rs.tsp_paths.push_back(p);
    for (const auto& p : opt.alsp_paths) rs.alsp_paths.push_back(p);
    for (const auto& p : opt.rh_paths) rs.rh_paths.push_back(p);
    if (opt.runways > 0) rs.runways = opt.runways;
    if (opt.repeats > 0) rs.repeats = opt.repeats;
    if (opt.seed >= 0) rs.reactor.seed = static_cast<std::uint64_t>(opt.seed);
    if (opt.capacity > 0) rs.capacity = opt.capacity;
    if (opt.reactions > 0) rs.reactor.reactions_per_epoch = opt.reactions;
    if (opt.max_epochs >= 0) rs.reactor.max_epochs = static_cast<std::uint64_t>(opt.max_epochs);

    acr::BatchSpec batch;
    batch.config = rs.reactor;
    batch.repeats = rs.repeats;
    for (const auto& p : rs.tsp_paths) {
        auto inst = acr::parse_tsplib(read_file(p));
        const std::string label = inst.name.empty() ? stem_of(p) : inst.name;
        batch.groups.push_back({std::move(inst), rs.capacity_for(acr::ProblemKind::tsp), label});
    }
    for (const auto& p : rs.alsp_paths) {
        auto inst = acr::parse_airland(read_file(p), rs.runways);
        batch.groups.push_back({std::move(inst), rs.capacity_for(acr::ProblemKind::alsp), stem_of(p)});
    }
    for (const auto& p : rs.rh_paths) {
        auto inst = acr::parse_rh_panel(read_file(p));
        batch.groups.push_back({std::move(inst), rs.capacity_for(acr::ProblemKind::rh), stem_of(p)});
    }
    return batch;
}

int cmd_solve(const CommonOptions& opt) {
    acr::BatchSpec batch = build_batch(opt);
    if (batch.groups.empty()) {
        std::cerr << "error: no instances given (use --tsp/--alsp/--rh or a config file)\n";
        return kExitUsage;
    }
    const acr::ReportDocument doc = acr::run_batch(batch);
    const auto format = opt.format == "machine" ? acr::ReportFormat::machine : acr::ReportFormat::table;
    write_output(opt.out_path, acr::write_report(doc, format));
    return kExitOk;
}

int cmd_oracle_check(const CommonOptions& opt) {
    acr::BatchSpec batch = build_batch(opt);
    if (batch.groups.empty()) {
        std::cerr << "error: no instances given (use --tsp/--alsp/--rh or a config file)\n";
        return kExitUsage;
    }

    // refuse before spending reactor time if any instance exceeds the guards
    for (const auto& g : batch.groups) {
        const int atoms = acr::atoms_of(g.instance);
        const bool alsp = acr::kind_of(g.instance) == acr::ProblemKind::alsp;
        if ((alsp && atoms > 8) || (!alsp && atoms > 10)) {
            std::cerr << "error: instance '" << g.label << "' is too large for the oracle ("
                      << atoms << " atoms)\n";
            return kExitParse;
        }
        if (alsp && std::get<acr::AlspInstance>(g.instance).runways > 2) {
            std::cerr << "error: instance '" << g.label << "' has too many runways for the oracle\n";
            return kExitParse;
        }
    }

    const acr::ReportDocument doc = acr::run_batch(batch);

    std::ostringstream os;
    bool sane = true;
    for (std::size_t i = 0; i < batch.groups.size(); ++i) {
        const auto& g = batch.groups[i];
        acr::OracleResult oracle;
        switch (acr::kind_of(g.instance)) {
            case acr::ProblemKind::tsp: {
                const auto& inst = std::get<acr::TspInstance>(g.instance);
                oracle = acr::brute_force_min([&](const acr::Perm& p) { return acr::tsp_cost(inst, p); },
                                              inst.n, /*rotation_invariant=*/true);
                break;
            }
            case acr::ProblemKind::alsp:
                oracle = acr::alsp_exact_small(std::get<acr::AlspInstance>(g.instance));
                break;
            case acr::ProblemKind::rh: {
                const auto& inst = std::get<acr::RhPanel>(g.instance);
                oracle = acr::brute_force_min([&](const acr::Perm& p) { return acr::rh_mass(inst, p); },
                                              inst.markers, /*rotation_invariant=*/false);
                break;
            }
        }
        const double acr_best = doc.groups[i].best_mass;
        const double gap = acr_best - oracle.best_mass;
        os << g.label << ": acr=" << acr_best << " oracle=" << oracle.best_mass << " gap=" << gap
           << " (" << oracle.enumerated << " permutations)\n";
        if (gap < -1e-9) sane = false;
    }
    os << (sane ? "ok: no reported mass beats the oracle\n"
                : "FAILED: a reported mass beats the exhaustive oracle\n");
    write_output(opt.out_path, os.str());
    return sane ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"artificial chemical reactor for permutation problems"};
    app.require_subcommand(1);

    CommonOptions opt;
    const auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--config", opt.config_path, "run configuration file");
        cmd->add_option("--tsp", opt.tsp_paths, "TSPLIB instance path (repeatable)");
        cmd->add_option("--alsp", opt.alsp_paths, "airland instance path (repeatable)");
        cmd->add_option("--rh", opt.rh_paths, "RH panel path (repeatable)");
        cmd->add_option("--runways", opt.runways, "runway count for airland instances");
        cmd->add_option("--repeats", opt.repeats, "independent repeats");
        cmd->add_option("--seed", opt.seed, "base seed (repeat r uses seed+r)");
        cmd->add_option("--capacity", opt.capacity, "molecules per problem group");
        cmd->add_option("--reactions", opt.reactions, "collision events per epoch");
        cmd->add_option("--max-epochs", opt.max_epochs, "epoch budget per run");
        cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
        if (with_format)
            cmd->add_option("--format", opt.format, "report format")
                ->check(CLI::IsMember({"table", "machine"}));
    };

    auto* solve = app.add_subcommand("solve", "run the reactor and write a report");
    add_common(solve, true);

    auto* oracle = app.add_subcommand("oracle-check", "compare a run against exhaustive oracles");
    add_common(oracle, false);

    auto* gen = app.add_subcommand("gen", "emit a synthetic instance");
    gen->require_subcommand(1);
    acr::TspRandomParams tsp_params;
    acr::RhPlantedParams rh_params;
    acr::AlspRandomParams alsp_params;
    std::string gen_out;

    auto* gen_tsp = gen->add_subcommand("tsp-random", "uniform points in the unit square (EUC_2D)");
    gen_tsp->add_option("--n", tsp_params.n, "city count")->required();
    gen_tsp->add_option("--seed", tsp_params.seed, "generator seed");
    gen_tsp->add_option("--scale", tsp_params.scale, "coordinate scale before integer rounding");
    gen_tsp->add_option("--out", gen_out, "output path (default: stdout)");

    auto* gen_rh = gen->add_subcommand("rh-planted", "panel with a planted marker order");
    gen_rh->add_option("--m", rh_params.markers, "marker count")->required();
    gen_rh->add_option("--k", rh_params.hybrids, "hybrid count")->required();
    gen_rh->add_option("--noise", rh_params.noise, "per-cell flip probability");
    gen_rh->add_option("--seed", rh_params.seed, "generator seed");
    gen_rh->add_option("--out", gen_out, "output path (default: stdout)");

    auto* gen_alsp = gen->add_subcommand("alsp-random", "random airland instance");
    gen_alsp->add_option("--n", alsp_params.n, "aircraft count")->required();
    gen_alsp->add_option("--seed", alsp_params.seed, "generator seed");
    gen_alsp->add_option("--out", gen_out, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (oracle->parsed()) return cmd_oracle_check(opt);
        if (gen_tsp->parsed()) {
            write_output(gen_out, acr::gen_tsp_random(tsp_params));
            return kExitOk;
        }
        if (gen_rh->parsed()) {
            write_output(gen_out, acr::gen_rh_planted(rh_params));
            return kExitOk;
        }
        if (gen_alsp->parsed()) {
            write_output(gen_out, acr::gen_alsp_random(alsp_params));
            return kExitOk;
        }
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const acr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const acr::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
