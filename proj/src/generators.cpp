#include "acr/generators.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "acr/random.hpp"

namespace acr {

std::string gen_tsp_random(const TspRandomParams& p) {
    if (p.n < 2) throw std::invalid_argument("gen_tsp_random: need at least 2 cities");
    if (p.scale <= 0.0) throw std::invalid_argument("gen_tsp_random: scale must be positive");
    Rng rng(p.seed);
    std::ostringstream os;
    os << "NAME : random" << p.n << "-" << p.seed << "\n";
    os << "TYPE : TSP\n";
    os << "COMMENT : unit square, scale " << static_cast<long>(p.scale) << "\n";
    os << "DIMENSION : " << p.n << "\n";
    os << "EDGE_WEIGHT_TYPE : EUC_2D\n";
    os << "NODE_COORD_SECTION\n";
    char buf[96];
    for (int i = 0; i < p.n; ++i) {
        const double x = rng.unit() * p.scale;
        const double y = rng.unit() * p.scale;
        std::snprintf(buf, sizeof buf, "%d %.6f %.6f\n", i + 1, x, y);
        os << buf;
    }
    os << "EOF\n";
    return os.str();
}

std::string gen_rh_planted(const RhPlantedParams& p) {
    if (p.markers < 2) throw std::invalid_argument("gen_rh_planted: need at least 2 markers");
    if (p.hybrids < p.markers - 1)
        throw std::invalid_argument("gen_rh_planted: need at least markers-1 hybrids");
    if (p.noise < 0.0 || p.noise > 1.0)
        throw std::invalid_argument("gen_rh_planted: noise must lie in [0, 1]");

    Rng rng(p.seed);
    std::vector<std::vector<char>> rows;
    std::vector<char> current(static_cast<std::size_t>(p.hybrids));
    for (auto& c : current) c = rng.unit() < 0.5 ? '0' : '1';
    rows.push_back(current);

    // one fresh flip column per adjacency keeps pairwise distances exact
    const auto flip_order = rng.permutation(p.hybrids);
    for (int step = 1; step < p.markers; ++step) {
        const auto col = static_cast<std::size_t>(flip_order[static_cast<std::size_t>(step - 1)]);
        current[col] = current[col] == '0' ? '1' : '0';
        rows.push_back(current);
    }

    for (auto& row : rows)
        for (auto& c : row)
            if (rng.unit() < p.noise) c = c == '0' ? '1' : '0';

    std::ostringstream os;
    for (int i = 0; i < p.markers; ++i) {
        os << 'M' << i << ' ';
        for (char c : rows[static_cast<std::size_t>(i)]) os << c;
        os << '\n';
    }
    return os.str();
}

std::string gen_alsp_random(const AlspRandomParams& p) {
    if (p.n < 1) throw std::invalid_argument("gen_alsp_random: need at least 1 aircraft");
    Rng rng(p.seed);
    std::ostringstream os;
    os << p.n << " 10\n";

    std::vector<long> targets(static_cast<std::size_t>(p.n));
    for (auto& t : targets) t = 100 + static_cast<long>(rng.below(static_cast<std::uint64_t>(25 * p.n)));

    char buf[160];
    for (int i = 0; i < p.n; ++i) {
        const long t = targets[static_cast<std::size_t>(i)];
        const long e = t - 10 - static_cast<long>(rng.below(40));
        const long l = t + 90 + static_cast<long>(rng.below(200));
        const long app = std::max(0L, e - 30 - static_cast<long>(rng.below(60)));
        const double g = 1.0 + static_cast<double>(rng.below(2000)) / 100.0;
        const double h = 1.0 + static_cast<double>(rng.below(2000)) / 100.0;
        std::snprintf(buf, sizeof buf, "%ld %ld %ld %ld %.2f %.2f\n", app, e, t, l, g, h);
        os << buf;
        for (int j = 0; j < p.n; ++j) {
            if (i == j)
                os << (j ? " " : "") << "99999";
            else
                os << (j ? " " : "") << (3 + rng.below(10));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace acr
