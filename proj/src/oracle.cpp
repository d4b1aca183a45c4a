#include "acr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace acr {

OracleResult brute_force_min(const std::function<double(const Perm&)>& mass_fn, int n,
                             bool rotation_invariant) {
    if (n < 1) throw std::invalid_argument("brute_force_min: n must be positive");
    if (n > 10) throw std::invalid_argument("brute_force_min: refused for n > 10");

    Perm perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;

    OracleResult result;
    result.best_mass = std::numeric_limits<double>::infinity();

    // with a fixed first element only the tail is permuted; next_permutation
    // walks lexicographic order so the first optimum seen wins ties
    const auto first = perm.begin() + (rotation_invariant ? 1 : 0);
    do {
        const double m = mass_fn(perm);
        ++result.enumerated;
        if (m < result.best_mass) {
            result.best_mass = m;
            result.best_perm = perm;
        }
    } while (std::next_permutation(first, perm.end()));

    return result;
}

Perm nn_tour(const TspInstance& inst, int start) {
    if (start < 0 || start >= inst.n) throw std::invalid_argument("nn_tour: start city out of range");
    Perm tour;
    tour.reserve(static_cast<std::size_t>(inst.n));
    std::vector<char> visited(static_cast<std::size_t>(inst.n), 0);
    int current = start;
    tour.push_back(current);
    visited[static_cast<std::size_t>(current)] = 1;
    for (int step = 1; step < inst.n; ++step) {
        int nearest = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < inst.n; ++j) {
            if (visited[static_cast<std::size_t>(j)]) continue;
            const double d = inst.costs[static_cast<std::size_t>(current)][static_cast<std::size_t>(j)];
            if (d < best) {
                best = d;
                nearest = j;
            }
        }
        visited[static_cast<std::size_t>(nearest)] = 1;
        tour.push_back(nearest);
        current = nearest;
    }
    return tour;
}

OracleResult alsp_exact_small(const AlspInstance& inst) {
    const int n = inst.size();
    if (n > 8) throw std::invalid_argument("alsp_exact_small: refused for more than 8 aircraft");
    if (inst.runways > 2) throw std::invalid_argument("alsp_exact_small: refused for more than 2 runways");
    return brute_force_min([&](const Perm& order) { return alsp_decode(inst, order).cost; }, n,
                           /*rotation_invariant=*/false);
}

}  // namespace acr
