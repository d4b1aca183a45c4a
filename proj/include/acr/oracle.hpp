#pragma once

#include <cstdint>
#include <functional>

#include "acr/problems.hpp"

namespace acr {

struct OracleResult {
    double best_mass = 0.0;
    Perm best_perm;
    std::uint64_t enumerated = 0;  // permutations examined
};

// Exhaustive minimum over all n! permutations (n <= 10). When the caller
// asserts rotation invariance the first element is fixed at 0, cutting the
// enumeration to (n-1)!. Ties resolve to the lexicographically smallest
// permutation.
OracleResult brute_force_min(const std::function<double(const Perm&)>& mass_fn, int n,
                             bool rotation_invariant = false);

// nearest-neighbour tour construction, ties to the lowest city index
Perm nn_tour(const TspInstance&, int start);

// Exhaustive minimum of alsp_cost(alsp_decode(order)) over every landing
// order (|P| <= 8, runways <= 2). Optimal within the decoder's schedule
// family, not over arbitrary landing times.
OracleResult alsp_exact_small(const AlspInstance&);

}  // namespace acr
