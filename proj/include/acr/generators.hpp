#pragma once

#include <cstdint>
#include <string>

namespace acr {

// All generators are seed-deterministic: identical parameters produce
// byte-identical instance text.

struct TspRandomParams {
    int n = 50;
    std::uint64_t seed = 1;
    double scale = 1000.0;  // unit-square coordinates scaled before integer rounding
};

// EUC_2D instance over uniform points in the unit square; the scale factor is
// recorded in the COMMENT line so reports can divide it back out
std::string gen_tsp_random(const TspRandomParams&);

struct RhPlantedParams {
    int markers = 10;
    int hybrids = 20;
    double noise = 0.0;  // per-cell flip probability
    std::uint64_t seed = 1;
};

// Panel whose true order 0..m-1 changes exactly one hybrid per adjacency
// (distinct flip column per step, so the planted order is the unique optimum
// up to reversal with total breaks m-1). Requires hybrids >= markers - 1.
std::string gen_rh_planted(const RhPlantedParams&);

struct AlspRandomParams {
    int n = 8;
    std::uint64_t seed = 1;
};

// airland-format instance with integer times, valid windows and separations
std::string gen_alsp_random(const AlspRandomParams&);

}  // namespace acr
