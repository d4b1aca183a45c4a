#pragma once

#include <vector>

#include "acr/instance_io.hpp"
#include "acr/reactor.hpp"

namespace acr {

// Repeated-run experiment: one universe per repeat, seeded seed, seed+1, ...
// so each repeat is independently reproducible. Aggregates mean and standard
// deviation (n-1 denominator) of the per-group best masses.
struct BatchSpec {
    std::vector<GroupSpec> groups;
    ReactorConfig config;
    int repeats = 1;
};

ReportDocument run_batch(const BatchSpec&);

}  // namespace acr
