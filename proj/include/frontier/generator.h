#pragma once

#include <cstdint>
#include <string>

#include "frontier/geometry.h"

namespace frontier {

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int n = 8;
    std::string mode = "split";          // split | staircase | gadget-figs
    std::string point_mode = "uniform";  // corners | uniform | adversarial-bl
};

// Deterministic instance generator. Output always passes validate_instance;
// throws GenerationRetryExceeded if repeated reseeded attempts keep failing
// validation, and std::invalid_argument for unknown mode names.
Instance generate(const GeneratorConfig& cfg);

}  // namespace frontier
