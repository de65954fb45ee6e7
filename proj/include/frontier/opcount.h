#pragma once

#include <cstdint>

namespace frontier {

// Cheap instrumentation hook for preprocessing cost measurements. Loops,
// comparator invocations, and search probes report through this so that
// scaling can be checked against the intended asymptotic budget.
struct OpCounter {
    std::uint64_t ops = 0;
    void add(std::uint64_t k = 1) { ops += k; }
};

inline void bump(OpCounter* oc, std::uint64_t k = 1) {
    if (oc) oc->ops += k;
}

}  // namespace frontier
