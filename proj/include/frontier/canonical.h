#pragma once

#include <utility>
#include <vector>

#include "frontier/truncate.h"
#include "frontier/visibility.h"

namespace frontier {

// Interior regions that are both a source and a sink of the dependency
// graph split the problem: their point is unconditionally on the front and
// no dependency crosses them. Intervals between them solve independently.
struct CullResult {
    std::vector<int> separators;                // truncated indices, ascending
    std::vector<std::pair<int, int>> components;  // anchored truncated [lo,hi]
};

CullResult cull(const TruncatedSet& ts, const DependencyGraph& g);

// Canonical region list: inside each component, every maximal run of >= 2
// consecutive sinks collapses into one compound region (the bounding box of
// its members). Sentinels and separators are carried through unchanged.
struct CanonicalSet {
    std::vector<Region> regions;
    std::vector<std::vector<int>> members;  // truncated indices; empty if plain
    std::vector<int> trunc_of;              // truncated index, -1 for compounds
    std::vector<int> canon_of;              // truncated index -> canonical index
    std::vector<int> separators;            // canonical indices, ascending
    std::vector<std::pair<int, int>> components;  // anchored canonical [lo,hi]

    bool is_compound(int c) const { return !members[c].empty(); }
    int size() const { return static_cast<int>(regions.size()); }
};

CanonicalSet build_canonical(const TruncatedSet& ts, const DependencyGraph& g,
                             OpCounter* oc = nullptr);

}  // namespace frontier
