#pragma once

#include <vector>

#include "frontier/geometry.h"
#include "frontier/opcount.h"

namespace frontier {

enum class RegionClass {
    negative,   // some other region's bottom-left dominates this top-right
    positive,   // not negative, and no other region's halfslab reaches it
    potential,  // everything else
};

// O(n log n) classification of every region. Index-aligned with the input.
std::vector<RegionClass> classify_regions(const std::vector<Region>& regions,
                                          OpCounter* oc = nullptr);

// O(n^2) reference classifier used as a cross-check in tests.
std::vector<RegionClass> classify_regions_bruteforce(const std::vector<Region>& regions);

// Result of dropping negative regions and clipping the rest against the
// guaranteed boundary. Index 0 and index size()-1 are synthetic sentinel
// regions; interior indices 1..interior_count() are sorted by bottom-left
// x ascending (ties: bottom-left y descending).
struct TruncatedSet {
    std::vector<Region> regions;
    std::vector<bool> flagged;  // interior region was clipped
    std::vector<int> origin;    // original instance index, -1 for sentinels
    Staircase boundary;         // guaranteed boundary of the surviving set

    int interior_count() const { return static_cast<int>(regions.size()) - 2; }
    bool is_sentinel(int i) const {
        return i == 0 || i + 1 == static_cast<int>(regions.size());
    }
};

// Drops negatives, clips flagged regions to land on the guaranteed
// boundary, re-sorts, and wraps the result with sentinels.
// Throws EmptyAfterTruncation if the input has no regions.
TruncatedSet truncate_regions(const std::vector<Region>& regions,
                              OpCounter* oc = nullptr);

}  // namespace frontier
