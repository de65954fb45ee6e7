#pragma once

#include <vector>

#include "frontier/geometry.h"
#include "frontier/opcount.h"

namespace frontier {

// Dependency arrows over an index-ordered region list (ascending bottom-left
// x, ties descending bottom-left y). A vertical arrow i->j (j > i) means j is
// vertically visible below i; a horizontal arrow i->j (j < i) means j is
// horizontally visible to the left of i. Regions that are degenerate along
// the shared axis (points, sentinels) neither see, are seen, nor block.
struct DependencyGraph {
    // V[i]: i itself first, then vertical targets in ascending index order.
    // H[j]: horizontal targets in ascending index order, then j itself last.
    std::vector<std::vector<int>> V, H;

    // v_next[i]: first index whose xmin exceeds xmax_i (-1 if none).
    // h_prev[j]: last index whose ymin exceeds ymax_j (-1 if none).
    std::vector<int> v_next, h_prev;

    // back_ref[i]: highest j with a vertical arrow j->i (-1 if none).
    // fwd_ref[i]: lowest j with a horizontal arrow j->i (-1 if none).
    std::vector<int> back_ref, fwd_ref;

    bool is_source(int i) const { return back_ref[i] < 0 && fwd_ref[i] < 0; }
    bool is_sink(int i) const { return V[i].size() == 1 && H[i].size() == 1; }
};

// O(n log n) plane-sweep construction (adjacency along a moving line).
DependencyGraph build_visibility(const std::vector<Region>& regions,
                                 OpCounter* oc = nullptr);

// O(n) single-pair check: positive-measure shared-axis overlap survives
// after subtracting the projections of regions straddling the open gap.
bool bruteforce_visible(const std::vector<Region>& regions, int a, int b,
                        SlabOrientation orientation);

// O(n^3) reference construction from bruteforce_visible.
DependencyGraph build_visibility_bruteforce(const std::vector<Region>& regions);

}  // namespace frontier
