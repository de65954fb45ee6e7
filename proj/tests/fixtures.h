#pragma once

// Shared hand-built instances used across the suites. Each instance keeps
// regions and points aligned by position; points always lie inside their
// region so validate_instance() accepts every fixture.

#include <string>
#include <vector>

#include "frontier/geometry.h"

namespace fixtures {

inline frontier::Region rect(std::string id, double xmin, double ymin, double xmax,
                             double ymax) {
    frontier::Region r;
    r.id = std::move(id);
    r.xmin = xmin;
    r.ymin = ymin;
    r.xmax = xmax;
    r.ymax = ymax;
    r.kind = frontier::RegionKind::rectangle;
    return r;
}

// Single region; its point is trivially the whole front.
inline frontier::Instance single() {
    frontier::Instance inst;
    inst.regions = {rect("A", 0, 0, 1, 1)};
    inst.points = {{0.5, 0.5}};
    return inst;
}

// Two regions where one dominates the other outright: A is negative, B's
// point is the entire front without any retrieval.
inline frontier::Instance dominated_pair() {
    frontier::Instance inst;
    inst.regions = {rect("A", 0, 0, 1, 1), rect("B", 2, 2, 3, 3)};
    inst.points = {{0.5, 0.5}, {2.5, 2.5}};
    return inst;
}

// Three regions with one partial truncation (B is clipped against C's
// guaranteed point) and a two-point front.
inline frontier::Instance clipped_trio() {
    frontier::Instance inst;
    inst.regions = {rect("A", 0, 4, 2, 6), rect("B", 3, 0, 4, 6),
                    rect("C", 5, 1.5, 6, 3)};
    inst.points = {{1, 4.5}, {3.5, 5}, {5.5, 2.9}};
    return inst;
}

// Tall spanner D forces {A,B,C} into one compound; with pD at the bottom the
// whole staircase A,B,C survives as a run plus D.
inline frontier::Instance spanner_low() {
    frontier::Instance inst;
    inst.regions = {rect("A", 0, 8, 1, 9), rect("B", 2, 6, 3, 7),
                    rect("C", 4, 4, 5, 5), rect("D", 6, 0, 7, 9)};
    inst.points = {{0.5, 8.5}, {2.5, 6.5}, {4.5, 4.5}, {6.5, 0.5}};
    return inst;
}

// Same layout with pD near the top: D's point dominates B and C, so only A
// and D can appear on the front.
inline frontier::Instance spanner_high() {
    frontier::Instance inst = spanner_low();
    inst.points[3] = {6.5, 8.6};
    return inst;
}

// A perfect descending staircase: every region is guaranteed on the front and
// no region sees any other, so reconstruction is free.
inline frontier::Instance staircase4() {
    frontier::Instance inst;
    inst.regions = {rect("A", 0, 6, 1, 7), rect("B", 2, 4, 3, 5),
                    rect("C", 4, 2, 5, 3), rect("D", 6, 0, 7, 1)};
    inst.points = {{0.5, 6.5}, {2.5, 4.5}, {4.5, 2.5}, {6.5, 0.5}};
    return inst;
}

}  // namespace fixtures
