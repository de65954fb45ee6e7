#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace frontier {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

enum class RegionKind { rectangle, point, sentinel };

/// Closed axis-aligned uncertainty rectangle. Degenerate rectangles
/// (xmin == xmax and ymin == ymax) are point regions; sentinels are
/// synthetic point regions added as boundary anchors.
struct Region {
    std::string id;
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;
    RegionKind kind = RegionKind::rectangle;

    Point bottom_left() const { return {xmin, ymin}; }
    Point top_right() const { return {xmax, ymax}; }
    bool is_degenerate() const { return xmin == xmax && ymin == ymax; }
    bool contains(const Point& p) const {
        return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
    }
};

/// Problem input: regions plus the hidden true points, aligned by position.
struct Instance {
    std::vector<Region> regions;
    std::vector<Point> points;
};

/// Vertex sequence with strictly increasing x and strictly decreasing y.
/// Represents the maximal elements of a planar point set.
struct Staircase {
    std::vector<Point> vertices;

    bool operator==(const Staircase& o) const { return vertices == o.vertices; }
    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
};

enum class SlabOrientation { horizontal, vertical };

// --- Dominance predicates ---

inline bool dominates(const Point& p, const Point& q) {
    return p.x >= q.x && p.y >= q.y;
}

inline bool dominates_region(const Point& p, const Region& r) {
    return p.x >= r.xmax && p.y >= r.ymax;
}

/// O(n^2) reference Pareto front, ordered by increasing x. This is the
/// trusted oracle every faster path is compared against.
Staircase pareto_front_bruteforce(const std::vector<Point>& points);

/// Pareto front of the bottom-left vertices of `regions`.
Staircase guaranteed_boundary(const std::vector<Region>& regions);

/// Halfslab intersection test. The horizontal halfslab of `source` is the
/// union of leftward halflines with apex in the source; `target` intersects
/// it iff it lies weakly left of the source and the y-intervals overlap with
/// positive measure. Vertical is symmetric (downward halflines).
bool halfslab_intersects(const Region& source, const Region& target,
                         SlabOrientation orientation);

// --- Instance validation ---

enum class ViolationKind { disjointness, containment, general_position };

struct Violation {
    ViolationKind kind;
    std::string id_a;
    std::string id_b;   // empty for containment violations
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks pairwise disjointness, point containment and general position.
/// General position rejects the coordinate coincidences the algorithms rely
/// on being absent: equal bottom-left coordinates across regions, facing
/// edge contacts (one region's xmax equal to another's xmin, same for y),
/// coordinate ties among points, and points sharing a coordinate with a
/// foreign region vertex.
ValidationReport validate_instance(const Instance& inst);

// --- Staircase helpers ---

/// Clips the boundary curve of the region dominated by `stair`'s vertices to
/// the closed rectangle r. Returns false if the clipped curve is
/// disconnected or a convex (top-right) vertex of the curve lies strictly
/// inside r.
bool staircase_clip_is_clean(const Staircase& stair, const Region& r);

/// True iff some vertex of `stair` dominates p.
bool staircase_dominates(const Staircase& stair, const Point& p);

}  // namespace frontier
