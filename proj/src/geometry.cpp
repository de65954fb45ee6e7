#include "frontier/geometry.h"

#include <algorithm>
#include <cassert>
#include <map>

namespace frontier {

Staircase pareto_front_bruteforce(const std::vector<Point>& points) {
    Staircase out;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < n && maximal; ++j) {
            if (i == j) continue;
            if (dominates(points[j], points[i]) && points[j] != points[i]) maximal = false;
        }
        if (maximal) out.vertices.push_back(points[i]);
    }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    return out;
}

Staircase guaranteed_boundary(const std::vector<Region>& regions) {
    std::vector<Point> bls;
    bls.reserve(regions.size());
    for (const Region& r : regions) bls.push_back(r.bottom_left());
    return pareto_front_bruteforce(bls);
}

bool halfslab_intersects(const Region& source, const Region& target,
                         SlabOrientation orientation) {
    if (orientation == SlabOrientation::horizontal) {
        const bool weakly_left = target.xmin <= source.xmax;
        const double lo = std::max(source.ymin, target.ymin);
        const double hi = std::min(source.ymax, target.ymax);
        return weakly_left && hi > lo;
    }
    const bool weakly_below = target.ymin <= source.ymax;
    const double lo = std::max(source.xmin, target.xmin);
    const double hi = std::min(source.xmax, target.xmax);
    return weakly_below && hi > lo;
}

namespace {

bool rects_intersect(const Region& a, const Region& b) {
    return a.xmin <= b.xmax && b.xmin <= a.xmax &&
           a.ymin <= b.ymax && b.ymin <= a.ymax;
}

void check_coordinate_pool(const Instance& inst, ValidationReport& report) {
    // One entry per coordinate value: owner position and whether the value
    // comes from a region's min side, max side, or a point.
    enum class Src { min_side, max_side, pt };
    struct Entry {
        double v;
        std::size_t owner;
        bool is_point;
        Src src;
    };
    const auto collect = [&](bool use_x) {
        std::vector<Entry> es;
        for (std::size_t i = 0; i < inst.regions.size(); ++i) {
            const Region& r = inst.regions[i];
            const double lo = use_x ? r.xmin : r.ymin;
            const double hi = use_x ? r.xmax : r.ymax;
            es.push_back({lo, i, false, Src::min_side});
            if (hi != lo) es.push_back({hi, i, false, Src::max_side});
        }
        for (std::size_t i = 0; i < inst.points.size(); ++i) {
            es.push_back({use_x ? inst.points[i].x : inst.points[i].y, i, true, Src::pt});
        }
        std::sort(es.begin(), es.end(),
                  [](const Entry& a, const Entry& b) { return a.v < b.v; });
        return es;
    };

    const auto flag = [&](const Entry& a, const Entry& b, const char* axis) {
        // Degenerate ties that matter:
        //  - two bottom-left coordinates equal (breaks index ordering),
        //  - a max side facing a min side (grazing contact),
        //  - two points sharing a coordinate,
        //  - a point sharing a coordinate with a foreign region vertex.
        const bool both_regions = !a.is_point && !b.is_point;
        bool bad = false;
        if (both_regions) {
            if (a.owner == b.owner) return;
            const bool min_min = a.src == Src::min_side && b.src == Src::min_side;
            const bool facing = (a.src == Src::max_side && b.src == Src::min_side) ||
                                (a.src == Src::min_side && b.src == Src::max_side);
            bad = min_min || facing;
        } else if (a.is_point && b.is_point) {
            bad = a.owner != b.owner;
        } else {
            const Entry& pt = a.is_point ? a : b;
            const Entry& rg = a.is_point ? b : a;
            bad = pt.owner != rg.owner;  // a point may touch its own region's sides
        }
        if (!bad) return;
        const auto name = [&](const Entry& e) {
            if (e.is_point) return "point " + inst.regions[e.owner].id;
            return "region " + inst.regions[e.owner].id;
        };
        report.violations.push_back({ViolationKind::general_position, name(a), name(b),
                                     std::string("shared ") + axis + " coordinate"});
    };

    for (const bool use_x : {true, false}) {
        const auto es = collect(use_x);
        for (std::size_t i = 0; i + 1 < es.size(); ++i) {
            for (std::size_t j = i + 1; j < es.size() && es[j].v == es[i].v; ++j) {
                flag(es[i], es[j], use_x ? "x" : "y");
            }
        }
    }
}

}  // namespace

ValidationReport validate_instance(const Instance& inst) {
    ValidationReport report;
    const std::size_t n = inst.regions.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Region& a = inst.regions[i];
        if (a.xmin > a.xmax || a.ymin > a.ymax) {
            report.violations.push_back({ViolationKind::containment, a.id, "",
                                         "inverted extents"});
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const Region& b = inst.regions[j];
            if (rects_intersect(a, b)) {
                report.violations.push_back({ViolationKind::disjointness, a.id, b.id,
                                             "regions intersect"});
            }
        }
    }
    if (!inst.points.empty()) {
        if (inst.points.size() != n) {
            report.violations.push_back({ViolationKind::containment, "", "",
                                         "point count differs from region count"});
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (!inst.regions[i].contains(inst.points[i])) {
                    report.violations.push_back({ViolationKind::containment,
                                                 inst.regions[i].id, "",
                                                 "point outside its region"});
                }
            }
        }
    }
    check_coordinate_pool(inst, report);
    return report;
}

bool staircase_dominates(const Staircase& stair, const Point& p) {
    for (const Point& v : stair.vertices) {
        if (dominates(v, p)) return true;
    }
    return false;
}

bool staircase_clip_is_clean(const Staircase& stair, const Region& r) {
    // A convex (top-right) vertex of the boundary curve strictly inside r
    // would make the part of r above the curve non-rectangular.
    for (const Point& v : stair.vertices) {
        if (v.x > r.xmin && v.x < r.xmax && v.y > r.ymin && v.y < r.ymax) return false;
    }
    // Connectivity: the curve enters and leaves r at most once. Walk the
    // curve segments in order and check the in-r pattern is a single run.
    if (stair.empty()) return true;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::pair<Point, Point>> segs;
    const auto& vs = stair.vertices;
    segs.push_back({{-inf, vs.front().y}, vs.front()});
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Point corner{vs[i].x, vs[i + 1].y};
        segs.push_back({corner, vs[i]});          // vertical drop below vs[i]
        segs.push_back({corner, vs[i + 1]});      // horizontal run to vs[i+1]
    }
    segs.push_back({{vs.back().x, -inf}, vs.back()});
    const auto seg_hits = [&](const std::pair<Point, Point>& s) {
        const double xlo = std::min(s.first.x, s.second.x);
        const double xhi = std::max(s.first.x, s.second.x);
        const double ylo = std::min(s.first.y, s.second.y);
        const double yhi = std::max(s.first.y, s.second.y);
        return xlo <= r.xmax && r.xmin <= xhi && ylo <= r.ymax && r.ymin <= yhi;
    };
    int runs = 0;
    bool prev = false;
    for (const auto& s : segs) {
        const bool hit = seg_hits(s);
        if (hit && !prev) ++runs;
        prev = hit;
    }
    return runs <= 1;
}

}  // namespace frontier
