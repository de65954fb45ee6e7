#include "frontier/truncate.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "frontier/errors.h"

namespace frontier {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// O(n log n) Pareto staircase of a point set: sort by x ascending and keep
// the strictly rising suffix maxima of y from the right.
Staircase staircase_of(std::vector<Point> pts, OpCounter* oc) {
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        bump(oc);
        if (a.x != b.x) return a.x < b.x;
        return a.y > b.y;
    });
    Staircase out;
    double best_y = kNegInf;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        bump(oc);
        if (it->y > best_y) {
            best_y = it->y;
            out.vertices.push_back(*it);
        }
    }
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

// Static range-max structure, O(1) query after O(n log n) build.
class SparseMax {
public:
    SparseMax(std::vector<double> base, OpCounter* oc) {
        levels_.push_back(std::move(base));
        while (levels_.back().size() > 1) {
            const auto& prev = levels_.back();
            const std::size_t half = std::size_t{1} << (levels_.size() - 1);
            std::vector<double> next;
            if (prev.size() < half + 1) break;
            next.reserve(prev.size() - half);
            for (std::size_t i = 0; i + half < prev.size(); ++i) {
                bump(oc);
                next.push_back(std::max(prev[i], prev[i + half]));
            }
            levels_.push_back(std::move(next));
        }
    }

    // Maximum over [lo, hi); -inf when empty.
    double query(std::size_t lo, std::size_t hi, OpCounter* oc) const {
        if (lo >= hi) return kNegInf;
        bump(oc);
        std::size_t k = 0;
        while ((std::size_t{2} << k) <= hi - lo) ++k;
        k = std::min(k, levels_.size() - 1);
        const std::size_t span = std::size_t{1} << k;
        return std::max(levels_[k][lo], levels_[k][hi - span]);
    }

private:
    std::vector<std::vector<double>> levels_;
};

// For every region i, whether some other region's halfslab of the given
// orientation reaches it. A horizontal halfslab reaches i iff some k has
// xmax_k >= xmin_i and positive y-overlap with i; split on whether k's
// lower y coordinate sits at or below ymin_i (sweep-line stabbing query)
// or strictly inside (ymin_i, ymax_i) (range maximum over sorted ymin).
std::vector<bool> slab_reach(const std::vector<Region>& rs, bool horizontal,
                             OpCounter* oc) {
    const std::size_t n = rs.size();
    const auto lo = [&](std::size_t k) { return horizontal ? rs[k].ymin : rs[k].xmin; };
    const auto hi = [&](std::size_t k) { return horizontal ? rs[k].ymax : rs[k].xmax; };
    const auto val = [&](std::size_t k) { return horizontal ? rs[k].xmax : rs[k].ymax; };
    const auto thr = [&](std::size_t k) { return horizontal ? rs[k].xmin : rs[k].ymin; };

    std::vector<std::size_t> by_lo(n);
    std::iota(by_lo.begin(), by_lo.end(), std::size_t{0});
    std::sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) {
        bump(oc);
        return lo(a) < lo(b);
    });
    std::vector<double> lo_sorted(n), val_by_lo(n);
    for (std::size_t r = 0; r < n; ++r) {
        lo_sorted[r] = lo(by_lo[r]);
        val_by_lo[r] = val(by_lo[r]);
    }
    SparseMax range_max(val_by_lo, oc);

    // Sweep events at one coordinate resolve as insert, then remove, then
    // query: a region is live for a query at q iff lo(k) <= q < hi(k).
    enum Phase { insert = 0, remove = 1, query = 2 };
    struct Event {
        double coord;
        int phase;
        std::size_t k;
    };
    std::vector<Event> events;
    events.reserve(3 * n);
    for (std::size_t k = 0; k < n; ++k) {
        events.push_back({lo(k), insert, k});
        events.push_back({hi(k), remove, k});
        events.push_back({lo(k), query, k});
    }
    std::sort(events.begin(), events.end(), [&](const Event& a, const Event& b) {
        bump(oc);
        if (a.coord != b.coord) return a.coord < b.coord;
        return a.phase < b.phase;
    });

    const auto counted_less = [oc](double a, double b) {
        bump(oc);
        return a < b;
    };
    std::multiset<double, decltype(counted_less)> active(counted_less);

    std::vector<bool> out(n, false);
    for (const Event& e : events) {
        bump(oc);
        if (e.phase == insert) {
            active.insert(val(e.k));
        } else if (e.phase == remove) {
            active.erase(active.find(val(e.k)));
        } else {
            const std::size_t i = e.k;
            // Exclude i itself from the stabbing query; it is live here
            // unless degenerate along the sweep axis.
            const bool self_live = hi(i) > lo(i);
            if (self_live) active.erase(active.find(val(i)));
            double best = active.empty() ? kNegInf : *active.rbegin();
            if (self_live) active.insert(val(i));

            const auto first = std::upper_bound(lo_sorted.begin(), lo_sorted.end(),
                                                lo(i));
            const auto last = std::lower_bound(lo_sorted.begin(), lo_sorted.end(),
                                               hi(i));
            bump(oc, 2);
            best = std::max(best,
                            range_max.query(
                                static_cast<std::size_t>(first - lo_sorted.begin()),
                                static_cast<std::size_t>(last - lo_sorted.begin()),
                                oc));
            if (best >= thr(i)) out[i] = true;
        }
    }
    return out;
}

// Whether some bottom-left vertex other than the region's own dominates p.
// The staircase holds the maximal bottom-left vertices (x ascending, y
// strictly descending), so dominators form a short prefix of the suffix
// starting at the first vertex with v.x >= p.x.
bool dominated_by_other_vertex(const Staircase& front, const Point& p,
                               const Point& own, OpCounter* oc) {
    const auto& vs = front.vertices;
    auto it = std::lower_bound(vs.begin(), vs.end(), p.x,
                               [&](const Point& v, double x) {
                                   bump(oc);
                                   return v.x < x;
                               });
    for (; it != vs.end() && it->y >= p.y; ++it) {
        bump(oc);
        if (!(*it == own)) return true;
    }
    return false;
}

}  // namespace

std::vector<RegionClass> classify_regions(const std::vector<Region>& regions,
                                          OpCounter* oc) {
    const std::size_t n = regions.size();
    std::vector<Point> bls;
    bls.reserve(n);
    for (const Region& r : regions) bls.push_back(r.bottom_left());
    const Staircase front = staircase_of(bls, oc);

    const std::vector<bool> h_reach = slab_reach(regions, true, oc);
    const std::vector<bool> v_reach = slab_reach(regions, false, oc);

    std::vector<RegionClass> out(n, RegionClass::potential);
    for (std::size_t i = 0; i < n; ++i) {
        bump(oc);
        if (dominated_by_other_vertex(front, regions[i].top_right(),
                                      regions[i].bottom_left(), oc)) {
            out[i] = RegionClass::negative;
        } else if (!h_reach[i] && !v_reach[i]) {
            out[i] = RegionClass::positive;
        }
    }
    return out;
}

std::vector<RegionClass> classify_regions_bruteforce(
    const std::vector<Region>& regions) {
    const std::size_t n = regions.size();
    std::vector<RegionClass> out(n, RegionClass::potential);
    for (std::size_t i = 0; i < n; ++i) {
        bool negative = false;
        bool reached = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            if (dominates_region(regions[k].bottom_left(), regions[i])) negative = true;
            if (halfslab_intersects(regions[k], regions[i], SlabOrientation::horizontal) ||
                halfslab_intersects(regions[k], regions[i], SlabOrientation::vertical)) {
                reached = true;
            }
        }
        if (negative) {
            out[i] = RegionClass::negative;
        } else if (!reached) {
            out[i] = RegionClass::positive;
        }
    }
    return out;
}

TruncatedSet truncate_regions(const std::vector<Region>& regions, OpCounter* oc) {
    if (regions.empty()) {
        throw EmptyAfterTruncation("no regions to truncate");
    }
    const std::vector<RegionClass> labels = classify_regions(regions, oc);

    struct Survivor {
        Region region;
        bool flagged;
        int origin;
    };
    std::vector<Survivor> survivors;
    std::vector<Point> bls;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (labels[i] == RegionClass::negative) continue;
        survivors.push_back({regions[i], false, static_cast<int>(i)});
        bls.push_back(regions[i].bottom_left());
    }
    if (survivors.empty()) {
        throw EmptyAfterTruncation("all regions negative");
    }
    const Staircase boundary = staircase_of(bls, oc);

    for (Survivor& s : survivors) {
        bump(oc);
        const Point bl = s.region.bottom_left();
        const bool on_front =
            std::binary_search(boundary.vertices.begin(), boundary.vertices.end(), bl,
                               [&](const Point& a, const Point& b) {
                                   bump(oc);
                                   if (a.x != b.x) return a.x < b.x;
                                   return a.y > b.y;
                               });
        if (on_front) continue;
        s.flagged = true;
        // Boundary vertices spanning the region's full height push the left
        // edge right; vertices spanning its full width push the bottom up.
        // A vertex doing both would make the region negative, and no vertex
        // lies strictly inside a region (it is another region's corner), so
        // the remainder is the rectangle [x', xmax] x [y', ymax].
        double new_xmin = s.region.xmin;
        double new_ymin = s.region.ymin;
        for (const Point& v : boundary.vertices) {
            bump(oc);
            if (v.y >= s.region.ymax && v.x > new_xmin && v.x < s.region.xmax) {
                new_xmin = v.x;
            }
            if (v.x >= s.region.xmax && v.y > new_ymin && v.y < s.region.ymax) {
                new_ymin = v.y;
            }
        }
        s.region.xmin = new_xmin;
        s.region.ymin = new_ymin;
    }

    std::sort(survivors.begin(), survivors.end(),
              [&](const Survivor& a, const Survivor& b) {
                  bump(oc);
                  if (a.region.xmin != b.region.xmin) {
                      return a.region.xmin < b.region.xmin;
                  }
                  return a.region.ymin > b.region.ymin;
              });

    double bbox_xmin = survivors.front().region.xmin;
    double bbox_xmax = bbox_xmin;
    double bbox_ymin = survivors.front().region.ymin;
    double bbox_ymax = bbox_ymin;
    for (const Survivor& s : survivors) {
        bump(oc);
        bbox_xmin = std::min(bbox_xmin, s.region.xmin);
        bbox_xmax = std::max(bbox_xmax, s.region.xmax);
        bbox_ymin = std::min(bbox_ymin, s.region.ymin);
        bbox_ymax = std::max(bbox_ymax, s.region.ymax);
    }

    TruncatedSet out;
    const auto sentinel = [](std::string id, double x, double y) {
        Region r;
        r.id = std::move(id);
        r.xmin = r.xmax = x;
        r.ymin = r.ymax = y;
        r.kind = RegionKind::sentinel;
        return r;
    };
    out.regions.push_back(sentinel("$left", bbox_xmin - 1.0, bbox_ymax + 1.0));
    out.flagged.push_back(false);
    out.origin.push_back(-1);
    for (Survivor& s : survivors) {
        out.regions.push_back(std::move(s.region));
        out.flagged.push_back(s.flagged);
        out.origin.push_back(s.origin);
    }
    out.regions.push_back(sentinel("$right", bbox_xmax + 1.0, bbox_ymin - 1.0));
    out.flagged.push_back(false);
    out.origin.push_back(-1);
    out.boundary = boundary;
    return out;
}

}  // namespace frontier
