#include "frontier/visibility.h"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace frontier {
namespace {

// Sweeps along one axis and records every pair of regions that becomes
// adjacent in the cross-axis ordering of the regions the line crosses.
// Adjacency along the moving line is exactly positive-measure visibility:
// candidate pairs are validated only after a whole event batch at one
// coordinate, so zero-width adjacencies never register. Pairs are emitted
// with the smaller region index first.
void collect_adjacent_pairs(const std::vector<Region>& rs, bool vertical,
                            std::set<std::pair<int, int>>& out, OpCounter* oc) {
    const int n = static_cast<int>(rs.size());
    const auto s_lo = [&](int k) { return vertical ? rs[k].xmin : rs[k].ymin; };
    const auto s_hi = [&](int k) { return vertical ? rs[k].xmax : rs[k].ymax; };
    const auto p_lo = [&](int k) { return vertical ? rs[k].ymin : rs[k].xmin; };

    struct Event {
        double coord;
        int phase;  // 0 = remove, 1 = insert
        int k;
    };
    std::vector<Event> events;
    for (int k = 0; k < n; ++k) {
        if (s_hi(k) <= s_lo(k)) continue;  // no positive span along the sweep axis
        events.push_back({s_lo(k), 1, k});
        events.push_back({s_hi(k), 0, k});
    }
    std::sort(events.begin(), events.end(), [&](const Event& a, const Event& b) {
        bump(oc);
        if (a.coord != b.coord) return a.coord < b.coord;
        return a.phase < b.phase;
    });

    const auto by_pos = [&, oc](int a, int b) {
        bump(oc);
        return p_lo(a) < p_lo(b);
    };
    std::set<int, decltype(by_pos)> status(by_pos);

    std::vector<std::pair<int, int>> candidates;  // (below, above) in status order
    std::size_t e = 0;
    while (e < events.size()) {
        const double coord = events[e].coord;
        candidates.clear();
        while (e < events.size() && events[e].coord == coord) {
            const Event& ev = events[e++];
            bump(oc);
            if (ev.phase == 0) {
                auto it = status.find(ev.k);
                if (it != status.end()) {
                    auto nxt = std::next(it);
                    if (it != status.begin() && nxt != status.end()) {
                        candidates.emplace_back(*std::prev(it), *nxt);
                    }
                    status.erase(it);
                }
            } else {
                auto it = status.insert(ev.k).first;
                if (it != status.begin()) candidates.emplace_back(*std::prev(it), ev.k);
                auto nxt = std::next(it);
                if (nxt != status.end()) candidates.emplace_back(ev.k, *nxt);
            }
        }
        for (const auto& [below, above] : candidates) {
            bump(oc);
            auto it = status.find(below);
            if (it == status.end()) continue;
            auto nxt = std::next(it);
            if (nxt != status.end() && *nxt == above) {
                out.insert(std::minmax(below, above));
            }
        }
    }
}

void finalize_refs(DependencyGraph& g) {
    const int n = static_cast<int>(g.V.size());
    g.back_ref.assign(n, -1);
    g.fwd_ref.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (std::size_t t = 1; t < g.V[i].size(); ++t) {
            g.back_ref[g.V[i][t]] = std::max(g.back_ref[g.V[i][t]], i);
        }
        for (std::size_t t = 0; t + 1 < g.H[i].size(); ++t) {
            int& ref = g.fwd_ref[g.H[i][t]];
            ref = (ref < 0) ? i : std::min(ref, i);
        }
    }
}

}  // namespace

DependencyGraph build_visibility(const std::vector<Region>& regions, OpCounter* oc) {
    const int n = static_cast<int>(regions.size());
    DependencyGraph g;
    g.V.assign(n, {});
    g.H.assign(n, {});
    for (int i = 0; i < n; ++i) {
        // Index order must follow bottom-left sorting; regions are either
        // full rectangles or degenerate points.
        assert(i == 0 || regions[i - 1].xmin <= regions[i].xmin);
        assert(regions[i].is_degenerate() ||
               (regions[i].xmax > regions[i].xmin && regions[i].ymax > regions[i].ymin));
        g.V[i].push_back(i);
    }

    std::set<std::pair<int, int>> vert, horiz;
    collect_adjacent_pairs(regions, true, vert, oc);
    collect_adjacent_pairs(regions, false, horiz, oc);

    // A vertical arrow runs from the smaller index to the larger, a
    // horizontal arrow from the larger to the smaller.
    for (const auto& [a, b] : vert) g.V[a].push_back(b);
    for (const auto& [a, b] : horiz) g.H[b].push_back(a);
    for (int i = 0; i < n; ++i) {
        std::sort(g.V[i].begin() + 1, g.V[i].end());
        std::sort(g.H[i].begin(), g.H[i].end());
        g.H[i].push_back(i);
    }

    g.v_next.assign(n, -1);
    g.h_prev.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        // xmin is non-decreasing with index, so the targets of the next
        // binary search form a suffix; ymin is non-increasing, a prefix.
        int lo = 0, hi = n;
        while (lo < hi) {
            bump(oc);
            const int mid = (lo + hi) / 2;
            if (regions[mid].xmin > regions[i].xmax) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if (lo < n) g.v_next[i] = lo;

        lo = 0;
        hi = n;
        while (lo < hi) {
            bump(oc);
            const int mid = (lo + hi) / 2;
            if (regions[mid].ymin > regions[i].ymax) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if (lo > 0) g.h_prev[i] = lo - 1;
    }

    finalize_refs(g);
    return g;
}

bool bruteforce_visible(const std::vector<Region>& regions, int a, int b,
                        SlabOrientation orientation) {
    if (a == b) return false;
    const bool vertical = orientation == SlabOrientation::vertical;
    const auto s_lo = [&](const Region& r) { return vertical ? r.xmin : r.ymin; };
    const auto s_hi = [&](const Region& r) { return vertical ? r.xmax : r.ymax; };
    const auto g_lo = [&](const Region& r) { return vertical ? r.ymin : r.xmin; };
    const auto g_hi = [&](const Region& r) { return vertical ? r.ymax : r.xmax; };

    const Region& ra = regions[a];
    const Region& rb = regions[b];
    const double olo = std::max(s_lo(ra), s_lo(rb));
    const double ohi = std::min(s_hi(ra), s_hi(rb));
    if (ohi <= olo) return false;

    // Open gap between the two cross-axis intervals; empty when touching.
    const double glo = std::min(g_hi(ra), g_hi(rb));
    const double ghi = std::max(g_lo(ra), g_lo(rb));
    std::vector<std::pair<double, double>> cover;
    for (std::size_t c = 0; c < regions.size(); ++c) {
        if (static_cast<int>(c) == a || static_cast<int>(c) == b) continue;
        const Region& rc = regions[c];
        if (std::min(g_hi(rc), ghi) <= std::max(g_lo(rc), glo)) continue;
        const double clo = std::max(s_lo(rc), olo);
        const double chi = std::min(s_hi(rc), ohi);
        if (chi > clo) cover.emplace_back(clo, chi);
    }
    std::sort(cover.begin(), cover.end());
    double covered = 0.0;
    double reach = olo;
    for (const auto& [clo, chi] : cover) {
        if (chi <= reach) continue;
        covered += chi - std::max(clo, reach);
        reach = chi;
    }
    return (ohi - olo) - covered > 0.0;
}

DependencyGraph build_visibility_bruteforce(const std::vector<Region>& regions) {
    const int n = static_cast<int>(regions.size());
    DependencyGraph g;
    g.V.assign(n, {});
    g.H.assign(n, {});
    for (int i = 0; i < n; ++i) {
        g.V[i].push_back(i);
        for (int j = i + 1; j < n; ++j) {
            if (bruteforce_visible(regions, i, j, SlabOrientation::vertical)) {
                g.V[i].push_back(j);
            }
            if (bruteforce_visible(regions, i, j, SlabOrientation::horizontal)) {
                g.H[j].push_back(i);
            }
        }
        g.H[i].push_back(i);
    }
    g.v_next.assign(n, -1);
    g.h_prev.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (regions[k].xmin > regions[i].xmax) {
                g.v_next[i] = k;
                break;
            }
        }
        for (int k = n - 1; k >= 0; --k) {
            if (regions[k].ymin > regions[i].ymax) {
                g.h_prev[i] = k;
                break;
            }
        }
    }
    finalize_refs(g);
    return g;
}

}  // namespace frontier
