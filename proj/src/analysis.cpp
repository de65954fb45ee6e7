#include "frontier/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "frontier/errors.h"

namespace frontier {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One staircase edge of the front; the defining endpoint is the front point
// the edge is incident to on its closed end.
struct FrontEdge {
    bool horizontal;
    double fixed;    // y for horizontal edges, x for vertical ones
    double lo, hi;   // closed range on the varying axis; lo may be -inf
    int owner;       // original index of the defining point
};

// Front of the full hidden point set together with original-index owners.
std::vector<std::pair<Point, int>> owned_front(const std::vector<Point>& points) {
    std::vector<std::pair<Point, int>> out;
    for (std::size_t a = 0; a < points.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < points.size(); ++b) {
            if (a == b) continue;
            if (dominates(points[b], points[a]) && points[b] != points[a]) {
                maximal = false;
                break;
            }
            // equal points: keep the lower index as the representative
            if (points[b] == points[a] && b < a) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.emplace_back(points[a], static_cast<int>(a));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return l.first.x < r.first.x || (l.first.x == r.first.x && l.first.y > r.first.y);
    });
    return out;
}

std::vector<FrontEdge> front_edges(const std::vector<std::pair<Point, int>>& front) {
    std::vector<FrontEdge> edges;
    const std::size_t m = front.size();
    for (std::size_t t = 0; t < m; ++t) {
        const Point& p = front[t].first;
        const int owner = front[t].second;
        const double xlo = (t == 0) ? -kInf : front[t - 1].first.x;
        const double ylo = (t + 1 < m) ? front[t + 1].first.y : -kInf;
        edges.push_back({true, p.y, xlo, p.x, owner});   // horizontal, ends at p
        edges.push_back({false, p.x, ylo, p.y, owner});  // vertical, hangs from p
    }
    return edges;
}

bool edge_meets_region(const FrontEdge& e, const Region& r) {
    if (e.horizontal)
        return e.fixed >= r.ymin && e.fixed <= r.ymax && e.lo <= r.xmax && e.hi >= r.xmin;
    return e.fixed >= r.xmin && e.fixed <= r.xmax && e.lo <= r.ymax && e.hi >= r.ymin;
}

}  // namespace

std::vector<TildeMember> interesting_set(const TruncatedSet& ts, const DependencyGraph& g,
                                         const std::vector<Point>& points) {
    const auto front = owned_front(points);
    const auto edges = front_edges(front);
    std::vector<TildeMember> out;
    for (int i = 0; i < static_cast<int>(ts.regions.size()); ++i) {
        if (ts.is_sentinel(i)) continue;
        const Region& r = ts.regions[i];
        const int own = ts.origin[i];
        bool met = false, foreign = false;
        for (const FrontEdge& e : edges) {
            if (!edge_meets_region(e, r)) continue;
            met = true;
            if (e.owner != own) foreign = true;
        }
        if (!met) continue;
        TildeMember m;
        m.index = i;
        m.flagged = ts.flagged[i];
        m.crossed_by_foreign_edge = foreign;
        m.not_sink = !g.is_sink(i);
        if (m.flagged || m.crossed_by_foreign_edge || m.not_sink) out.push_back(m);
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> conditioned_visibility(
    const TruncatedSet& ts, const DependencyGraph& g, const std::vector<Point>& points,
    int i) {
    const auto dominated_by_side = [&](const Region& r, bool lower_side) {
        for (int j = 0; j < static_cast<int>(ts.regions.size()); ++j) {
            if (ts.is_sentinel(j)) continue;
            if (lower_side ? j > i : j < i) continue;
            if (dominates_region(points[ts.origin[j]], r)) return true;
        }
        return false;
    };
    std::vector<int> v{i}, h;
    for (std::size_t t = 1; t < g.V[i].size(); ++t) {
        const int r = g.V[i][t];
        if (dominated_by_side(ts.regions[r], true)) v.push_back(r);
    }
    for (std::size_t t = 0; t + 1 < g.H[i].size(); ++t) {
        const int r = g.H[i][t];
        if (dominated_by_side(ts.regions[r], false)) h.push_back(r);
    }
    h.push_back(i);
    return {v, h};
}

ParetoCostReport pareto_cost(const TruncatedSet& ts, const DependencyGraph& g,
                             const std::vector<Point>& points, double cost_c) {
    ParetoCostReport rep;
    rep.cost_c = cost_c;
    rep.tilde_members = interesting_set(ts, g, points);
    for (const TildeMember& m : rep.tilde_members) {
        const auto [v, h] = conditioned_visibility(ts, g, points, m.index);
        rep.v_sizes.push_back(static_cast<int>(v.size()));
        rep.h_sizes.push_back(static_cast<int>(h.size()));
        rep.cp += cost_c + std::log2(static_cast<double>(v.size())) +
                  std::log2(static_cast<double>(h.size()));
    }
    return rep;
}

int retrieval_lower_bound(const ParetoCostReport& report) {
    const int k = static_cast<int>(report.tilde_members.size());
    return (k + 2) / 3;
}

FrontTypeCount enumerate_front_types(const std::vector<Region>& regions, long long limit) {
    FrontTypeCount ftc;
    const std::size_t n = regions.size();

    const auto axis_candidates = [&](bool x_axis) {
        std::vector<double> coords;
        for (const Region& r : regions) {
            coords.push_back(x_axis ? r.xmin : r.ymin);
            coords.push_back(x_axis ? r.xmax : r.ymax);
        }
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
        double min_gap = kInf;
        for (std::size_t t = 1; t < coords.size(); ++t)
            min_gap = std::min(min_gap, coords[t] - coords[t - 1]);
        const double delta = (coords.size() > 1) ? min_gap / 8.0 : 1.0;
        std::vector<std::vector<double>> per_region(n);
        for (std::size_t r = 0; r < n; ++r) {
            const double lo = x_axis ? regions[r].xmin : regions[r].ymin;
            const double hi = x_axis ? regions[r].xmax : regions[r].ymax;
            std::vector<double>& cand = per_region[r];
            if (lo == hi) {
                cand.push_back(lo);
                continue;
            }
            for (std::size_t t = 1; t < coords.size(); ++t) {
                const double mid = (coords[t - 1] + coords[t]) / 2.0;
                if (mid > lo && mid < hi) cand.push_back(mid);
            }
            cand.push_back(lo + delta);
            cand.push_back(hi - delta);
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        }
        return per_region;
    };

    ftc.xs = axis_candidates(true);
    ftc.ys = axis_candidates(false);

    long long product = 1;
    for (std::size_t r = 0; r < n; ++r) {
        const long long cells = static_cast<long long>(ftc.xs[r].size()) *
                                static_cast<long long>(ftc.ys[r].size());
        if (cells == 0 || product > limit / cells)
            throw LimitExceeded("front-type enumeration would exceed " +
                                std::to_string(limit) + " placements");
        product *= cells;
    }

    std::vector<std::size_t> odo(n, 0);  // flat index per region: xi * |ys| + yi
    std::vector<Point> points(n);
    std::set<std::vector<int>> types;
    for (long long it = 0; it < product; ++it) {
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t ny = ftc.ys[r].size();
            points[r] = {ftc.xs[r][odo[r] / ny], ftc.ys[r][odo[r] % ny]};
        }
        const auto front = owned_front(points);
        std::vector<int> type;
        for (const auto& [p, owner] : front) {
            (void)p;
            type.push_back(owner);
        }
        types.insert(std::move(type));
        for (std::size_t r = 0; r < n; ++r) {
            if (++odo[r] < ftc.xs[r].size() * ftc.ys[r].size()) break;
            odo[r] = 0;
        }
    }
    ftc.count = static_cast<long long>(types.size());
    return ftc;
}

std::vector<std::pair<int, int>> bruteforce_subproblems(const std::vector<Region>& regions) {
    const DependencyGraph g = build_visibility_bruteforce(regions);
    std::vector<int> sources;
    for (int i = 0; i < static_cast<int>(regions.size()); ++i)
        if (g.is_source(i)) sources.push_back(i);
    std::vector<std::pair<int, int>> out;
    for (std::size_t t = 1; t < sources.size(); ++t)
        out.emplace_back(sources[t - 1], sources[t]);
    return out;
}

VerifyReport verify_run(const Instance& instance, const ImplicitFront& front,
                        const CostLedger& ledger, const VerifyOptions& opts) {
    const TruncatedSet ts = truncate_regions(instance.regions);
    const DependencyGraph g = build_visibility(ts.regions);
    const ParetoCostReport rep = pareto_cost(ts, g, instance.points, opts.cost_c);

    const RetrievalOracle oracle(instance, ts);
    const Staircase resolved = resolve(front, oracle);
    const Staircase expected = pareto_front_bruteforce(instance.points);
    if (!(resolved == expected))
        throw VerificationFailure("front", "resolved front differs from brute force");

    VerifyReport out;
    out.tilde_size = static_cast<int>(rep.tilde_members.size());
    out.retrieval_lb = retrieval_lower_bound(rep);
    if (static_cast<int>(ledger.retrievals) < out.retrieval_lb)
        throw VerificationFailure("retrieval_lb",
                                  "retrievals " + std::to_string(ledger.retrievals) +
                                      " below lower bound " + std::to_string(out.retrieval_lb));

    const double tilde = std::max(1, out.tilde_size);
    out.retrieval_ratio = static_cast<double>(ledger.retrievals) / tilde;
    if (out.retrieval_ratio > opts.ratio_r)
        throw VerificationFailure("retrieval_ratio",
                                  "retrieval ratio " + std::to_string(out.retrieval_ratio) +
                                      " exceeds " + std::to_string(opts.ratio_r));

    double budget = 0;
    for (std::size_t t = 0; t < rep.tilde_members.size(); ++t)
        budget += 1.0 + std::log2(static_cast<double>(rep.v_sizes[t])) +
                  std::log2(static_cast<double>(rep.h_sizes[t]));
    out.predicate_ratio = budget > 0
                              ? static_cast<double>(ledger.predicate_evals) / budget
                              : static_cast<double>(ledger.predicate_evals);
    if (static_cast<double>(ledger.predicate_evals) > opts.ratio_p * std::max(budget, 1.0))
        throw VerificationFailure("predicate_ratio",
                                  "predicate evaluations " +
                                      std::to_string(ledger.predicate_evals) +
                                      " exceed budget " + std::to_string(opts.ratio_p * budget));
    return out;
}

}  // namespace frontier
