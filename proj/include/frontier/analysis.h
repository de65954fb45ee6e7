#pragma once

#include <utility>
#include <vector>

#include "frontier/reconstruct.h"
#include "frontier/truncate.h"
#include "frontier/visibility.h"

namespace frontier {

// One region of the interesting set: intersected by the true front and
// flagged, crossed by a front edge defined by a foreign point, or not a sink.
struct TildeMember {
    int index = -1;  // truncated index
    bool flagged = false;
    bool crossed_by_foreign_edge = false;
    bool not_sink = false;
    bool operator==(const TildeMember&) const = default;
};

struct ParetoCostReport {
    std::vector<TildeMember> tilde_members;
    std::vector<int> v_sizes, h_sizes;  // conditioned visibility sizes per member
    double cost_c = 0;
    double cp = 0;  // sum of cost_c + log2(v) + log2(h) over members
};

struct FrontTypeCount {
    long long count = 0;
    // candidate coordinates per region, in region order
    std::vector<std::vector<double>> xs, ys;
};

// points is aligned with the ORIGINAL region list; truncated indices reach it
// through ts.origin.

std::vector<TildeMember> interesting_set(const TruncatedSet& ts, const DependencyGraph& g,
                                         const std::vector<Point>& points);

// Conditioned visibility lists: V_i(P) keeps i plus the V_i members dominated
// by some point p_j with j <= i; H_i(P) mirrors with j >= i.
std::pair<std::vector<int>, std::vector<int>> conditioned_visibility(
    const TruncatedSet& ts, const DependencyGraph& g, const std::vector<Point>& points,
    int i);

ParetoCostReport pareto_cost(const TruncatedSet& ts, const DependencyGraph& g,
                             const std::vector<Point>& points, double cost_c);

int retrieval_lower_bound(const ParetoCostReport& report);

// Exhaustively enumerates hidden-point placements over a candidate grid (cell
// midpoints of the coordinate arrangement plus near-corner points) and counts
// combinatorially distinct fronts, i.e. distinct sequences of region indices.
// Throws LimitExceeded when the placement product exceeds limit.
FrontTypeCount enumerate_front_types(const std::vector<Region>& regions, long long limit);

// Consecutive-source pairs of the brute-force dependency graph over an
// alive, sentinel-anchored region list; indices are into that list.
std::vector<std::pair<int, int>> bruteforce_subproblems(const std::vector<Region>& regions);

struct VerifyOptions {
    double cost_c = 10.0;
    double ratio_r = 8.0;  // retrievals vs max(1, |tilde|)
    double ratio_p = 8.0;  // predicate evals vs sum of (1 + log terms)
};

struct VerifyReport {
    double retrieval_ratio = 0;
    double predicate_ratio = 0;
    int tilde_size = 0;
    int retrieval_lb = 0;
};

// Checks a completed run: resolved front equals the brute-force front, the
// retrieval count respects the lower bound, and both cost meters stay within
// the configured ratios. Throws VerificationFailure naming the violated
// clause; returns the measured ratios otherwise.
VerifyReport verify_run(const Instance& instance, const ImplicitFront& front,
                        const CostLedger& ledger, const VerifyOptions& opts = {});

}  // namespace frontier
