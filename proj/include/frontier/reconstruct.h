#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "frontier/preprocess.h"

namespace frontier {

// Cost model: each distinct retrieval is charged once; dominance predicates
// evaluated inside galloping searches and queue/tree bookkeeping steps are
// tracked separately so runs can be compared against per-instance budgets.
struct CostLedger {
    std::uint64_t retrievals = 0;
    std::uint64_t predicate_evals = 0;
    std::uint64_t step_ops = 0;

    double weighted_cost(double retrieval_cost) const {
        return static_cast<double>(retrievals) * retrieval_cost +
               static_cast<double>(predicate_evals) +
               static_cast<double>(step_ops);
    }
};

// Metered access to the hidden points, addressed by truncated index.
// Stateless: caching (and therefore charging) is owned by the caller.
class RetrievalOracle {
public:
    RetrievalOracle(const Instance& instance, const TruncatedSet& ts);

    // Throws OracleContainmentViolation if the stored point falls outside
    // its original (unclipped) region.
    Point point_for(int truncated_index) const;

private:
    const Instance* instance_;
    const TruncatedSet* ts_;
};

// Implicit description of the Pareto front: an index-ordered mix of pinned
// points, single unretrieved regions, and unretrieved index ranges.
struct FrontEntry {
    enum class Kind { retrieved, unretrieved, unretrieved_range };
    Kind kind = Kind::unretrieved;
    int first = -1;  // truncated index
    int last = -1;   // == first except for ranges
    Point point{};   // meaningful for retrieved entries only

    bool operator==(const FrontEntry&) const = default;
};

struct ImplicitFront {
    std::vector<FrontEntry> entries;
    bool operator==(const ImplicitFront&) const = default;
};

enum class QueueOrder { fifo, lifo, random };

struct ReconstructOptions {
    QueueOrder order = QueueOrder::fifo;
    std::uint64_t seed = 0;     // dequeue positions for QueueOrder::random
    bool debug_assert = false;  // per-step brute-force equivalence checks
};

// Runs the subproblem loop over the preprocessed structure and returns the
// implicit front plus the cost ledger.
std::pair<ImplicitFront, CostLedger> reconstruct(const AuxStructure& aux,
                                                 const RetrievalOracle& oracle,
                                                 const ReconstructOptions& opts = {});

// Expands an implicit front to the explicit staircase (not cost-charged).
// Throws ResolutionMismatch if the result is not strictly x-increasing and
// y-decreasing.
Staircase resolve(const ImplicitFront& front, const RetrievalOracle& oracle);

// Length of the true-prefix of pred over [0,len) using O(log(k+2))
// evaluations: doubling probes at 0,1,3,7,... then binary refinement.
// Evaluations made by the search are charged to ledger.predicate_evals;
// with debug_check the predicate is first full-scanned (uncharged) and
// PredicateNotMonotone is thrown if it is not a clean prefix.
std::size_t galloping_prefix_search(std::size_t len,
                                    const std::function<bool(std::size_t)>& pred,
                                    CostLedger& ledger, bool debug_check = false);

}  // namespace frontier
