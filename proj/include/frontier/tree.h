#pragma once

#include <vector>

#include "frontier/canonical.h"
#include "frontier/visibility.h"

namespace frontier {

// Recursive decomposition of one anchored component into subproblem
// intervals. Children of a node [lo,hi] are the consecutive-source pairs of
// the dependency graph induced on [lo,hi] with the outgoing arrows of lo
// and hi removed; leaves are adjacent pairs (including gap children with no
// interior region).
struct SubproblemTree {
    struct Node {
        int lo, hi;
        int parent;  // -1 for root
        std::vector<int> children;
    };
    std::vector<Node> nodes;  // nodes[0] is the root; parents precede children

    const Node& root() const { return nodes.front(); }
};

struct NodeRef {
    int tree = -1;
    int node = -1;
    bool valid() const { return tree >= 0; }
};

// Builds the tree for one anchored component interval of the canonical set.
// Fills attr_start[i] / attr_end[i] with the highest node whose interval
// starts / ends at canonical index i (first assignment wins, parents are
// created before children). Throws InvariantViolation if an internal node
// fails to split.
SubproblemTree build_subproblem_tree(const DependencyGraph& g, int lo, int hi,
                                     int tree_index, std::vector<NodeRef>& attr_start,
                                     std::vector<NodeRef>& attr_end,
                                     OpCounter* oc = nullptr);

// Reference computation of a node's child boundaries by scanning the whole
// interior; used to cross-check the candidate-list construction.
std::vector<int> bruteforce_child_boundaries(const DependencyGraph& g, int lo,
                                             int hi);

}  // namespace frontier
