#include "frontier/tree.h"

#include <algorithm>

#include "frontier/errors.h"

namespace frontier {
namespace {

// A region strictly inside (lo,hi) is a source of the node's graph iff
// every incoming arrow originates at or outside the boundaries: vertical
// arrows come from lower indices (highest source = back_ref), horizontal
// from higher indices (lowest source = fwd_ref), and the boundary regions'
// outgoing arrows are removed.
bool is_node_source(const DependencyGraph& g, int lo, int hi, int x) {
    return (g.back_ref[x] < 0 || g.back_ref[x] <= lo) &&
           (g.fwd_ref[x] < 0 || g.fwd_ref[x] >= hi);
}

}  // namespace

std::vector<int> bruteforce_child_boundaries(const DependencyGraph& g, int lo,
                                             int hi) {
    std::vector<int> out;
    for (int x = lo + 1; x < hi; ++x) {
        bool incoming = false;
        for (int j = lo + 1; j < hi && !incoming; ++j) {
            if (j == x) continue;
            if (j < x) {
                const auto& V = g.V[j];
                incoming = std::find(V.begin() + 1, V.end(), x) != V.end();
            } else {
                const auto& H = g.H[j];
                incoming = std::find(H.begin(), H.end() - 1, x) != H.end() - 1;
            }
        }
        if (!incoming) out.push_back(x);
    }
    return out;
}

SubproblemTree build_subproblem_tree(const DependencyGraph& g, int lo, int hi,
                                     int tree_index, std::vector<NodeRef>& attr_start,
                                     std::vector<NodeRef>& attr_end, OpCounter* oc) {
    SubproblemTree tree;
    const auto make_node = [&](int a, int b, int parent) {
        const int id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({a, b, parent, {}});
        if (parent >= 0) tree.nodes[parent].children.push_back(id);
        if (!attr_start[a].valid()) attr_start[a] = {tree_index, id};
        if (!attr_end[b].valid()) attr_end[b] = {tree_index, id};
        return id;
    };

    std::vector<int> pending;
    pending.push_back(make_node(lo, hi, -1));
    std::vector<int> accepted;
    while (!pending.empty()) {
        const int id = pending.back();
        pending.pop_back();
        const int a = tree.nodes[id].lo;
        const int b = tree.nodes[id].hi;
        if (b - a < 2) continue;  // adjacent pair: leaf

        accepted.clear();
        if (id == 0) {
            // Component anchors have no outgoing arrows, so the root's
            // children are found by a direct scan.
            for (int x = a + 1; x < b; ++x) {
                bump(oc);
                if (is_node_source(g, a, b, x)) accepted.push_back(x);
            }
        } else {
            // Deeper down, every new source lost its last incoming arrow
            // to the removal of a boundary's outgoing set, so it appears
            // among the boundaries' targets.
            const auto consider = [&](int x) {
                bump(oc);
                if (x <= a || x >= b) return;
                if (is_node_source(g, a, b, x)) accepted.push_back(x);
            };
            const auto& V = g.V[a];
            for (std::size_t k = 1; k < V.size(); ++k) consider(V[k]);
            const auto& H = g.H[b];
            for (std::size_t k = 0; k + 1 < H.size(); ++k) consider(H[k]);
            std::sort(accepted.begin(), accepted.end());
            accepted.erase(std::unique(accepted.begin(), accepted.end()),
                           accepted.end());
        }
        if (accepted.empty()) {
            throw InvariantViolation("subproblem node failed to split");
        }
        int prev = a;
        for (int x : accepted) {
            bump(oc);
            pending.push_back(make_node(prev, x, id));
            prev = x;
        }
        pending.push_back(make_node(prev, b, id));
    }
    return tree;
}

}  // namespace frontier
