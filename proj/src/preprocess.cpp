#include "frontier/preprocess.h"

namespace frontier {

AuxStructure preprocess(const std::vector<Region>& regions, OpCounter* oc) {
    AuxStructure aux;
    aux.ts = truncate_regions(regions, oc);
    aux.g_trunc = build_visibility(aux.ts.regions, oc);
    aux.cs = build_canonical(aux.ts, aux.g_trunc, oc);
    aux.g_canon = build_visibility(aux.cs.regions, oc);
    aux.tree_of.assign(aux.cs.size(), -1);
    aux.attr_start.assign(aux.cs.size(), NodeRef{});
    aux.attr_end.assign(aux.cs.size(), NodeRef{});
    for (std::size_t c = 0; c < aux.cs.components.size(); ++c) {
        const auto [lo, hi] = aux.cs.components[c];
        aux.trees.push_back(build_subproblem_tree(aux.g_canon, lo, hi,
                                                  static_cast<int>(c),
                                                  aux.attr_start, aux.attr_end, oc));
        for (int x = lo + 1; x < hi; ++x) aux.tree_of[x] = static_cast<int>(c);
    }
    return aux;
}

}  // namespace frontier
