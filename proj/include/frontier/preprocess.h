#pragma once

#include <vector>

#include "frontier/canonical.h"
#include "frontier/tree.h"
#include "frontier/truncate.h"
#include "frontier/visibility.h"

namespace frontier {

// Everything the reconstruction phase needs, built without looking at any
// point: truncated regions, dependency graphs on both the truncated and the
// canonical lists, per-component subproblem trees, and per-region handles
// into them.
struct AuxStructure {
    TruncatedSet ts;
    DependencyGraph g_trunc;
    CanonicalSet cs;
    DependencyGraph g_canon;
    std::vector<SubproblemTree> trees;  // aligned with cs.components
    std::vector<int> tree_of;           // canonical index -> component index, -1
    std::vector<NodeRef> attr_start;    // highest node starting at index
    std::vector<NodeRef> attr_end;      // highest node ending at index
};

AuxStructure preprocess(const std::vector<Region>& regions,
                        OpCounter* oc = nullptr);

}  // namespace frontier
