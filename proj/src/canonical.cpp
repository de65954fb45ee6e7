#include "frontier/canonical.h"

#include <algorithm>

namespace frontier {

CullResult cull(const TruncatedSet& ts, const DependencyGraph& g) {
    CullResult out;
    const int last = static_cast<int>(ts.regions.size()) - 1;
    std::vector<bool> is_sep(ts.regions.size(), false);
    for (int t = 1; t < last; ++t) {
        if (g.is_source(t) && g.is_sink(t)) {
            is_sep[t] = true;
            out.separators.push_back(t);
        }
    }
    int run_start = -1;
    for (int t = 1; t <= last; ++t) {
        const bool in_run = t < last && !is_sep[t];
        if (in_run && run_start < 0) run_start = t;
        if (!in_run && run_start >= 0) {
            out.components.emplace_back(run_start - 1, t);  // anchored both sides
            run_start = -1;
        }
    }
    return out;
}

CanonicalSet build_canonical(const TruncatedSet& ts, const DependencyGraph& g,
                             OpCounter* oc) {
    const CullResult culled = cull(ts, g);
    const int last = static_cast<int>(ts.regions.size()) - 1;

    std::vector<bool> in_component(ts.regions.size(), false);
    for (const auto& [lo, hi] : culled.components) {
        for (int t = lo + 1; t < hi; ++t) in_component[t] = true;
    }

    CanonicalSet cs;
    cs.canon_of.assign(ts.regions.size(), -1);
    int t = 0;
    while (t <= last) {
        bump(oc);
        const bool compoundable =
            in_component[t] && g.is_sink(t) && t + 1 <= last &&
            in_component[t + 1] && g.is_sink(t + 1);
        if (!compoundable) {
            cs.canon_of[t] = cs.size();
            cs.regions.push_back(ts.regions[t]);
            cs.members.emplace_back();
            cs.trunc_of.push_back(t);
            ++t;
            continue;
        }
        // Maximal run of consecutive sinks within one component.
        Region box = ts.regions[t];
        box.id = ts.regions[t].id;
        std::vector<int> run;
        while (t <= last && in_component[t] && g.is_sink(t)) {
            bump(oc);
            run.push_back(t);
            box.xmin = std::min(box.xmin, ts.regions[t].xmin);
            box.ymin = std::min(box.ymin, ts.regions[t].ymin);
            box.xmax = std::max(box.xmax, ts.regions[t].xmax);
            box.ymax = std::max(box.ymax, ts.regions[t].ymax);
            ++t;
        }
        box.id = ts.regions[run.front()].id + ".." + ts.regions[run.back()].id;
        box.kind = RegionKind::rectangle;
        for (int m : run) cs.canon_of[m] = cs.size();
        cs.regions.push_back(box);
        cs.members.push_back(std::move(run));
        cs.trunc_of.push_back(-1);
    }

    for (int sep : culled.separators) cs.separators.push_back(cs.canon_of[sep]);
    for (const auto& [lo, hi] : culled.components) {
        cs.components.emplace_back(cs.canon_of[lo], cs.canon_of[hi]);
    }
    return cs;
}

}  // namespace frontier
