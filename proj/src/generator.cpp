#include "frontier/generator.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "frontier/errors.h"

namespace frontier {

namespace {

// Portable uniform doubles: identical across standard libraries for a seed.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
    bool coin() { return (eng() & 1u) != 0; }
};

struct Cell {
    double x0, y0, x1, y1;
    double w() const { return x1 - x0; }
    double h() const { return y1 - y0; }
};

// Recursively bisect a bounding box into n cells, then shrink each cell by
// random margins; shrunken cells of a partition are always disjoint.
std::vector<Region> split_regions(int n, Rng& rng) {
    std::vector<Cell> cells{{0.0, 0.0, 1000.0, 1000.0}};
    while (static_cast<int>(cells.size()) < n) {
        std::size_t best = 0;
        for (std::size_t c = 1; c < cells.size(); ++c)
            if (cells[c].w() * cells[c].h() > cells[best].w() * cells[best].h()) best = c;
        Cell cell = cells[best];
        const double r = rng.range(0.4, 0.6);
        Cell a = cell, b = cell;
        if (cell.w() >= cell.h()) {
            const double cut = cell.x0 + cell.w() * r;
            a.x1 = cut;
            b.x0 = cut;
        } else {
            const double cut = cell.y0 + cell.h() * r;
            a.y1 = cut;
            b.y0 = cut;
        }
        cells[best] = a;
        cells.push_back(b);
    }
    std::vector<Region> out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Cell& cell = cells[c];
        const double ml = rng.range(0.04, 0.18) * cell.w();
        const double mr = rng.range(0.04, 0.18) * cell.w();
        const double mb = rng.range(0.04, 0.18) * cell.h();
        const double mt = rng.range(0.04, 0.18) * cell.h();
        out.push_back({"r" + std::to_string(c), cell.x0 + ml, cell.y0 + mb,
                       cell.x1 - mr, cell.y1 - mt, RegionKind::rectangle});
    }
    return out;
}

// Anti-diagonal bands with pairwise-disjoint x- and y-projections: no region
// overlaps another on either axis, so the dependency graph is edgeless.
std::vector<Region> staircase_regions(int n, Rng& rng) {
    std::vector<Region> out;
    const double band = 1000.0 / n;
    for (int k = 0; k < n; ++k) {
        const double x0 = k * band + rng.range(0.05, 0.2) * band;
        const double x1 = (k + 1) * band - rng.range(0.05, 0.2) * band;
        const double ybase = (n - 1 - k) * band;
        const double y0 = ybase + rng.range(0.05, 0.2) * band;
        const double y1 = ybase + band - rng.range(0.05, 0.2) * band;
        out.push_back({"r" + std::to_string(k), x0, y0, x1, y1, RegionKind::rectangle});
    }
    return out;
}

// Star gadgets: groups of step boxes descending along the anti-diagonal with
// a tall right region overseeing some suffix of them; groups are mutually
// projection-disjoint so each forms its own component.
std::vector<Region> gadget_regions(int n, Rng& rng) {
    std::vector<int> groups;
    int left = n;
    while (left > 0) {
        const int g = std::min(left, 2 + rng.below(4));
        groups.push_back(g);
        left -= g;
    }
    const int k = static_cast<int>(groups.size());
    const double gw = 1000.0 / k, gh = 1000.0 / k;
    std::vector<Region> out;
    int next_id = 0;
    for (int gi = 0; gi < k; ++gi) {
        const int g = groups[gi];
        const double gx = gi * gw;
        const double gy = (k - 1 - gi) * gh;
        if (g == 1) {
            out.push_back({"r" + std::to_string(next_id++), gx + 0.2 * gw, gy + 0.2 * gh,
                           gx + 0.7 * gw, gy + 0.7 * gh, RegionKind::rectangle});
            continue;
        }
        const double cw = gw / g, sh = gh / g;
        // tall region spans the slices from low_slice upward
        const int low_slice = (g > 2 && rng.coin()) ? rng.below(g - 1) : 0;
        for (int s = 0; s < g - 1; ++s) {
            const double x0 = gx + s * cw + rng.range(0.05, 0.15) * cw;
            const double x1 = gx + s * cw + rng.range(0.6, 0.9) * cw;
            const double yb = gy + (g - 1 - s) * sh;
            const double y0 = yb + rng.range(0.05, 0.15) * sh;
            const double y1 = yb + rng.range(0.6, 0.9) * sh;
            out.push_back({"r" + std::to_string(next_id++), x0, y0, x1, y1,
                           RegionKind::rectangle});
        }
        const double tx0 = gx + (g - 1) * cw + rng.range(0.05, 0.15) * cw;
        const double tx1 = gx + (g - 1) * cw + rng.range(0.6, 0.9) * cw;
        const double ty0 = gy + low_slice * sh + rng.range(0.02, 0.1) * sh;
        const double ty1 = gy + gh - rng.range(0.02, 0.1) * sh;
        out.push_back({"r" + std::to_string(next_id++), tx0, ty0, tx1, ty1,
                       RegionKind::rectangle});
    }
    return out;
}

Point place_point(const Region& r, const std::string& point_mode, Rng& rng) {
    const double w = r.xmax - r.xmin, h = r.ymax - r.ymin;
    if (point_mode == "uniform") {
        return {r.xmin + rng.range(0.05, 0.95) * w, r.ymin + rng.range(0.05, 0.95) * h};
    }
    if (point_mode == "corners") {
        const double e = rng.range(0.02, 0.08);
        if (rng.coin()) return {r.xmin + e * w, r.ymin + e * h};
        return {r.xmax - e * w, r.ymax - e * h};
    }
    if (point_mode == "adversarial-bl") {
        const double ex = rng.range(0.001, 0.01), ey = rng.range(0.001, 0.01);
        return {r.xmin + ex * w, r.ymin + ey * h};
    }
    throw std::invalid_argument("unknown point mode '" + point_mode + "'");
}

}  // namespace

Instance generate(const GeneratorConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be positive");
    if (cfg.mode != "split" && cfg.mode != "staircase" && cfg.mode != "gadget-figs")
        throw std::invalid_argument("unknown mode '" + cfg.mode + "'");
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(cfg.seed * 0x9e3779b97f4a7c15ULL + attempt);
        Instance inst;
        if (cfg.mode == "split") inst.regions = split_regions(cfg.n, rng);
        else if (cfg.mode == "staircase") inst.regions = staircase_regions(cfg.n, rng);
        else inst.regions = gadget_regions(cfg.n, rng);
        for (const Region& r : inst.regions)
            inst.points.push_back(place_point(r, cfg.point_mode, rng));
        if (validate_instance(inst).ok()) return inst;
    }
    throw GenerationRetryExceeded("could not generate a valid instance for seed " +
                                  std::to_string(cfg.seed));
}

}  // namespace frontier
