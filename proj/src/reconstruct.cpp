#include "frontier/reconstruct.h"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>

#include "frontier/errors.h"
#include "frontier/visibility.h"

namespace frontier {

RetrievalOracle::RetrievalOracle(const Instance& instance, const TruncatedSet& ts)
    : instance_(&instance), ts_(&ts) {}

Point RetrievalOracle::point_for(int truncated_index) const {
    if (truncated_index < 0 || truncated_index >= static_cast<int>(ts_->origin.size()))
        throw OracleContainmentViolation("retrieval index " + std::to_string(truncated_index) +
                                         " out of range");
    const int origin = ts_->origin[truncated_index];
    if (origin < 0 || origin >= static_cast<int>(instance_->points.size()))
        throw OracleContainmentViolation("no hidden point for region '" +
                                         ts_->regions[truncated_index].id + "'");
    const Point p = instance_->points[origin];
    if (!instance_->regions[origin].contains(p))
        throw OracleContainmentViolation("point for region '" + instance_->regions[origin].id +
                                         "' lies outside the region");
    return p;
}

std::size_t galloping_prefix_search(std::size_t len,
                                    const std::function<bool(std::size_t)>& pred,
                                    CostLedger& ledger, bool debug_check) {
    if (debug_check) {
        bool seen_false = false;
        for (std::size_t k = 0; k < len; ++k) {
            if (!pred(k)) seen_false = true;
            else if (seen_false)
                throw PredicateNotMonotone("galloping predicate is not a clean prefix");
        }
    }
    if (len == 0) return 0;
    const auto eval = [&](std::size_t k) {
        ++ledger.predicate_evals;
        return pred(k);
    };
    std::size_t probe = 0;           // next probe position: 0, 1, 3, 7, ...
    std::size_t true_end = 0;        // [0, true_end) known true
    for (;;) {
        const std::size_t pos = std::min(probe, len - 1);
        if (eval(pos)) {
            true_end = pos + 1;
            if (pos == len - 1) return len;
            probe = probe * 2 + 1;
        } else {
            std::size_t lo = true_end, hi = pos;
            while (lo < hi) {
                const std::size_t mid = lo + (hi - lo) / 2;
                if (eval(mid)) lo = mid + 1;
                else hi = mid;
            }
            return lo;
        }
    }
}

namespace {

constexpr int kNone = -1;
constexpr int kUnset = -2;

Point max_x_point(const Point& a, const Point& b) { return b.x > a.x ? b : a; }
Point max_y_point(const Point& a, const Point& b) { return b.y > a.y ? b : a; }

// Reference to the running xMax/yMax witness for one side of a subproblem:
// a point value accumulated so far plus at most one adjacent region whose
// point still has to be folded in when the subproblem is processed.
struct TrackerRef {
    Point pt{};
    int aux = kNone;  // canonical index, retrieved at processing time
};

struct Subproblem {
    int lo = kNone;
    int hi = kNone;
    TrackerRef left, right;
    int comp = kNone;
};

class Reconstructor {
public:
    Reconstructor(const AuxStructure& aux, const RetrievalOracle& oracle,
                  const ReconstructOptions& opts)
        : aux_(aux),
          oracle_(oracle),
          opts_(opts),
          back_ref_(aux.g_canon.back_ref),
          fwd_ref_(aux.g_canon.fwd_ref),
          f_memo_(aux.cs.size(), kUnset),
          g_memo_(aux.cs.size(), kUnset),
          replaced_(aux.cs.size(), false),
          tested_(aux.cs.size(), false),
          deferred_flag_(aux.cs.size(), false),
          is_separator_(aux.cs.size(), false),
          rng_(opts.seed) {
        for (int s : aux_.cs.separators) is_separator_[s] = true;
    }

    std::pair<ImplicitFront, CostLedger> run() {
        for (int s : aux_.cs.separators)
            add_entry({FrontEntry::Kind::unretrieved, aux_.cs.trunc_of[s],
                       aux_.cs.trunc_of[s], Point{}});
        for (int comp = 0; comp < static_cast<int>(aux_.cs.components.size()); ++comp) {
            seed(comp);
            while (!queue_.empty()) process(pop());
            drain_deferred(comp);
        }
        ImplicitFront front;
        int prev_last = kNone;
        for (const auto& [first, entry] : entries_) {
            if (first <= prev_last)
                throw InvariantViolation("front entries overlap");
            prev_last = entry.last;
            front.entries.push_back(entry);
        }
        return {std::move(front), ledger_};
    }

private:
    // --- region roles -----------------------------------------------------

    bool is_compound(int c) const { return aux_.cs.is_compound(c); }
    bool is_sentinel(int c) const {
        return aux_.cs.regions[c].kind == RegionKind::sentinel;
    }
    bool is_anchor(int c) const { return is_sentinel(c) || is_separator_[c]; }
    bool is_plain(int c) const { return !is_compound(c) && !is_anchor(c); }

    const Region& region(int c) const { return aux_.cs.regions[c]; }

    // Inert stand-in point for an anchor: a sentinel's corner, or a
    // separator's bottom-left vertex. Neither can dominate any point of a
    // respecting assignment, so they are safe witness seeds.
    Point inert_point(int c) const {
        const Region& r = region(c);
        return r.bottom_left();
    }

    // A region is replaced once its point has been retrieved as a subproblem
    // boundary: from then on the region participates in the evolving set as
    // that point. Witness retrievals (tracker references) reveal a point
    // without replacing the region, so they must not affect source tests.
    bool replaced(int c) const { return is_plain(c) && replaced_[c]; }

    Point retrieve_trunc(int t) {
        auto it = cache_.find(t);
        if (it != cache_.end()) return it->second;
        const Point p = oracle_.point_for(t);
        ++ledger_.retrievals;
        cache_.emplace(t, p);
        return p;
    }

    Point retrieve_plain(int c) { return retrieve_trunc(aux_.cs.trunc_of[c]); }

    Point boundary_point(int c) {
        return is_anchor(c) ? inert_point(c) : retrieve_plain(c);
    }

    Point tracker_value_x(const TrackerRef& t) {
        Point v = t.pt;
        if (t.aux != kNone) v = max_x_point(v, retrieve_plain(t.aux));
        return v;
    }

    Point tracker_value_y(const TrackerRef& t) {
        Point v = t.pt;
        if (t.aux != kNone) v = max_y_point(v, retrieve_plain(t.aux));
        return v;
    }

    // --- front assembly ---------------------------------------------------

    void add_entry(FrontEntry e) {
        auto [it, fresh] = entries_.emplace(e.first, e);
        (void)it;
        if (!fresh) throw InvariantViolation("duplicate front entry");
    }

    // Decides once per region whether its point is on the front, using the
    // two running witnesses: the xMax point left of it and the yMax point
    // right of it.
    void membership(int c, const Point& p, const Point& wl, const Point& wr) {
        if (tested_[c]) return;
        tested_[c] = true;
        ++ledger_.step_ops;
        const bool dead = (wl != p && dominates(wl, p)) || (wr != p && dominates(wr, p));
        if (!dead)
            add_entry({FrontEntry::Kind::retrieved, aux_.cs.trunc_of[c],
                       aux_.cs.trunc_of[c], p});
    }

    // --- compound bookkeeping --------------------------------------------

    void defer_compound(int c, int comp) {
        if (deferred_flag_[c]) return;
        deferred_flag_[c] = true;
        deferred_.push_back(c);
        const auto [lo, hi] = aux_.cs.components[comp];
        compound_left_[c] = inert_point(lo);
        compound_right_[c] = inert_point(hi);
    }

    void attach_left(int c, const Point& v, int comp) {
        ++ledger_.step_ops;
        defer_compound(c, comp);
        compound_left_[c] = max_x_point(compound_left_[c], v);
    }

    void attach_right(int c, const Point& v, int comp) {
        ++ledger_.step_ops;
        defer_compound(c, comp);
        compound_right_[c] = max_y_point(compound_right_[c], v);
    }

    // --- boundary phase (shared by full steps and adjacent pairs) ---------

    struct SideVals {
        Point lv, rv;  // witnesses excluding the boundary points
        Point px, py;  // witnesses including them
    };

    SideVals boundary_phase(int i, int j, const TrackerRef& L, const TrackerRef& R,
                            int comp) {
        SideVals sv;
        sv.lv = tracker_value_x(L);
        sv.rv = tracker_value_y(R);
        Point pi{}, pj{};
        bool pi_known = false, pj_known = false;
        if (!is_compound(i)) {
            pi = boundary_point(i);
            pi_known = true;
            if (is_plain(i)) replaced_[i] = true;
        }
        if (!is_compound(j)) {
            pj = boundary_point(j);
            pj_known = true;
            if (is_plain(j)) replaced_[j] = true;
        }
        sv.px = pi_known ? max_x_point(sv.lv, pi) : sv.lv;
        sv.py = pj_known ? max_y_point(sv.rv, pj) : sv.rv;
        if (is_plain(i)) membership(i, pi, sv.lv, sv.py);
        if (is_plain(j)) membership(j, pj, sv.px, sv.rv);
        if (is_compound(i)) attach_right(i, sv.py, comp);
        if (is_compound(j)) attach_left(j, sv.px, comp);
        return sv;
    }

    void handle_pair(int c, int d, const TrackerRef& L, const TrackerRef& R, int comp) {
        ++ledger_.step_ops;
        boundary_phase(c, d, L, R, comp);
    }

    // --- f / g searches ---------------------------------------------------

    int find_f(int i, const Point& px, int j) {
        int f;
        if (f_memo_[i] != kUnset) {
            f = f_memo_[i];
        } else {
            const auto& V = aux_.g_canon.V[i];
            const std::size_t succ = V.size() - 1;  // V[0] == i
            const std::size_t k = galloping_prefix_search(
                succ,
                [&](std::size_t r) { return dominates_region(px, region(V[r + 1])); },
                ledger_, opts_.debug_assert);
            f = (k == succ) ? aux_.g_canon.v_next[i] : V[k + 1];
            f_memo_[i] = f;
        }
        // Everything in (i, f) is dominated, so f's last vertical dependency
        // is resolved — but only when f still lies inside this subproblem.
        if (f != kNone && f <= j) back_ref_[f] = kNone;
        return f == kNone ? std::numeric_limits<int>::max() : f;
    }

    int find_g(int j, const Point& py, int i) {
        int g;
        if (g_memo_[j] != kUnset) {
            g = g_memo_[j];
        } else {
            const auto& H = aux_.g_canon.H[j];
            const std::size_t pred = H.size() - 1;  // H.back() == j
            const std::size_t k = galloping_prefix_search(
                pred,
                [&](std::size_t r) {
                    return dominates_region(py, region(H[pred - 1 - r]));
                },
                ledger_, opts_.debug_assert);
            g = (k == pred) ? aux_.g_canon.h_prev[j] : H[pred - 1 - k];
            g_memo_[j] = g;
        }
        if (g != kNone && g >= i) fwd_ref_[g] = kNone;
        return g == kNone ? std::numeric_limits<int>::min() : g;
    }

    bool source_test_f(int f, int g) {
        ++ledger_.step_ops;
        const int t = fwd_ref_[f];
        return t == kNone || replaced(t) || t > g;
    }

    bool source_test_g(int g, int f) {
        ++ledger_.step_ops;
        const int t = back_ref_[g];
        return t == kNone || replaced(t) || t < f;
    }

    // --- subproblem tree navigation --------------------------------------

    // Lowest tree node whose interval contains [i, j].
    std::pair<int, int> locate_node(int i, int j, int comp) {
        int ti, ni;
        if (aux_.attr_start[i].valid()) {
            ti = aux_.attr_start[i].tree;
            ni = aux_.attr_start[i].node;
        } else {
            ti = comp;
            ni = 0;
        }
        const SubproblemTree& tree = aux_.trees[ti];
        while (!(tree.nodes[ni].lo <= i && j <= tree.nodes[ni].hi)) {
            ++ledger_.step_ops;
            ni = tree.nodes[ni].parent;
            if (ni < 0) throw InvariantViolation("subproblem escapes its tree");
        }
        for (;;) {
            ++ledger_.step_ops;
            const auto& node = tree.nodes[ni];
            if (node.children.empty()) break;
            // children tile [lo,hi]; the only child that can contain [i,j]
            // is the last one whose lo is <= i
            int a = 0, b = static_cast<int>(node.children.size()) - 1;
            while (a < b) {
                ++ledger_.step_ops;
                const int mid = (a + b + 1) / 2;
                if (tree.nodes[node.children[mid]].lo <= i) a = mid;
                else b = mid - 1;
            }
            const auto& cand = tree.nodes[node.children[a]];
            if (cand.lo <= i && j <= cand.hi) ni = node.children[a];
            else break;
        }
        return {ti, ni};
    }

    bool alive_by_witnesses(int c, const Point& px, const Point& py) {
        ++ledger_.step_ops;
        return !dominates_region(px, region(c)) && !dominates_region(py, region(c));
    }

    void collect_child_boundaries(int i, int j, int f, int g, const Point& px,
                                  const Point& py, int comp, std::vector<int>& out) {
        const auto [ti, ni] = locate_node(i, j, comp);
        const SubproblemTree& tree = aux_.trees[ti];
        const auto& node = tree.nodes[ni];
        for (std::size_t t = 0; t + 1 < node.children.size(); ++t) {
            const int b = tree.nodes[node.children[t]].hi;
            ++ledger_.step_ops;
            if (b <= f) continue;
            if (b >= g) break;
            if (alive_by_witnesses(b, px, py)) out.push_back(b);
        }
    }

    // --- emission ---------------------------------------------------------

    int aux_left_of(int c, int i, const Point& px, const Point& py) {
        const int cand = c - 1;
        if (cand <= i || !is_plain(cand)) return kNone;
        if (aux_.g_canon.is_sink(cand)) return kNone;  // sink points are inert
        if (!alive_by_witnesses(cand, px, py)) return kNone;
        return cand;
    }

    int aux_right_of(int d, int j, const Point& px, const Point& py) {
        const int cand = d + 1;
        if (cand >= j || !is_plain(cand)) return kNone;
        if (aux_.g_canon.is_sink(cand)) return kNone;
        if (!alive_by_witnesses(cand, px, py)) return kNone;
        return cand;
    }

    void dispatch(const std::vector<int>& bounds, int i, int j, const SideVals& sv,
                  int comp) {
        for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
            const int c = bounds[t], d = bounds[t + 1];
            ++ledger_.step_ops;
            TrackerRef L = (c == i)
                               ? TrackerRef{sv.lv, kNone}
                               : TrackerRef{sv.px, aux_left_of(c, i, sv.px, sv.py)};
            TrackerRef R = (d == j)
                               ? TrackerRef{sv.rv, kNone}
                               : TrackerRef{sv.py, aux_right_of(d, j, sv.px, sv.py)};
            if (d == c + 1) handle_pair(c, d, L, R, comp);
            else queue_.push_back({c, d, L, R, comp});
        }
    }

    void process(const Subproblem& sp) {
        ++ledger_.step_ops;
        const int i = sp.lo, j = sp.hi;
        assert(j >= i + 2);
        const SideVals sv = boundary_phase(i, j, sp.left, sp.right, sp.comp);
        const int f = find_f(i, sv.px, j);
        const int g = find_g(j, sv.py, i);
        if (f > g) {
            if (opts_.debug_assert) check_emission(i, j, sp.comp, {}, true);
            return;
        }
        std::vector<int> sources;
        if (f == g) {
            sources.push_back(f);
        } else {
            collect_child_boundaries(i, j, f, g, sv.px, sv.py, sp.comp, sources);
            if (source_test_f(f, g)) sources.push_back(f);
            if (source_test_g(g, f)) sources.push_back(g);
            std::sort(sources.begin(), sources.end());
            sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
            if (sources.empty())
                throw InvariantViolation("open subproblem identified no sources");
        }
        std::vector<int> bounds;
        bounds.push_back(i);
        bounds.insert(bounds.end(), sources.begin(), sources.end());
        bounds.push_back(j);
        if (opts_.debug_assert) check_emission(i, j, sp.comp, bounds, false);
        dispatch(bounds, i, j, sv, sp.comp);
    }

    // --- seeding ----------------------------------------------------------

    void seed(int comp) {
        const auto [lo, hi] = aux_.cs.components[comp];
        const SubproblemTree& tree = aux_.trees[comp];
        const Point la = inert_point(lo), ra = inert_point(hi);
        std::vector<int> bounds;
        bounds.push_back(lo);
        for (int cid : tree.root().children) bounds.push_back(tree.nodes[cid].hi);
        if (opts_.debug_assert) check_emission(lo, hi, comp, bounds, false);
        for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
            const int c = bounds[t], d = bounds[t + 1];
            TrackerRef L{la, kNone}, R{ra, kNone};
            if (c != lo && is_plain(c - 1) && c - 1 != lo && !aux_.g_canon.is_sink(c - 1))
                L.aux = c - 1;
            if (d != hi && is_plain(d + 1) && d + 1 != hi && !aux_.g_canon.is_sink(d + 1))
                R.aux = d + 1;
            if (d == c + 1) handle_pair(c, d, L, R, comp);
            else queue_.push_back({c, d, L, R, comp});
        }
    }

    Subproblem pop() {
        std::size_t idx = 0;
        switch (opts_.order) {
            case QueueOrder::fifo: idx = 0; break;
            case QueueOrder::lifo: idx = queue_.size() - 1; break;
            case QueueOrder::random: {
                std::uniform_int_distribution<std::size_t> d(0, queue_.size() - 1);
                idx = d(rng_);
                break;
            }
        }
        Subproblem sp = queue_[idx];
        queue_.erase(queue_.begin() + static_cast<std::ptrdiff_t>(idx));
        return sp;
    }

    // --- compound drain ---------------------------------------------------

    const Region& member_region(int t) const { return aux_.ts.regions[t]; }

    void drain_deferred(int comp) {
        (void)comp;
        for (int c : deferred_) drain_one(c);
        deferred_.clear();
    }

    void drain_one(int c) {
        const auto& mem = aux_.cs.members[c];
        const std::size_t k = mem.size();
        const Point lp = compound_left_[c], rp = compound_right_[c];
        const std::size_t pre = galloping_prefix_search(
            k, [&](std::size_t r) { return dominates_region(lp, member_region(mem[r])); },
            ledger_, opts_.debug_assert);
        const std::size_t suf = galloping_prefix_search(
            k,
            [&](std::size_t r) {
                return dominates_region(rp, member_region(mem[k - 1 - r]));
            },
            ledger_, opts_.debug_assert);
        const long first = static_cast<long>(pre);
        const long last = static_cast<long>(k) - static_cast<long>(suf) - 1;
        if (first > last) return;  // every member dominated

        // Members have pairwise-disjoint x- and y-projections, so at most one
        // straddles the vertical line through the left witness and at most one
        // the horizontal line through the right witness; only those two can be
        // partially dominated and need their points checked explicitly.
        std::set<long> straddle;
        for (long t = first; t <= last; ++t) {
            const Region& m = member_region(mem[static_cast<std::size_t>(t)]);
            ++ledger_.step_ops;
            const bool left_part = dominates(lp, m.bottom_left()) && !dominates_region(lp, m);
            const bool right_part = dominates(rp, m.bottom_left()) && !dominates_region(rp, m);
            if (left_part || right_part) straddle.insert(t);
        }
        if (straddle.size() > 2)
            throw InvariantViolation("more than two partially dominated members");

        long run_start = kNone;
        const auto flush_run = [&](long end) {
            if (run_start == kNone) return;
            add_entry({FrontEntry::Kind::unretrieved_range,
                       mem[static_cast<std::size_t>(run_start)],
                       mem[static_cast<std::size_t>(end)], Point{}});
            run_start = kNone;
        };
        for (long t = first; t <= last; ++t) {
            if (straddle.count(t)) {
                flush_run(t - 1);
                const Point p = retrieve_trunc(mem[static_cast<std::size_t>(t)]);
                ++ledger_.step_ops;
                const bool dead = dominates(lp, p) || dominates(rp, p);
                if (!dead)
                    add_entry({FrontEntry::Kind::retrieved, mem[static_cast<std::size_t>(t)],
                               mem[static_cast<std::size_t>(t)], p});
            } else if (run_start == kNone) {
                run_start = t;
            }
        }
        flush_run(last);
    }

    // --- debug: brute-force emission equivalence --------------------------

    // Rebuilds the dependency graph of the surviving extents (replaced
    // regions have collapsed to their retrieved points, everything else keeps
    // its rectangle) and checks that the emitted boundaries within [i,j] are
    // exactly the surviving consecutive sources. On a terminated branch
    // checks instead that no alive unreplaced region was abandoned.
    void check_emission(int i, int j, int comp, const std::vector<int>& bounds,
                        bool terminated) {
        const auto [clo, chi] = aux_.cs.components[comp];
        std::vector<Region> cur;  // current extent of every component region
        for (int c = clo; c <= chi; ++c) {
            Region r = region(c);
            if (replaced(c)) {
                const Point p = cache_.at(aux_.cs.trunc_of[c]);
                r.xmin = r.xmax = p.x;
                r.ymin = r.ymax = p.y;
                r.kind = RegionKind::point;
            }
            cur.push_back(r);
        }
        // re-truncation: drop any extent whose top-right corner is dominated
        // by another extent's bottom-left corner (one pass reaches the
        // fixpoint: a witness's own witness dominates transitively)
        std::vector<Region> ext;
        std::vector<int> canon_of_ext;
        std::vector<char> alive(aux_.cs.size(), 0);
        for (int c = clo; c <= chi; ++c) {
            bool dead = false;
            for (int w = clo; w <= chi && !dead; ++w)
                if (w != c &&
                    dominates(cur[w - clo].bottom_left(), cur[c - clo].top_right()))
                    dead = true;
            if (dead) continue;
            alive[c] = 1;
            ext.push_back(cur[c - clo]);
            canon_of_ext.push_back(c);
        }
        if (terminated) {
            for (int c = i + 1; c < j; ++c)
                if (alive[c] && !replaced(c))
                    throw InvariantViolation("terminated branch abandons region " +
                                             region(c).id);
            return;
        }
        const DependencyGraph g = build_visibility_bruteforce(ext);
        std::vector<int> expected;
        expected.push_back(i);
        for (std::size_t l = 0; l < ext.size(); ++l) {
            const int c = canon_of_ext[l];
            if (c <= i || c >= j) continue;
            // source within (i,j): no incoming arrow from an alive region
            // strictly inside
            bool incoming = false;
            for (std::size_t w = 0; w < ext.size(); ++w) {
                const int cw = canon_of_ext[w];
                if (cw <= i || cw >= j || w == l) continue;
                const auto& Vw = g.V[w];  // vertical arrows out of w
                const auto& Hw = g.H[w];  // horizontal arrows out of w
                if (std::find(Vw.begin() + 1, Vw.end(), static_cast<int>(l)) != Vw.end() ||
                    std::find(Hw.begin(), Hw.end() - 1, static_cast<int>(l)) != Hw.end() - 1) {
                    incoming = true;
                    break;
                }
            }
            if (!incoming) expected.push_back(c);
        }
        expected.push_back(j);
        if (expected != bounds) {
            std::string msg = "emitted boundaries diverge from brute-force sources in [" +
                              std::to_string(i) + "," + std::to_string(j) + "]: expected {";
            for (int c : expected) msg += " " + std::to_string(c);
            msg += " } got {";
            for (int c : bounds) msg += " " + std::to_string(c);
            msg += " }";
            throw InvariantViolation(msg);
        }
    }

    // --- members ----------------------------------------------------------

    const AuxStructure& aux_;
    const RetrievalOracle& oracle_;
    ReconstructOptions opts_;
    CostLedger ledger_;

    std::vector<int> back_ref_, fwd_ref_;  // mutable copies, cleared as resolved
    std::vector<int> f_memo_, g_memo_;
    std::vector<char> replaced_;
    std::vector<char> tested_;
    std::vector<char> deferred_flag_;
    std::vector<char> is_separator_;

    std::map<int, Point> cache_;  // truncated index -> retrieved point
    std::map<int, Point> compound_left_, compound_right_;
    std::vector<int> deferred_;
    std::deque<Subproblem> queue_;
    std::map<int, FrontEntry> entries_;
    std::mt19937_64 rng_;
};

}  // namespace

std::pair<ImplicitFront, CostLedger> reconstruct(const AuxStructure& aux,
                                                 const RetrievalOracle& oracle,
                                                 const ReconstructOptions& opts) {
    Reconstructor r(aux, oracle, opts);
    return r.run();
}

Staircase resolve(const ImplicitFront& front, const RetrievalOracle& oracle) {
    Staircase out;
    for (const FrontEntry& e : front.entries) {
        if (e.kind == FrontEntry::Kind::retrieved) {
            out.vertices.push_back(e.point);
        } else {
            for (int t = e.first; t <= e.last; ++t)
                out.vertices.push_back(oracle.point_for(t));
        }
    }
    for (std::size_t k = 1; k < out.vertices.size(); ++k) {
        if (!(out.vertices[k - 1].x < out.vertices[k].x &&
              out.vertices[k - 1].y > out.vertices[k].y))
            throw ResolutionMismatch("resolved points do not form a staircase");
    }
    return out;
}

}  // namespace frontier
