#include "frontier/io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace frontier {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(RegionKind k) {
    switch (k) {
        case RegionKind::rectangle: return "rectangle";
        case RegionKind::point: return "point";
        case RegionKind::sentinel: return "sentinel";
    }
    return "rectangle";
}

RegionKind kind_from(const std::string& s) {
    if (s == "rectangle") return RegionKind::rectangle;
    if (s == "point") return RegionKind::point;
    if (s == "sentinel") return RegionKind::sentinel;
    throw std::runtime_error("unknown region kind '" + s + "'");
}

ordered_json graph_to_json(const DependencyGraph& g) {
    ordered_json j;
    j["V"] = g.V;
    j["H"] = g.H;
    j["v_next"] = g.v_next;
    j["h_prev"] = g.h_prev;
    j["back_ref"] = g.back_ref;
    j["fwd_ref"] = g.fwd_ref;
    return j;
}

DependencyGraph graph_from_json(const ordered_json& j) {
    DependencyGraph g;
    g.V = j.at("V").get<std::vector<std::vector<int>>>();
    g.H = j.at("H").get<std::vector<std::vector<int>>>();
    g.v_next = j.at("v_next").get<std::vector<int>>();
    g.h_prev = j.at("h_prev").get<std::vector<int>>();
    g.back_ref = j.at("back_ref").get<std::vector<int>>();
    g.fwd_ref = j.at("fwd_ref").get<std::vector<int>>();
    return g;
}

ordered_json region_core(const Region& r) {
    ordered_json j;
    j["id"] = r.id;
    j["kind"] = kind_name(r.kind);
    j["xmin"] = r.xmin;
    j["ymin"] = r.ymin;
    j["xmax"] = r.xmax;
    j["ymax"] = r.ymax;
    return j;
}

Region region_core_from(const ordered_json& j) {
    Region r;
    r.id = j.at("id").get<std::string>();
    r.kind = kind_from(j.at("kind").get<std::string>());
    r.xmin = j.at("xmin").get<double>();
    r.ymin = j.at("ymin").get<double>();
    r.xmax = j.at("xmax").get<double>();
    r.ymax = j.at("ymax").get<double>();
    return r;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    ordered_json j;
    j["regions"] = ordered_json::array();
    for (const Region& r : inst.regions) {
        ordered_json jr;
        jr["id"] = r.id;
        jr["xmin"] = r.xmin;
        jr["ymin"] = r.ymin;
        jr["xmax"] = r.xmax;
        jr["ymax"] = r.ymax;
        j["regions"].push_back(jr);
    }
    j["points"] = ordered_json::array();
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        ordered_json jp;
        jp["id"] = inst.regions.at(k).id;
        jp["x"] = inst.points[k].x;
        jp["y"] = inst.points[k].y;
        j["points"].push_back(jp);
    }
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text,
                            std::vector<std::string>* link_errors) {
    Instance inst;
    // Any parse failure or shape mismatch surfaces as std::runtime_error;
    // only id-pairing problems go through link_errors.
    try {
        const ordered_json j = ordered_json::parse(text);
        std::map<std::string, Point> by_id;
        for (const auto& jp : j.at("points")) {
            const std::string id = jp.at("id").get<std::string>();
            if (by_id.count(id) && link_errors)
                link_errors->push_back("duplicate point id '" + id + "'");
            by_id[id] = {jp.at("x").get<double>(), jp.at("y").get<double>()};
        }
        std::map<std::string, int> region_ids;
        for (const auto& jr : j.at("regions")) {
            Region r;
            r.id = jr.at("id").get<std::string>();
            r.xmin = jr.at("xmin").get<double>();
            r.ymin = jr.at("ymin").get<double>();
            r.xmax = jr.at("xmax").get<double>();
            r.ymax = jr.at("ymax").get<double>();
            r.kind = r.is_degenerate() ? RegionKind::point : RegionKind::rectangle;
            if (++region_ids[r.id] > 1 && link_errors)
                link_errors->push_back("duplicate region id '" + r.id + "'");
            inst.regions.push_back(r);
            auto it = by_id.find(r.id);
            if (it == by_id.end()) {
                if (link_errors)
                    link_errors->push_back("region '" + r.id + "' has no point");
                inst.points.push_back({r.xmin, r.ymin});
            } else {
                inst.points.push_back(it->second);
                by_id.erase(it);
            }
        }
        if (link_errors)
            for (const auto& [id, p] : by_id) {
                (void)p;
                link_errors->push_back("point '" + id + "' has no region");
            }
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
    return inst;
}

std::string aux_to_json(const AuxStructure& aux) {
    ordered_json j;

    ordered_json jts;
    jts["regions"] = ordered_json::array();
    for (std::size_t t = 0; t < aux.ts.regions.size(); ++t) {
        ordered_json jr = region_core(aux.ts.regions[t]);
        jr["flagged"] = static_cast<bool>(aux.ts.flagged[t]);
        jr["origin"] = aux.ts.origin[t];
        jts["regions"].push_back(jr);
    }
    jts["boundary"] = ordered_json::array();
    for (const Point& p : aux.ts.boundary.vertices)
        jts["boundary"].push_back(ordered_json::array({p.x, p.y}));
    j["truncated"] = jts;
    j["graph"] = graph_to_json(aux.g_trunc);

    ordered_json jcs;
    jcs["regions"] = ordered_json::array();
    for (std::size_t c = 0; c < aux.cs.regions.size(); ++c) {
        ordered_json jr = region_core(aux.cs.regions[c]);
        jr["trunc_of"] = aux.cs.trunc_of[c];
        jr["members"] = aux.cs.members[c];
        jcs["regions"].push_back(jr);
    }
    jcs["separators"] = aux.cs.separators;
    jcs["components"] = ordered_json::array();
    for (const auto& [lo, hi] : aux.cs.components)
        jcs["components"].push_back(ordered_json::array({lo, hi}));
    j["canonical"] = jcs;
    j["canonical_graph"] = graph_to_json(aux.g_canon);

    j["trees"] = ordered_json::array();
    for (const SubproblemTree& tree : aux.trees) {
        ordered_json jt = ordered_json::array();
        for (const auto& node : tree.nodes) {
            ordered_json jn;
            jn["lo"] = node.lo;
            jn["hi"] = node.hi;
            jn["parent"] = node.parent;
            jn["children"] = node.children;
            jt.push_back(jn);
        }
        j["trees"].push_back(jt);
    }
    j["tree_of"] = aux.tree_of;
    const auto refs = [](const std::vector<NodeRef>& v) {
        ordered_json out = ordered_json::array();
        for (const NodeRef& r : v) out.push_back(ordered_json::array({r.tree, r.node}));
        return out;
    };
    j["attr_start"] = refs(aux.attr_start);
    j["attr_end"] = refs(aux.attr_end);
    return j.dump(2) + "\n";
}

AuxStructure aux_from_json(const std::string& text) {
    AuxStructure aux;
    try {
    const ordered_json j = ordered_json::parse(text);
    for (const auto& jr : j.at("truncated").at("regions")) {
        aux.ts.regions.push_back(region_core_from(jr));
        aux.ts.flagged.push_back(jr.at("flagged").get<bool>());
        aux.ts.origin.push_back(jr.at("origin").get<int>());
    }
    for (const auto& jp : j.at("truncated").at("boundary"))
        aux.ts.boundary.vertices.push_back({jp.at(0).get<double>(), jp.at(1).get<double>()});
    aux.g_trunc = graph_from_json(j.at("graph"));

    for (const auto& jr : j.at("canonical").at("regions")) {
        aux.cs.regions.push_back(region_core_from(jr));
        aux.cs.trunc_of.push_back(jr.at("trunc_of").get<int>());
        aux.cs.members.push_back(jr.at("members").get<std::vector<int>>());
    }
    aux.cs.separators = j.at("canonical").at("separators").get<std::vector<int>>();
    for (const auto& jc : j.at("canonical").at("components"))
        aux.cs.components.emplace_back(jc.at(0).get<int>(), jc.at(1).get<int>());
    aux.cs.canon_of.assign(aux.ts.regions.size(), -1);
    for (std::size_t c = 0; c < aux.cs.regions.size(); ++c) {
        if (aux.cs.trunc_of[c] >= 0) aux.cs.canon_of[aux.cs.trunc_of[c]] = static_cast<int>(c);
        for (int m : aux.cs.members[c]) aux.cs.canon_of[m] = static_cast<int>(c);
    }
    aux.g_canon = graph_from_json(j.at("canonical_graph"));

    for (const auto& jt : j.at("trees")) {
        SubproblemTree tree;
        for (const auto& jn : jt) {
            SubproblemTree::Node node;
            node.lo = jn.at("lo").get<int>();
            node.hi = jn.at("hi").get<int>();
            node.parent = jn.at("parent").get<int>();
            node.children = jn.at("children").get<std::vector<int>>();
            tree.nodes.push_back(node);
        }
        aux.trees.push_back(tree);
    }
    aux.tree_of = j.at("tree_of").get<std::vector<int>>();
    const auto refs = [](const ordered_json& arr) {
        std::vector<NodeRef> out;
        for (const auto& jr : arr) out.push_back({jr.at(0).get<int>(), jr.at(1).get<int>()});
        return out;
    };
    aux.attr_start = refs(j.at("attr_start"));
    aux.attr_end = refs(j.at("attr_end"));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("aux parse error: ") + e.what());
    }
    return aux;
}

std::string run_report_json(const ImplicitFront& front, const CostLedger& ledger,
                            const ParetoCostReport& report) {
    ordered_json j;
    j["front"] = ordered_json::array();
    for (const FrontEntry& e : front.entries) {
        ordered_json je;
        switch (e.kind) {
            case FrontEntry::Kind::retrieved:
                je["kind"] = "retrieved";
                je["index"] = e.first;
                je["point"] = ordered_json::array({e.point.x, e.point.y});
                break;
            case FrontEntry::Kind::unretrieved:
                je["kind"] = "unretrieved";
                je["index"] = e.first;
                break;
            case FrontEntry::Kind::unretrieved_range:
                je["kind"] = "range";
                je["first"] = e.first;
                je["last"] = e.last;
                break;
        }
        j["front"].push_back(je);
    }
    j["ledger"] = {{"retrievals", ledger.retrievals},
                   {"predicate_evals", ledger.predicate_evals},
                   {"step_ops", ledger.step_ops}};
    j["tilde_size"] = report.tilde_members.size();
    j["cp"] = {{"C", report.cost_c}, {"value", report.cp}};
    return j.dump(2) + "\n";
}

std::string bound_report_json(const ParetoCostReport& report, int retrieval_lb,
                              long long front_types, double ratio_r, double ratio_p) {
    ordered_json j;
    j["tilde"] = ordered_json::array();
    for (const TildeMember& m : report.tilde_members) j["tilde"].push_back(m.index);
    j["cp"] = report.cp;
    j["retrieval_lb"] = retrieval_lb;
    if (front_types < 0) j["front_types"] = nullptr;
    else j["front_types"] = front_types;
    j["ratios"] = {{"retrieval", ratio_r}, {"predicates", ratio_p}};
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace frontier
