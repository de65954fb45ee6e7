#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.h"
#include "frontier/generator.h"
#include "frontier/io.h"
#include "frontier/preprocess.h"
#include "frontier/truncate.h"
#include "frontier/visibility.h"

using namespace frontier;

TEST_CASE("generated instances are always valid") {
    for (const char* mode : {"split", "staircase", "gadget-figs"}) {
        for (const char* pm : {"corners", "uniform", "adversarial-bl"}) {
            for (std::uint64_t seed = 1; seed <= 12; ++seed) {
                GeneratorConfig cfg;
                cfg.seed = seed;
                cfg.n = 5 + static_cast<int>(seed % 20);
                cfg.mode = mode;
                cfg.point_mode = pm;
                const Instance inst = generate(cfg);
                CAPTURE(mode);
                CAPTURE(pm);
                CAPTURE(seed);
                CHECK(static_cast<int>(inst.regions.size()) == cfg.n);
                CHECK(inst.points.size() == inst.regions.size());
                CHECK(validate_instance(inst).ok());
            }
        }
    }
}

TEST_CASE("generation is deterministic per seed") {
    GeneratorConfig cfg;
    cfg.seed = 42;
    cfg.n = 30;
    cfg.mode = "gadget-figs";
    cfg.point_mode = "uniform";
    CHECK(instance_to_json(generate(cfg)) == instance_to_json(generate(cfg)));

    GeneratorConfig other = cfg;
    other.seed = 43;
    CHECK(instance_to_json(generate(cfg)) != instance_to_json(generate(other)));
}

TEST_CASE("unknown mode names are rejected") {
    GeneratorConfig cfg;
    cfg.mode = "spiral";
    CHECK_THROWS_AS(generate(cfg), std::invalid_argument);
    cfg.mode = "split";
    cfg.point_mode = "centroid";
    CHECK_THROWS_AS(generate(cfg), std::invalid_argument);
}

TEST_CASE("staircase mode generates edgeless positive instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.n = 16;
        cfg.mode = "staircase";
        const Instance inst = generate(cfg);
        for (RegionClass c : classify_regions(inst.regions)) {
            CHECK(c == RegionClass::positive);
        }
        const TruncatedSet ts = truncate_regions(inst.regions);
        const DependencyGraph g = build_visibility(ts.regions);
        for (int i = 0; i < static_cast<int>(ts.regions.size()); ++i) {
            CAPTURE(seed);
            CHECK(g.V[i] == std::vector<int>{i});
            CHECK(g.H[i] == std::vector<int>{i});
        }
    }
}

TEST_CASE("gadget mode produces compound regions") {
    bool found_compound = false;
    for (std::uint64_t seed = 1; seed <= 20 && !found_compound; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.n = 24;
        cfg.mode = "gadget-figs";
        const AuxStructure aux = preprocess(generate(cfg).regions);
        for (int c = 0; c < aux.cs.size(); ++c) {
            if (aux.cs.is_compound(c)) found_compound = true;
        }
    }
    CHECK(found_compound);
}

TEST_CASE("instance JSON round-trips byte-identically") {
    for (const char* mode : {"split", "staircase", "gadget-figs"}) {
        GeneratorConfig cfg;
        cfg.seed = 9;
        cfg.n = 17;
        cfg.mode = mode;
        const std::string once = instance_to_json(generate(cfg));
        std::vector<std::string> errs;
        const Instance back = instance_from_json(once, &errs);
        CHECK(errs.empty());
        CHECK(instance_to_json(back) == once);
    }
    // Hand fixture round-trip preserves coordinates exactly.
    const std::string trio = instance_to_json(fixtures::clipped_trio());
    const Instance back = instance_from_json(trio);
    REQUIRE(back.regions.size() == 3);
    CHECK(back.regions[1].xmin == 3);
    CHECK(back.points[2] == Point{5.5, 2.9});
}

TEST_CASE("instance linking problems are reported, not thrown") {
    const char* text = R"({
      "regions": [
        {"id": "A", "xmin": 0, "ymin": 0, "xmax": 1, "ymax": 1},
        {"id": "A", "xmin": 2, "ymin": 2, "xmax": 3, "ymax": 3},
        {"id": "B", "xmin": 4, "ymin": 4, "xmax": 5, "ymax": 5}
      ],
      "points": [
        {"id": "A", "x": 0.5, "y": 0.5},
        {"id": "A", "x": 0.6, "y": 0.6},
        {"id": "Z", "x": 9, "y": 9}
      ]
    })";
    std::vector<std::string> errs;
    const Instance inst = instance_from_json(text, &errs);
    CHECK(inst.regions.size() == 3);
    // The second region 'A' also lacks a point: the first one consumed the entry.
    REQUIRE(errs.size() == 5);
    CHECK(errs[0].find("duplicate point id 'A'") != std::string::npos);
    CHECK(errs[1].find("duplicate region id 'A'") != std::string::npos);
    CHECK(errs[2].find("region 'A' has no point") != std::string::npos);
    CHECK(errs[3].find("region 'B' has no point") != std::string::npos);
    CHECK(errs[4].find("point 'Z' has no region") != std::string::npos);
}

TEST_CASE("malformed instance text throws") {
    CHECK_THROWS_AS(instance_from_json("not json at all {"), std::runtime_error);
    CHECK_THROWS_AS(instance_from_json("{\"regions\": 5}"), std::runtime_error);
}

TEST_CASE("preprocessing cache round-trips byte-identically") {
    for (const Instance& inst :
         {fixtures::clipped_trio(), fixtures::spanner_low(), fixtures::staircase4()}) {
        const AuxStructure aux = preprocess(inst.regions);
        const std::string once = aux_to_json(aux);
        const AuxStructure back = aux_from_json(once);
        CHECK(aux_to_json(back) == once);
        // The cached structure is usable as-is.
        CHECK(back.ts.interior_count() == aux.ts.interior_count());
        CHECK(back.cs.size() == aux.cs.size());
        CHECK(back.trees.size() == aux.trees.size());
    }
    GeneratorConfig cfg;
    cfg.seed = 5;
    cfg.n = 40;
    cfg.mode = "gadget-figs";
    const AuxStructure aux = preprocess(generate(cfg).regions);
    CHECK(aux_to_json(aux_from_json(aux_to_json(aux))) == aux_to_json(aux));
}

TEST_CASE("report serializers emit the documented fields") {
    const Instance inst = fixtures::clipped_trio();
    const AuxStructure aux = preprocess(inst.regions);
    const RetrievalOracle oracle(inst, aux.ts);
    const auto [front, ledger] = reconstruct(aux, oracle);
    const ParetoCostReport rep =
        pareto_cost(aux.ts, aux.g_trunc, inst.points, 10.0);

    const auto run_doc = nlohmann::json::parse(run_report_json(front, ledger, rep));
    CHECK(run_doc.at("ledger").at("retrievals") == 3);
    CHECK(run_doc.at("front").size() == 2);
    CHECK(run_doc.at("front").at(0).at("kind") == "retrieved");
    CHECK(run_doc.at("tilde_size") == 3);
    CHECK(run_doc.at("cp").at("value") == 30.0);

    const auto bound_doc =
        nlohmann::json::parse(bound_report_json(rep, 1, 3, 8.0, 8.0));
    CHECK(bound_doc.at("retrieval_lb") == 1);
    CHECK(bound_doc.at("front_types") == 3);
    const auto null_doc =
        nlohmann::json::parse(bound_report_json(rep, 1, -1, 8.0, 8.0));
    CHECK(null_doc.at("front_types").is_null());
}
