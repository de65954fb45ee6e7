#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frontier/analysis.h"
#include "frontier/errors.h"
#include "frontier/generator.h"
#include "frontier/io.h"
#include "frontier/preprocess.h"
#include "frontier/svg.h"

namespace {

using namespace frontier;

constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

// Loads and validates an instance; prints the violations and throws a tagged
// exception when the premises do not hold.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Instance load_checked(const std::string& path) {
    std::vector<std::string> link_errors;
    Instance inst = instance_from_json(read_file(path), &link_errors);
    for (const std::string& e : link_errors) std::cerr << "validation: " << e << "\n";
    if (!link_errors.empty()) throw ValidationError("instance file is inconsistent");
    const ValidationReport rep = validate_instance(inst);
    for (const Violation& v : rep.violations)
        std::cerr << "validation: " << v.detail << "\n";
    if (!rep.ok()) throw ValidationError("instance violates the model premises");
    return inst;
}

std::pair<double, double> parse_ratios(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--ratios expects 'r,p'");
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

QueueOrder parse_order(const std::string& s) {
    if (s == "fifo") return QueueOrder::fifo;
    if (s == "lifo") return QueueOrder::lifo;
    if (s == "random") return QueueOrder::random;
    throw CLI::ValidationError("--order expects fifo|lifo|random");
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Pareto front reconstruction under uncertainty regions"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int n = 8;
    std::string mode = "split", points = "uniform";
    std::string instance_path, xi_path, out_path;
    std::string ratios = "8,8", order = "fifo";
    double cost = 10.0;
    bool debug_assert = false, with_front = false;

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--seed", seed);
    gen->add_option("--n", n);
    gen->add_option("--mode", mode)->check(CLI::IsMember({"split", "staircase", "gadget-figs"}));
    gen->add_option("--points", points)
        ->check(CLI::IsMember({"corners", "uniform", "adversarial-bl"}));
    gen->add_option("--out", out_path);

    auto* pre = app.add_subcommand("preprocess", "build and cache the aux structure");
    pre->add_option("--instance", instance_path)->required();
    pre->add_option("--out", out_path);

    auto* run = app.add_subcommand("run", "reconstruct the front");
    run->add_option("--instance", instance_path)->required();
    run->add_option("--xi", xi_path, "cached preprocess output");
    run->add_option("--cost", cost);
    run->add_option("--order", order);
    run->add_option("--seed", seed, "dequeue seed for --order random");
    run->add_flag("--debug-assert", debug_assert);
    run->add_option("--out", out_path);

    auto* ver = app.add_subcommand("verify", "run and verify against oracles");
    ver->add_option("--instance", instance_path)->required();
    ver->add_option("--cost", cost);
    ver->add_option("--ratios", ratios);
    ver->add_option("--order", order);
    ver->add_option("--seed", seed, "dequeue seed for --order random");
    ver->add_flag("--debug-assert", debug_assert);
    ver->add_option("--out", out_path);

    auto* bound = app.add_subcommand("bound", "lower-bound quantities");
    bound->add_option("--instance", instance_path)->required();
    bound->add_option("--cost", cost);
    bound->add_option("--ratios", ratios);
    bound->add_option("--out", out_path);

    auto* bench = app.add_subcommand("bench", "cost scaling sweep");
    bench->add_option("--seed", seed);
    bench->add_option("--out", out_path);

    auto* svg = app.add_subcommand("svg", "debug rendering");
    svg->add_option("--instance", instance_path)->required();
    svg->add_flag("--with-front", with_front);
    svg->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        const Instance inst = generate({seed, n, mode, points});
        emit(instance_to_json(inst), out_path);
        return 0;
    }

    if (pre->parsed()) {
        const Instance inst = load_checked(instance_path);
        const AuxStructure aux = preprocess(inst.regions);
        emit(aux_to_json(aux), out_path);
        return 0;
    }

    if (run->parsed()) {
        const Instance inst = load_checked(instance_path);
        const AuxStructure aux =
            xi_path.empty() ? preprocess(inst.regions) : aux_from_json(read_file(xi_path));
        const RetrievalOracle oracle(inst, aux.ts);
        ReconstructOptions opts;
        opts.order = parse_order(order);
        opts.seed = seed;
        opts.debug_assert = debug_assert;
        const auto [front, ledger] = reconstruct(aux, oracle, opts);
        const ParetoCostReport rep = pareto_cost(aux.ts, aux.g_trunc, inst.points, cost);
        emit(run_report_json(front, ledger, rep), out_path);
        return 0;
    }

    if (ver->parsed()) {
        const Instance inst = load_checked(instance_path);
        const AuxStructure aux = preprocess(inst.regions);
        const RetrievalOracle oracle(inst, aux.ts);
        ReconstructOptions opts;
        opts.order = parse_order(order);
        opts.seed = seed;
        opts.debug_assert = debug_assert;
        const auto [front, ledger] = reconstruct(aux, oracle, opts);
        VerifyOptions vopts;
        vopts.cost_c = cost;
        std::tie(vopts.ratio_r, vopts.ratio_p) = parse_ratios(ratios);
        const VerifyReport rep = verify_run(inst, front, ledger, vopts);
        nlohmann::ordered_json j;
        j["verdict"] = "pass";
        j["retrievals"] = ledger.retrievals;
        j["measured"] = {{"retrieval_ratio", rep.retrieval_ratio},
                         {"predicate_ratio", rep.predicate_ratio}};
        j["tilde_size"] = rep.tilde_size;
        j["retrieval_lb"] = rep.retrieval_lb;
        emit(j.dump(2) + "\n", out_path);
        return 0;
    }

    if (bound->parsed()) {
        const Instance inst = load_checked(instance_path);
        const TruncatedSet ts = truncate_regions(inst.regions);
        const DependencyGraph g = build_visibility(ts.regions);
        const ParetoCostReport rep = pareto_cost(ts, g, inst.points, cost);
        long long types = -1;
        if (inst.regions.size() <= 5) {
            try {
                types = enumerate_front_types(inst.regions, 2'000'000).count;
            } catch (const LimitExceeded&) {
                types = -1;
            }
        }
        const auto [rr, rp] = parse_ratios(ratios);
        emit(bound_report_json(rep, retrieval_lower_bound(rep), types, rr, rp), out_path);
        return 0;
    }

    if (bench->parsed()) {
        nlohmann::ordered_json records = nlohmann::ordered_json::array();
        for (int k = 10; k <= 14; ++k) {
            const int size = 1 << k;
            const Instance inst = generate({seed + static_cast<std::uint64_t>(k), size,
                                            "split", "uniform"});
            OpCounter ops;
            const auto t0 = std::chrono::steady_clock::now();
            const AuxStructure aux = preprocess(inst.regions, &ops);
            const auto t1 = std::chrono::steady_clock::now();
            const RetrievalOracle oracle(inst, aux.ts);
            const auto [front, ledger] = reconstruct(aux, oracle);
            (void)front;
            const auto t2 = std::chrono::steady_clock::now();
            const auto ms = [](auto a, auto b) {
                return std::chrono::duration<double, std::milli>(b - a).count();
            };
            records.push_back({{"n", size},
                               {"preprocess_ops", ops.ops},
                               {"retrievals", ledger.retrievals},
                               {"predicate_evals", ledger.predicate_evals},
                               {"wall_ms", {{"preprocess", ms(t0, t1)}, {"run", ms(t1, t2)}}}});
        }
        emit(records.dump(2) + "\n", out_path);
        return 0;
    }

    if (svg->parsed()) {
        const Instance inst = load_checked(instance_path);
        const AuxStructure aux = preprocess(inst.regions);
        if (with_front) {
            const RetrievalOracle oracle(inst, aux.ts);
            const auto [front, ledger] = reconstruct(aux, oracle);
            (void)ledger;
            emit(render_svg(aux, &front), out_path);
        } else {
            emit(render_svg(aux), out_path);
        }
        return 0;
    }
    return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const OracleContainmentViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed [" << e.clause << "]: " << e.what() << "\n";
        return kExitVerification;
    } catch (const ResolutionMismatch& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
