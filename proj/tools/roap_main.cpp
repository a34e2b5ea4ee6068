#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "roap/generate.hpp"
#include "roap/io.hpp"
#include "roap/oracle.hpp"
#include "roap/query.hpp"
#include "roap/scan.hpp"
#include "roap/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMetricViolation = 3;

double round12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

json center_json(const roap::CenterLocation& c) {
    json out;
    out["variant"] = c.kind == roap::CenterLocation::Kind::OnPath ? "on_path" : "on_new_edge";
    out[c.kind == roap::CenterLocation::Kind::OnPath ? "arc" : "offset"] = round12(c.pos);
    return out;
}

json candidate_json(const roap::Candidate& cand) {
    json out;
    out["i"] = cand.i;
    out["j"] = cand.j;
    out["radius"] = round12(cand.radius);
    out["center"] = center_json(cand.center);
    out["case"] = roap::to_string(cand.tag);
    return out;
}

struct CommonOptions {
    std::string input;
    std::string format = "points";
    bool validate = false;
    bool exact_int = false;
    std::string metric = "euclidean";
};

roap::Cmp make_cmp(const CommonOptions& opts) {
    if (opts.exact_int) return roap::Cmp::exact_int();
    if (const char* env = std::getenv("ROAP_TOLERANCE")) {
        const double eps = std::strtod(env, nullptr);
        if (eps > 0.0) return roap::Cmp::with_epsilon(eps);
    }
    return roap::Cmp::standard();
}

roap::PathInstance load_instance(const CommonOptions& opts) {
    const roap::MetricKind kind =
        opts.format == "matrix"
            ? roap::MetricKind::Matrix
            : (opts.metric == "l1" ? roap::MetricKind::L1 : roap::MetricKind::Euclidean);
    return roap::read_instance_file(opts.input, opts.format, kind, make_cmp(opts));
}

json instance_json(const roap::PathInstance& inst, const CommonOptions& opts) {
    json out;
    out["n"] = inst.n();
    out["source"] = opts.input.empty() ? "generated" : opts.input;
    out["metric"] = roap::to_string(inst.metric());
    out["exact"] = inst.exact();
    return out;
}

// exit 3 when --validate finds a violation
void maybe_validate(const roap::PathInstance& inst, const CommonOptions& opts) {
    if (!opts.validate) return;
    const auto mode = inst.n() <= 200 ? roap::ValidationMode::FullCubic
                                      : roap::ValidationMode::Sampled;
    const roap::MetricReport report = roap::validate_metric(inst, mode);
    if (!report.valid) {
        json out;
        out["status"] = "metric_violation";
        out["violations"] = report.violations.size();
        out["duplicate_pairs"] = report.duplicate_pairs.size();
        if (!report.violations.empty()) {
            const auto& v = report.violations.front();
            out["first_violation"] = {{"i", v.i}, {"k", v.k}, {"j", v.j}, {"slack", v.slack}};
        }
        std::cout << out.dump(2) << '\n';
        std::exit(kExitMetricViolation);
    }
}

int cmd_solve(const CommonOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const roap::PathInstance inst = load_instance(opts);
    maybe_validate(inst, opts);
    const roap::Solution solution = roap::solve(inst);
    const auto t1 = std::chrono::steady_clock::now();

    json out;
    out["command"] = "solve";
    out["instance"] = instance_json(inst, opts);
    out["result"] = candidate_json(solution.best);
    json all = json::array();
    for (const auto& cand : solution.all_candidates) all.push_back(candidate_json(cand));
    out["result"]["candidates"] = all;
    out["counters"] = solution.counters;
    out["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_query(const CommonOptions& opts, int qi, int qj) {
    const roap::PathInstance inst = load_instance(opts);
    maybe_validate(inst, opts);
    if (qi < 1 || qj > inst.n() || qi > qj) {
        std::cerr << "query pair out of range\n";
        return kExitUsage;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const roap::QueryStructure qs = roap::preprocess(inst);
    const roap::QueryResult qr = roap::query(qs, qi, qj);
    const auto t1 = std::chrono::steady_clock::now();

    json out;
    out["command"] = "query";
    out["instance"] = instance_json(inst, opts);
    out["result"] = {{"i", qi},
                     {"j", qj},
                     {"radius", round12(qr.radius)},
                     {"center", center_json(qr.center)},
                     {"case", roap::to_string(qr.tag)}};
    out["counters"] = {{"comparisons", qr.comparisons}};
    out["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

struct VerifyOptions {
    bool random = false;
    std::uint64_t seed = 1;
    int count = 20;
    int nmax = 25;
    bool corrupt = false;  // fault injection for the negative-control test
};

int cmd_verify(const CommonOptions& opts, const VerifyOptions& vopts) {
    std::vector<roap::PathInstance> instances;
    json dump_meta = json::array();
    if (vopts.random) {
        std::mt19937_64 rng(vopts.seed);
        for (int t = 0; t < vopts.count; ++t) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(vopts.nmax));
            if (t % 2 == 0) {
                instances.push_back(roap::gen_random_euclidean(std::max(1, n), rng()));
            } else {
                instances.push_back(roap::gen_random_metric_closure(std::max(2, n), rng()));
            }
        }
    } else {
        instances.push_back(load_instance(opts));
    }

    const double tol = 1e-9;
    std::uint64_t solver_checked = 0, query_pairs_checked = 0;
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        const roap::PathInstance& inst = instances[idx];
        const roap::Solution got = roap::solve(inst);
        const roap::Solution expected = roap::roap_bruteforce(inst);
        double got_radius = got.best.radius;
        if (vopts.corrupt) got_radius += 0.1;
        const double scale = std::max(1.0, std::abs(expected.best.radius));
        if (std::abs(got_radius - expected.best.radius) > tol * scale) {
            json out;
            out["command"] = "verify";
            out["status"] = "solver_mismatch";
            out["instance_index"] = idx;
            out["n"] = inst.n();
            out["expected_radius"] = expected.best.radius;
            out["got_radius"] = got_radius;
            std::ostringstream dump;
            if (inst.metric() == roap::MetricKind::Matrix) {
                roap::write_matrix(dump, inst);
            } else {
                roap::write_points(dump, inst);
            }
            out["instance_dump"] = dump.str();
            std::cout << out.dump(2) << '\n';
            return kExitVerifyFailure;
        }
        ++solver_checked;

        const roap::QueryStructure qs = roap::preprocess(inst);
        for (int i = 1; i <= inst.n(); ++i) {
            for (int j = i; j <= inst.n(); ++j) {
                const roap::QueryResult fast = roap::query(qs, i, j);
                const roap::QueryResult slow = roap::center_bruteforce(inst, i, j);
                const double qscale = std::max(1.0, std::abs(slow.radius));
                if (std::abs(fast.radius - slow.radius) > tol * qscale) {
                    json out;
                    out["command"] = "verify";
                    out["status"] = "query_mismatch";
                    out["instance_index"] = idx;
                    out["n"] = inst.n();
                    out["pair"] = {i, j};
                    out["expected_radius"] = slow.radius;
                    out["got_radius"] = fast.radius;
                    std::cout << out.dump(2) << '\n';
                    return kExitVerifyFailure;
                }
                ++query_pairs_checked;
            }
        }
    }

    json out;
    out["command"] = "verify";
    out["status"] = "ok";
    out["seed"] = vopts.seed;
    out["count"] = instances.size();
    out["nmax"] = vopts.nmax;
    out["solver_instances_checked"] = solver_checked;
    out["query_pairs_checked"] = query_pairs_checked;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed,
            const std::string& output) {
    roap::PathInstance inst = [&] {
        if (family == "line") return roap::gen_line(n);
        if (family == "cycle_metric") return roap::gen_cycle_metric(n);
        if (family == "random_euclidean") return roap::gen_random_euclidean(n, seed);
        if (family == "random_metric_closure") return roap::gen_random_metric_closure(n, seed);
        throw roap::ParseError("unknown family: " + family);
    }();

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw roap::ParseError("cannot open output file: " + output);
        out = &file;
    }
    if (inst.metric() == roap::MetricKind::Matrix) {
        roap::write_matrix(*out, inst);
    } else {
        roap::write_points(*out, inst);
    }
    return kExitOk;
}

int cmd_bench(const std::string& nlist, const std::string& family, std::uint64_t seed) {
    std::vector<int> sizes;
    std::stringstream ss(nlist);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        sizes.push_back(std::stoi(tok));
    }
    if (sizes.empty()) {
        std::cerr << "bench: empty n list\n";
        return kExitUsage;
    }

    std::printf("n,family,build_ms,solve_ms,radius,beta_evals,k_advances,j_advances,"
                "beta_budget,queries,max_query_comparisons,comparison_budget\n");
    bool budget_ok = true;
    for (const int n : sizes) {
        const auto t0 = std::chrono::steady_clock::now();
        roap::PathInstance inst = [&] {
            if (family == "line") return roap::gen_line(n);
            if (family == "cycle_metric") return roap::gen_cycle_metric(n);
            if (family == "random_metric_closure") return roap::gen_random_metric_closure(n, seed);
            return roap::gen_random_euclidean(n, seed);
        }();
        const auto t1 = std::chrono::steady_clock::now();
        const roap::Solution solution = roap::solve(inst);
        const auto t2 = std::chrono::steady_clock::now();

        const std::uint64_t beta_evals = solution.counters.at("lambda_beta_evals");
        const std::uint64_t k_adv = solution.counters.at("lambda_k_advances");
        const std::uint64_t j_adv = solution.counters.at("lambda_j_advances");
        const std::uint64_t beta_budget = 2 * static_cast<std::uint64_t>(n);
        if (beta_evals > beta_budget || k_adv > static_cast<std::uint64_t>(n) ||
            solution.counters.at("lambda_rev_beta_evals") > beta_budget) {
            budget_ok = false;
        }

        const roap::QueryStructure qs = roap::preprocess(inst);
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
        const double budget = 64.0 * std::log2(static_cast<double>(n) + 2.0);
        std::uint64_t max_comparisons = 0;
        const int queries = 64;
        for (int q = 0; q < queries; ++q) {
            int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int b = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            if (a > b) std::swap(a, b);
            const roap::QueryResult qr = roap::query(qs, a, b);
            max_comparisons = std::max(max_comparisons, qr.comparisons);
        }
        if (static_cast<double>(max_comparisons) > budget) budget_ok = false;

        std::printf("%d,%s,%.3f,%.3f,%.12g,%llu,%llu,%llu,%llu,%d,%llu,%.1f\n", n,
                    family.c_str(),
                    std::chrono::duration<double, std::milli>(t1 - t0).count(),
                    std::chrono::duration<double, std::milli>(t2 - t1).count(),
                    solution.best.radius,
                    static_cast<unsigned long long>(beta_evals),
                    static_cast<unsigned long long>(k_adv),
                    static_cast<unsigned long long>(j_adv),
                    static_cast<unsigned long long>(beta_budget), queries,
                    static_cast<unsigned long long>(max_comparisons), budget);
    }
    if (!budget_ok) {
        std::fprintf(stderr, "bench: counter budget exceeded\n");
        return kExitVerifyFailure;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal single-edge augmentation of a metric path: minimize the "
                 "radius of the augmented graph"};
    app.require_subcommand(1);

    CommonOptions common;

    auto* solve_cmd = app.add_subcommand("solve", "Find the radius-minimizing edge");
    solve_cmd->add_option("--input", common.input, "Instance file")->required();
    solve_cmd->add_option("--format", common.format, "points|matrix");
    solve_cmd->add_flag("--validate", common.validate, "Check metric axioms first");
    solve_cmd->add_flag("--exact-int", common.exact_int, "Exact integer comparisons");
    solve_cmd->add_option("--metric", common.metric, "euclidean|l1 (points input)");

    auto* query_cmd = app.add_subcommand("query", "Radius/center of one augmented graph");
    int qi = 1, qj = 1;
    query_cmd->add_option("--input", common.input, "Instance file")->required();
    query_cmd->add_option("--format", common.format, "points|matrix");
    query_cmd->add_flag("--validate", common.validate, "Check metric axioms first");
    query_cmd->add_flag("--exact-int", common.exact_int, "Exact integer comparisons");
    query_cmd->add_option("--metric", common.metric, "euclidean|l1 (points input)");
    query_cmd->add_option("i", qi, "Left endpoint")->required();
    query_cmd->add_option("j", qj, "Right endpoint")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check against brute force");
    VerifyOptions vopts;
    verify_cmd->add_option("--input", common.input, "Instance file");
    verify_cmd->add_option("--format", common.format, "points|matrix");
    verify_cmd->add_flag("--exact-int", common.exact_int, "Exact integer comparisons");
    verify_cmd->add_flag("--random", vopts.random, "Verify generated random instances");
    verify_cmd->add_option("--seed", vopts.seed, "Random seed");
    verify_cmd->add_option("--count", vopts.count, "Number of random instances");
    verify_cmd->add_option("--nmax", vopts.nmax, "Largest random instance size");
    verify_cmd->add_flag("--corrupt", vopts.corrupt, "Fault injection (testing)")
        ->group("");

    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    std::string family = "line";
    int gen_n = 8;
    std::uint64_t gen_seed = 1;
    std::string output;
    gen_cmd->add_option("family", family,
                        "line|cycle_metric|random_euclidean|random_metric_closure")
        ->required();
    gen_cmd->add_option("n", gen_n, "Vertex count")->required();
    gen_cmd->add_option("--seed", gen_seed, "Random seed");
    gen_cmd->add_option("--output", output, "Write to file instead of stdout");

    auto* bench_cmd = app.add_subcommand("bench", "Scaling benchmark (CSV)");
    std::string nlist;
    std::string bench_family = "line";
    std::uint64_t bench_seed = 1;
    bench_cmd->add_option("--nlist", nlist, "Comma-separated sizes")->required();
    bench_cmd->add_option("--family", bench_family, "Instance family");
    bench_cmd->add_option("--seed", bench_seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(common);
        if (query_cmd->parsed()) return cmd_query(common, qi, qj);
        if (verify_cmd->parsed()) {
            if (!vopts.random && common.input.empty()) {
                std::cerr << "verify: need --input or --random\n";
                return kExitUsage;
            }
            return cmd_verify(common, vopts);
        }
        if (gen_cmd->parsed()) return cmd_gen(family, gen_n, gen_seed, output);
        if (bench_cmd->parsed()) return cmd_bench(nlist, bench_family, bench_seed);
    } catch (const roap::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const roap::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
