// Acceptance suite: each criterion prints one PASS/FAIL line. Run with no
// arguments for all criteria, or pass criterion numbers (1..8).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "roap/generate.hpp"
#include "roap/oracle.hpp"
#include "roap/query.hpp"
#include "roap/scan.hpp"
#include "roap/solver.hpp"

using namespace roap;

namespace {

struct Failure {
    std::string message;
};

int g_checks = 0;

void expect(bool ok, const std::string& message) {
    ++g_checks;
    if (!ok) throw Failure{message};
}

bool close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

std::vector<PathInstance> euclidean_suite(int count, int nmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PathInstance> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nmax));
        const int dim = 1 + static_cast<int>(rng() % 3);
        out.push_back(gen_random_euclidean(n, rng(), dim));
    }
    return out;
}

std::vector<PathInstance> closure_suite(int count, int nmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PathInstance> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(nmax - 1));
        out.push_back(gen_random_metric_closure(n, rng()));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1
// Cycle metric with total length 1 (scaled): query(1,n) radius (1-1/n)/2.
void criterion1() {
    for (const int n : {4, 8, 16, 64}) {
        {
            const PathInstance cyc = gen_cycle_metric(n);  // integer mode, total n
            const QueryStructure qs = preprocess(cyc);
            const auto t0 = std::chrono::steady_clock::now();
            const QueryResult qr = query(qs, 1, n);
            const auto t1 = std::chrono::steady_clock::now();
            const double expect_radius = static_cast<double>(n - 1) / 2.0;
            expect(qr.radius == expect_radius,
                   "integer-mode cycle radius must be exact at n=" + std::to_string(n));
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            expect(ms < 1.0, "query must finish under 1 ms");
        }
        {
            const PathInstance cyc = gen_cycle_metric(n, 1.0 / n);  // total length 1
            const QueryStructure qs = preprocess(cyc);
            const QueryResult qr = query(qs, 1, n);
            const double expect_radius = (1.0 - 1.0 / n) / 2.0;
            expect(std::abs(qr.radius - expect_radius) <= 1e-12,
                   "float-mode cycle radius within 1e-12 at n=" + std::to_string(n));
        }
    }
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    auto run = [&](const std::vector<PathInstance>& suite, const char* label) {
        for (std::size_t idx = 0; idx < suite.size(); ++idx) {
            const PathInstance& inst = suite[idx];
            const Solution fast = solve(inst);
            const Solution slow = roap_bruteforce(inst);
            expect(close(fast.best.radius, slow.best.radius, 1e-9),
                   std::string(label) + " mismatch at instance " + std::to_string(idx) +
                       " (n=" + std::to_string(inst.n()) + ")");
        }
    };
    run(euclidean_suite(1000, 40, 20260810), "euclidean");
    run(closure_suite(200, 30, 715), "metric-closure");
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    std::mt19937_64 rng(333);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 60);
        const PathInstance inst = (t % 2 == 0)
                                      ? gen_random_euclidean(n, rng(), 2)
                                      : gen_random_metric_closure(std::max(2, n), rng());
        const QueryStructure qs = preprocess(inst);
        for (int i = 1; i <= inst.n(); ++i) {
            for (int j = i; j <= inst.n(); ++j) {
                const QueryResult fast = query(qs, i, j);
                const QueryResult slow = center_bruteforce(inst, i, j);
                expect(close(fast.radius, slow.radius, 1e-9),
                       "query/oracle radius mismatch at n=" + std::to_string(inst.n()) +
                           " pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
                const double ecc = eccentricity(inst, i, j, fast.center);
                expect(close(ecc, fast.radius, 1e-9),
                       "returned center does not realize the radius at pair (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 4
// The monotonicity toolbox behind the linear-time scans.
void criterion4() {
    std::vector<PathInstance> suite = euclidean_suite(30, 40, 44);
    for (auto& inst : closure_suite(15, 30, 45)) suite.push_back(std::move(inst));
    suite.push_back(gen_line(4));
    suite.push_back(gen_cycle_metric(8));

    for (const PathInstance& inst : suite) {
        const int n = inst.n();
        const Cmp& cmp = inst.cmp();

        const auto beta_fresh = [&](int i, int j) { return beta(inst, i, j, i).first; };
        const auto iprime_fresh = [&](int i, int j) { return i_prime(inst, i, j, i); };
        const auto alpha_of = [&](int i, int j) {
            return std::max(beta_fresh(i, j), gamma(inst, i, j, GammaConvention::ZeroAtEnd));
        };
        const auto jprime = [&](int i) {
            for (int j = i; j <= n; ++j) {
                if (cmp.le(gamma(inst, i, j, GammaConvention::ZeroAtEnd), beta_fresh(i, j))) {
                    return j;
                }
            }
            return n;
        };

        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                if (j < n) {
                    expect(gamma(inst, i, j) >= gamma(inst, i, j + 1) - 1e-9,
                           "gamma must be non-increasing in j");
                    expect(beta_fresh(i, j) <= beta_fresh(i, j + 1) + 1e-9,
                           "beta must be non-decreasing in j");
                    expect(iprime_fresh(i, j) <= iprime_fresh(i, j + 1),
                           "I' must be non-decreasing in j");
                    expect(inst.dist(i, j) + inst.path_dist(j, n) >=
                               inst.dist(i, j + 1) + inst.path_dist(j + 1, n) - 1e-9,
                           "detour bound must be non-increasing in j");
                }
                if (i < j) {
                    expect(iprime_fresh(i, j) <= iprime_fresh(i + 1, j),
                           "I' must be non-decreasing in i");
                }
                // argmax of the cycle distance lies in {I'-1, I'}
                const double edge_len = inst.dist(i, j);
                double best = -1.0;
                int arg = i;
                for (int k = i; k <= j; ++k) {
                    const double v = std::min(inst.path_dist(i, k),
                                              edge_len + inst.path_dist(k, j));
                    if (v > best) {
                        best = v;
                        arg = k;
                    }
                }
                const int ip = iprime_fresh(i, j);
                expect(arg == ip || arg == ip - 1, "cycle argmax must be I' or I'-1");
            }
        }
        for (int i = 1; i < n; ++i) {
            expect(jprime(i) <= jprime(i + 1), "j' must be non-decreasing in i");
        }
        for (int i = 1; i <= n; ++i) {
            const int jp = jprime(i);
            double lam = alpha_of(i, jp);
            if (jp > i) lam = std::min(lam, alpha_of(i, jp - 1));
            expect(close(lam, lambda_bruteforce(inst, i).first, 1e-9),
                   "lambda must be min of alpha at j'-1 and j'");
        }

        // Lemma 10 monotonicity for the Case 1.2.2 sweep definitions.
        const double total = inst.total_length();
        int i1 = 0;
        for (int i = 1; i <= n; ++i) {
            if (cmp.lt(inst.prefix(i), total - inst.prefix(i))) i1 = i;
        }
        int i2 = n + 1;
        for (int i = 1; i <= n; ++i) {
            if (cmp.ge(inst.prefix(i), inst.dist(i, n))) {
                i2 = i;
                break;
            }
        }
        int prev_j = -1, prev_k = -1;
        for (int i = i2; i <= i1; ++i) {
            int ji = n;
            for (int j = i; j <= n; ++j) {
                if (cmp.ge(inst.prefix(i), inst.dist(i, j) + (total - inst.prefix(j)))) {
                    ji = j;
                    break;
                }
            }
            int ki = 0;
            for (int k = ji; k >= i; --k) {
                if (cmp.lt(inst.prefix(i), inst.dist(i, ji) + inst.path_dist(ji, k))) {
                    ki = k;
                    break;
                }
            }
            if (prev_j >= 0) {
                expect(ji <= prev_j, "Case 1.2.2 j(i) must be non-increasing");
                expect(ki <= prev_k, "Case 1.2.2 k(i) must be non-increasing");
            }
            prev_j = ji;
            prev_k = ki;
        }
    }
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    std::vector<PathInstance> suite = euclidean_suite(40, 40, 55);
    for (auto& inst : closure_suite(20, 30, 56)) suite.push_back(std::move(inst));
    suite.push_back(gen_line(4));
    suite.push_back(gen_cycle_metric(8));
    for (const PathInstance& inst : suite) {
        const LambdaTable table = compute_lambda_table(inst);
        for (int i = 1; i <= inst.n(); ++i) {
            const auto [expected, expected_j] = lambda_bruteforce(inst, i);
            expect(close(table.lambda_at(i), expected, 1e-9),
                   "lambda table mismatch at i=" + std::to_string(i) +
                       " (n=" + std::to_string(inst.n()) + ")");
        }
    }
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    // Counter bounds at n up to 10^6 on both big families.
    for (const int n : {1000, 100000, 1000000}) {
        for (const bool euclid : {false, true}) {
            const PathInstance inst =
                euclid ? gen_random_euclidean(n, 66, 2) : gen_line(n);
            const LambdaTable table = compute_lambda_table(inst);
            const auto nn = static_cast<std::uint64_t>(n);
            expect(table.counters.beta_evals <= 2 * nn, "beta evaluations must be <= 2n");
            expect(table.counters.k_advances <= nn, "k advances must be <= n");
            expect(table.counters.j_advances <= nn, "j advances must be <= n");
        }
    }

    // Query comparison budget at n = 10^6.
    {
        const int n = 1000000;
        const PathInstance inst = gen_line(n);
        const QueryStructure qs = preprocess(inst);
        const double budget = 64.0 * std::log2(static_cast<double>(n) + 2.0);
        std::mt19937_64 rng(67);
        for (int t = 0; t < 256; ++t) {
            int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            if (i > j) std::swap(i, j);
            expect(static_cast<double>(query(qs, i, j).comparisons) <= budget,
                   "query comparisons must fit the 64 log2(n+2) budget");
        }
    }

    // Wall-clock scaling on the line family: ratio of medians in [6, 14].
    const auto timed_solve = [](const PathInstance& inst) {
        const auto t0 = std::chrono::steady_clock::now();
        const Solution s = solve(inst);
        const auto t1 = std::chrono::steady_clock::now();
        (void)s;
        return std::chrono::duration<double, std::milli>(t1 - t0).count();
    };
    const PathInstance small = gen_line(100000);
    const PathInstance large = gen_line(1000000);
    std::vector<double> small_ms, large_ms;
    for (int rep = 0; rep < 5; ++rep) {
        small_ms.push_back(timed_solve(small));
        large_ms.push_back(timed_solve(large));
    }
    std::sort(small_ms.begin(), small_ms.end());
    std::sort(large_ms.begin(), large_ms.end());
    const double ratio = large_ms[2] / small_ms[2];
    std::printf("  [criterion 6] solve median: n=1e5 %.2f ms, n=1e6 %.2f ms, ratio %.2f\n",
                small_ms[2], large_ms[2], ratio);
    expect(ratio >= 6.0 && ratio <= 14.0,
           "solve(1e6)/solve(1e5) wall ratio outside [6,14]: " + std::to_string(ratio));
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    std::vector<PathInstance> suite = euclidean_suite(250, 40, 77);
    for (auto& inst : closure_suite(80, 30, 78)) suite.push_back(std::move(inst));
    suite.push_back(gen_line(4));
    suite.push_back(gen_cycle_metric(8));
    for (const PathInstance& inst : suite) {
        const Solution solution = solve(inst);
        for (const Candidate& cand : solution.all_candidates) {
            const double ecc = eccentricity(inst, std::min(cand.i, cand.j),
                                            std::max(cand.i, cand.j), cand.center);
            expect(ecc <= cand.radius + 1e-9 * std::max(1.0, cand.radius),
                   std::string("infeasible candidate from ") + to_string(cand.tag) +
                       " at n=" + std::to_string(inst.n()));
        }
    }
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
#ifndef ROAP_CLI_PATH
    throw Failure{"CLI path not wired into the build"};
#else
    const std::string cmd = std::string(ROAP_CLI_PATH) +
                            " verify --random --seed 7 --count 100 --nmax 20";
    const auto run_once = [&](const std::string& path) {
        const int status = std::system((cmd + " > " + path + " 2>&1").c_str());
        expect(status == 0, "verify run must exit 0");
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = run_once("acceptance_verify_a.txt");
    const std::string b = run_once("acceptance_verify_b.txt");
    expect(!a.empty(), "verify must produce a report");
    expect(a == b, "two identical verify runs must produce identical reports");
#endif
}

struct CriterionEntry {
    int id;
    const char* summary;
    void (*fn)();
};

const CriterionEntry kCriteria[] = {
    {1, "cycle-example reproduction (integer exact, float 1e-12, <1ms/query)", criterion1},
    {2, "solver equals exhaustive optimum on 1000 euclidean + 200 closure instances", criterion2},
    {3, "query equals per-pair oracle on 200 instances, centers realize radii", criterion3},
    {4, "monotonicity lemma suite exhaustive on n <= 40", criterion4},
    {5, "lambda table equals brute force entrywise on n <= 40", criterion5},
    {6, "linear/logarithmic complexity counters and wall-clock scaling", criterion6},
    {7, "every emitted candidate passes the oracle eccentricity audit", criterion7},
    {8, "verify --random --seed 7 --count 100 is byte-identical across runs", criterion8},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int a = 1; a < argc; ++a) selected.push_back(std::atoi(argv[a]));
    if (selected.empty()) {
        for (const auto& entry : kCriteria) selected.push_back(entry.id);
    }

    bool all_ok = true;
    for (const int id : selected) {
        const CriterionEntry* entry = nullptr;
        for (const auto& e : kCriteria) {
            if (e.id == id) entry = &e;
        }
        if (!entry) {
            std::printf("criterion %d: UNKNOWN\n", id);
            all_ok = false;
            continue;
        }
        g_checks = 0;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            entry->fn();
            const auto t1 = std::chrono::steady_clock::now();
            std::printf("criterion %d: PASS (%d checks, %.1f s) — %s\n", entry->id,
                        g_checks,
                        std::chrono::duration<double>(t1 - t0).count(), entry->summary);
        } catch (const Failure& failure) {
            all_ok = false;
            std::printf("criterion %d: FAIL — %s [%s]\n", entry->id,
                        failure.message.c_str(), entry->summary);
        } catch (const std::exception& e) {
            all_ok = false;
            std::printf("criterion %d: FAIL — unexpected error: %s [%s]\n", entry->id,
                        e.what(), entry->summary);
        }
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
