#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "roap/instance.hpp"

namespace roap {

struct ScanCounters {
    std::uint64_t beta_evals = 0;
    std::uint64_t k_advances = 0;
    std::uint64_t j_advances = 0;
};

// gamma(i,j) = |v_i v_j| + d_P(v_j, v_n) covers every vertex beyond v_j.
// At j = n the Formula convention yields |v_i v_n| while ZeroAtEnd yields 0
// (no vertices beyond v_j). Inside alpha the two coincide because
// beta(i,n) >= |v_i v_n|; alpha-level code uses ZeroAtEnd.
enum class GammaConvention { Formula, ZeroAtEnd };

double gamma(const PathInstance& inst, int i, int j,
             GammaConvention conv = GammaConvention::Formula);

// Smallest k in [i,j] with d_P(v_i,v_k) >= |v_i v_j| + d_P(v_k,v_j).
// hint_k must not exceed the true value; the scan only moves forward.
// verify_hint recomputes from scratch and throws ContractViolation on a
// hint that overshot.
int i_prime(const PathInstance& inst, int i, int j, int hint_k,
            ScanCounters* counters = nullptr, bool verify_hint = false);

// beta(i,j) = max_{k in [i,j]} d_C(i,j)(v_i,v_k); the argmax is I' or I'-1.
// Returns the value and the new hint (= I'(i,j)).
std::pair<double, int> beta(const PathInstance& inst, int i, int j, int hint_k,
                            ScanCounters* counters = nullptr,
                            bool verify_hint = false);

struct LambdaTable {
    std::vector<double> lambda;  // lambda[i-1] = lambda_i
    std::vector<int> jopt;       // jopt[i-1] = an index achieving lambda_i
    ScanCounters counters;

    double lambda_at(int i) const { return lambda[static_cast<std::size_t>(i) - 1]; }
    int jopt_at(int i) const { return jopt[static_cast<std::size_t>(i) - 1]; }
};

struct ScanOptions {
    bool verify_hints = false;
};

// Lambda table for all i in O(n): j and k sweep forward only.
LambdaTable compute_lambda_table(const PathInstance& inst, ScanOptions opts = {});

} // namespace roap
