#include "roap/scan.hpp"

#include <algorithm>

namespace roap {

double gamma(const PathInstance& inst, int i, int j, GammaConvention conv) {
    inst.check_index(i);
    inst.check_index(j);
    if (i > j) throw IndexError("gamma requires i <= j");
    if (j == inst.n() && conv == GammaConvention::ZeroAtEnd) return 0.0;
    return inst.dist(i, j) + inst.path_dist(j, inst.n());
}

namespace {

bool iprime_condition(const PathInstance& inst, int i, int j, int k, double edge_len) {
    return inst.cmp().ge(inst.path_dist(i, k), edge_len + inst.path_dist(k, j));
}

} // namespace

int i_prime(const PathInstance& inst, int i, int j, int hint_k,
            ScanCounters* counters, bool verify_hint) {
    inst.check_index(i);
    inst.check_index(j);
    if (i > j) throw IndexError("i_prime requires i <= j");
    const double edge_len = inst.dist(i, j);

    int k = std::min(std::max(hint_k, i), j);
    while (k < j && !iprime_condition(inst, i, j, k, edge_len)) {
        ++k;
        if (counters) ++counters->k_advances;
    }
    // k = j always qualifies: d_P(v_i,v_j) >= |v_i v_j|.

    if (verify_hint) {
        int fresh = i;
        while (fresh < j && !iprime_condition(inst, i, j, fresh, edge_len)) ++fresh;
        if (hint_k > fresh) {
            throw ContractViolation("i_prime hint beyond the true frontier");
        }
    }
    return k;
}

std::pair<double, int> beta(const PathInstance& inst, int i, int j, int hint_k,
                            ScanCounters* counters, bool verify_hint) {
    const int h = i_prime(inst, i, j, hint_k, counters, verify_hint);
    if (counters) ++counters->beta_evals;
    const double edge_len = inst.dist(i, j);
    const auto d_cycle = [&](int k) {
        return std::min(inst.path_dist(i, k), edge_len + inst.path_dist(k, j));
    };
    double value = d_cycle(h);
    if (h > i) value = std::max(value, d_cycle(h - 1));
    return {value, h};
}

LambdaTable compute_lambda_table(const PathInstance& inst, ScanOptions opts) {
    const int n = inst.n();
    LambdaTable table;
    table.lambda.resize(static_cast<std::size_t>(n));
    table.jopt.resize(static_cast<std::size_t>(n));
    const Cmp& cmp = inst.cmp();

    int j = 1;
    int k = 1;
    for (int i = 1; i <= n; ++i) {
        if (j < i) j = i;
        auto [beta_cur, kk] = beta(inst, i, j, k, &table.counters, opts.verify_hints);
        k = kk;
        double gamma_cur = gamma(inst, i, j, GammaConvention::ZeroAtEnd);
        while (cmp.gt(gamma_cur, beta_cur)) {
            ++j;
            ++table.counters.j_advances;
            std::tie(beta_cur, k) = beta(inst, i, j, k, &table.counters, opts.verify_hints);
            gamma_cur = gamma(inst, i, j, GammaConvention::ZeroAtEnd);
        }
        // j'(i) = j and alpha(i,j) = beta(i,j) here. For j-1 the stopping rule
        // failed, so gamma dominates and alpha(i,j-1) = gamma(i,j-1).
        if (j > i) {
            const double alpha_prev = gamma(inst, i, j - 1, GammaConvention::Formula);
            if (cmp.le(alpha_prev, beta_cur)) {
                table.lambda[static_cast<std::size_t>(i) - 1] = alpha_prev;
                table.jopt[static_cast<std::size_t>(i) - 1] = j - 1;
            } else {
                table.lambda[static_cast<std::size_t>(i) - 1] = beta_cur;
                table.jopt[static_cast<std::size_t>(i) - 1] = j;
            }
        } else {
            table.lambda[static_cast<std::size_t>(i) - 1] = beta_cur;
            table.jopt[static_cast<std::size_t>(i) - 1] = j;
        }
    }
    return table;
}

} // namespace roap
