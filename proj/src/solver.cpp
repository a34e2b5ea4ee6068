#include "roap/solver.hpp"

#include <algorithm>
#include <cmath>

#include "roap/oracle.hpp"

namespace roap {

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::NoEdge: return "no-edge";
        case CaseTag::Case0: return "case0";
        case CaseTag::Case0Rev: return "case0-rev";
        case CaseTag::Case11: return "case1.1";
        case CaseTag::Case11Rev: return "case1.1-rev";
        case CaseTag::Case1211: return "case1.2.1.1";
        case CaseTag::Case1211Rev: return "case1.2.1.1-rev";
        case CaseTag::Case1212: return "case1.2.1.2";
        case CaseTag::Case1212Rev: return "case1.2.1.2-rev";
        case CaseTag::Case122: return "case1.2.2";
        case CaseTag::Case122Rev: return "case1.2.2-rev";
        case CaseTag::Case3: return "case3";
        case CaseTag::Case31: return "case3.1";
        case CaseTag::Case31Rev: return "case3.1-rev";
        case CaseTag::Case32: return "case3.2";
        case CaseTag::Case32Rev: return "case3.2-rev";
        case CaseTag::Oracle: return "oracle";
    }
    return "?";
}

bool candidate_before(const Candidate& a, const Candidate& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return static_cast<int>(a.tag) < static_cast<int>(b.tag);
}

namespace {

struct SweepStats {
    std::uint64_t k_advances = 0;
    std::uint64_t j_advances = 0;
};

void record(Counters* counters, const std::string& prefix, const SweepStats& stats) {
    if (!counters) return;
    (*counters)[prefix + "_k_advances"] += stats.k_advances;
    (*counters)[prefix + "_j_advances"] += stats.j_advances;
}

void keep_min(std::optional<Candidate>& best, const Candidate& cand) {
    if (!best || candidate_before(cand, *best)) best = cand;
}

CaseTag reversed_tag(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case0: return CaseTag::Case0Rev;
        case CaseTag::Case11: return CaseTag::Case11Rev;
        case CaseTag::Case1211: return CaseTag::Case1211Rev;
        case CaseTag::Case1212: return CaseTag::Case1212Rev;
        case CaseTag::Case122: return CaseTag::Case122Rev;
        case CaseTag::Case31: return CaseTag::Case31Rev;
        case CaseTag::Case32: return CaseTag::Case32Rev;
        default: return tag;
    }
}

// Shared sweep for the Case 1 family: k(i) = smallest k with
// d_P(v_i,v_k) > d_P(v_1,v_i), j11(i) = largest j in [k(i),n] with
// d_P(v_{k(i)},v_j) <= d_P(v_j,v_n). Both monotone in i.
template <typename Visit>
SweepStats sweep_case1(const PathInstance& inst, Visit visit) {
    SweepStats stats;
    const int n = inst.n();
    const Cmp& cmp = inst.cmp();
    const double total = inst.total_length();
    int kp = 1;
    int j11 = 1;
    for (int i = 1; i <= n; ++i) {
        const double head = inst.prefix(i);
        if (kp < i) kp = i;
        while (kp <= n && !cmp.gt(inst.path_dist(i, kp), head)) {
            ++kp;
            ++stats.k_advances;
        }
        if (kp > n) break;  // no k(i) for this or any later i
        if (j11 < kp) j11 = kp;
        while (j11 + 1 <= n &&
               cmp.le(inst.path_dist(kp, j11 + 1), total - inst.prefix(j11 + 1))) {
            ++j11;
            ++stats.j_advances;
        }
        visit(i, kp, j11);
    }
    return stats;
}

} // namespace

Candidate map_reversed_candidate(const PathInstance& original, Candidate cand) {
    const int n = original.n();
    const double total = original.total_length();
    const int new_i = n + 1 - cand.j;
    const int new_j = n + 1 - cand.i;
    cand.i = new_i;
    cand.j = new_j;
    if (cand.center.kind == CenterLocation::Kind::OnPath) {
        cand.center.pos = total - cand.center.pos;
    } else {
        const double edge_len = original.dist(new_i, new_j);
        cand.center.pos = edge_len - cand.center.pos;
    }
    cand.tag = reversed_tag(cand.tag);
    return cand;
}

Candidate canonicalize_noop(const PathInstance& inst, Candidate cand) {
    if (cand.j > cand.i + 1) return cand;
    if (cand.center.kind == CenterLocation::Kind::OnNewEdge) {
        // the "new" edge coincides with a path edge (or a single vertex)
        cand.center = CenterLocation::on_path(inst.prefix(cand.i) + cand.center.pos);
    }
    cand.i = 1;
    cand.j = 1;
    cand.tag = CaseTag::NoEdge;
    return cand;
}

std::optional<Candidate> case0(const PathInstance& inst, const LambdaTable& ltab,
                               Counters* counters) {
    const int n = inst.n();
    const Cmp& cmp = inst.cmp();
    std::optional<Candidate> best;
    for (int i = 1; i <= n; ++i) {
        const double wi = inst.prefix(i);
        const double li = ltab.lambda_at(i);
        if (!cmp.ge(wi, li)) continue;
        const double r = (wi + li) / 2.0;
        keep_min(best, Candidate{i, ltab.jopt_at(i), r, CenterLocation::on_path(r),
                                 CaseTag::Case0});
    }
    if (counters) (*counters)["case0_scans"] += static_cast<std::uint64_t>(n);
    return best;
}

std::optional<Candidate> case0_reversed(const PathInstance& inst,
                                        const LambdaTable& ltab_rev,
                                        Counters* counters) {
    const PathInstance rev = reverse(inst);
    auto cand = case0(rev, ltab_rev, counters);
    if (!cand) return std::nullopt;
    return map_reversed_candidate(inst, *cand);
}

std::optional<Candidate> case11(const PathInstance& inst, Counters* counters) {
    const int n = inst.n();
    const Cmp& cmp = inst.cmp();
    const double total = inst.total_length();

    // The no-edge solution is always available.
    std::optional<Candidate> best = Candidate{
        1, 1, total / 2.0, CenterLocation::on_path(total / 2.0), CaseTag::NoEdge};
    if (n < 2) return best;

    const SweepStats stats = sweep_case1(inst, [&](int i, int /*k*/, int j) {
        const double head = inst.prefix(i);
        const double tail = total - inst.prefix(j);
        const double r = (head + inst.dist(i, j) + tail) / 2.0;
        if (cmp.lt(head, r) && cmp.lt(tail, r)) {
            keep_min(best, canonicalize_noop(
                               inst, Candidate{i, j, r,
                                               CenterLocation::on_new_edge(r - head),
                                               CaseTag::Case11}));
        }
    });
    record(counters, "case11", stats);
    return best;
}

std::optional<Candidate> case1211(const PathInstance& inst, Counters* counters) {
    if (inst.n() < 2) return std::nullopt;
    const int n = inst.n();
    const Cmp& cmp = inst.cmp();
    std::optional<Candidate> best;
    const SweepStats stats = sweep_case1(inst, [&](int i, int k, int j11) {
        const int j = j11 + 1;  // smallest j with d_P(v_k,v_j) > d_P(v_j,v_n)
        if (j > n) return;
        const double head = inst.prefix(i);
        const double back = inst.path_dist(k, j);
        const double r = (head + inst.dist(i, j) + back) / 2.0;
        if (cmp.lt(head, r) && cmp.lt(back, r)) {
            keep_min(best, canonicalize_noop(
                               inst, Candidate{i, j, r,
                                               CenterLocation::on_new_edge(r - head),
                                               CaseTag::Case1211}));
        }
    });
    record(counters, "case1211", stats);
    return best;
}

std::optional<Candidate> case1212(const PathInstance& inst, Counters* counters) {
    if (inst.n() < 2) return std::nullopt;
    const int n = inst.n();
    const Cmp& cmp = inst.cmp();
    const double total = inst.total_length();
    std::optional<Candidate> best;
    const SweepStats stats = sweep_case1(inst, [&](int i, int k, int j11) {
        const int j = j11 + 1;
        if (j > n) return;
        const double head = inst.prefix(i);
        const double edge_len = inst.dist(i, j);
        const double back = inst.path_dist(k, j);
        const double r = (head + edge_len + back) / 2.0;
        // Center on P(v_k,v_j), reached from v_1 through the new edge. The
        // tail bound keeps everything past v_j within r; without it the
        // candidate can be infeasible.
        if (cmp.lt(head + edge_len, r) &&
            cmp.le(total - inst.prefix(j), head + edge_len)) {
            const double arc = inst.prefix(j) - (r - head - edge_len);
            keep_min(best, canonicalize_noop(
                               inst, Candidate{i, j, r, CenterLocation::on_path(arc),
                                               CaseTag::Case1212}));
        }
    });
    record(counters, "case1212", stats);
    return best;
}

std::optional<Candidate> case122(const PathInstance& inst, Counters* counters) {
    const int n = inst.n();
    if (n < 2) return std::nullopt;
    const Cmp& cmp = inst.cmp();
    const double total = inst.total_length();

    // i1 = largest i with d_P(v_1,v_i) < d_P(v_i,v_n); i2 = smallest i with
    // d_P(v_1,v_i) >= |v_i v_n| (monotone by the triangle inequality).
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
    if (i2 > i1) return std::nullopt;

    std::optional<Candidate> best;
    SweepStats stats;
    int j = n;
    int k = n;
    for (int i = i2; i <= i1; ++i) {
        const double head = inst.prefix(i);
        // smallest j with d_P(v_1,v_i) >= |v_i v_j| + d_P(v_j,v_n); the bound
        // is non-increasing in j (Observation 5) and j(i) only shrinks as i
        // grows, so the pointer moves left.
        while (j > i && cmp.ge(head, inst.dist(i, j - 1) + (total - inst.prefix(j - 1)))) {
            --j;
            ++stats.j_advances;
        }
        const double edge_len = inst.dist(i, j);
        if (k > j) k = j;
        while (k >= i && !cmp.lt(head, edge_len + inst.path_dist(j, k))) {
            --k;
            ++stats.k_advances;
        }
        if (k < i) continue;  // k(i) = 0: nothing forces a center this far out
        if (!cmp.lt(head, inst.path_dist(i, k))) continue;
        const double r = inst.prefix(k) / 2.0;
        keep_min(best, canonicalize_noop(inst, Candidate{i, j, r,
                                                         CenterLocation::on_path(r),
                                                         CaseTag::Case122}));
    }
    record(counters, "case122", stats);
    return best;
}

std::vector<Candidate> case2(const PathInstance& inst, Counters* counters) {
    const PathInstance rev = reverse(inst);
    std::vector<Candidate> out;
    const auto add = [&](std::optional<Candidate> cand) {
        if (cand) {
            out.push_back(canonicalize_noop(inst, map_reversed_candidate(inst, *cand)));
        }
    };
    add(case11(rev, counters));
    add(case1211(rev, counters));
    add(case1212(rev, counters));
    add(case122(rev, counters));
    return out;
}

namespace {

struct Case3Row {
    int k;
    int i;
    int j;
    double radius;
};

// i(k) = largest i in [1,k] with d_P(v_1,v_i) < d_P(v_i,v_k);
// j(k) = smallest j in [k+1,n] with d_P(v_j,v_n) < d_P(v_{k+1},v_j).
template <typename Visit>
SweepStats sweep_case3(const PathInstance& inst, Visit visit) {
    SweepStats stats;
    const int n = inst.n();
    const Cmp& cmp = inst.cmp();
    const double total = inst.total_length();
    int ip = 1;
    int jp = 3;
    for (int k = 2; k <= n - 2; ++k) {
        const double wk = inst.prefix(k);
        while (ip + 1 <= k && cmp.lt(inst.prefix(ip + 1), wk - inst.prefix(ip + 1))) {
            ++ip;
            ++stats.k_advances;
        }
        if (jp < k + 1) jp = k + 1;
        while (jp <= n && !cmp.lt(total - inst.prefix(jp),
                                  inst.prefix(jp) - inst.prefix(k + 1))) {
            ++jp;
            ++stats.j_advances;
        }
        // jp <= n always: j = n gives d_P(v_n,v_n) = 0 < d_P(v_{k+1},v_n)
        const double r = (inst.path_dist(ip, k) + inst.dist(ip, jp) +
                          inst.path_dist(k + 1, jp)) /
                         2.0;
        visit(Case3Row{k, ip, jp, r});
    }
    return stats;
}

// Place the candidate center at cycle distance r from v_k along the walk
// v_k -> v_i -> e(v_i,v_j) -> v_j -> v_{k+1}, i.e. the side of C(i,j) that
// avoids the path edge (v_k, v_{k+1}). Both cycle arcs from the resolved
// point measure exactly r, so every vertex of the cycle is within r.
CenterLocation resolve_case3_center(const PathInstance& inst, const Case3Row& row) {
    const double left_arc = inst.path_dist(row.i, row.k);
    const double edge_len = inst.dist(row.i, row.j);
    const double r = row.radius;
    if (r <= left_arc) {
        return CenterLocation::on_path(inst.prefix(row.k) - r);
    }
    if (r < left_arc + edge_len) {
        return CenterLocation::on_new_edge(r - left_arc);
    }
    return CenterLocation::on_path(inst.prefix(row.j) - (r - left_arc - edge_len));
}

// Only the two path tails can stick out beyond r; v_1 and v_n are their
// extremes.
bool case3_tails_ok(const PathInstance& inst, const Case3Row& row,
                    const CenterLocation& center) {
    const Cmp& cmp = inst.cmp();
    const double to_v1 = dist_point_vertex(inst, row.i, row.j, center, 1);
    const double to_vn = dist_point_vertex(inst, row.i, row.j, center, inst.n());
    return cmp.le(to_v1, row.radius) && cmp.le(to_vn, row.radius);
}

} // namespace

std::optional<Candidate> case3(const PathInstance& inst, Counters* counters) {
    if (inst.n() < 4) return std::nullopt;
    std::optional<Candidate> best;
    const SweepStats stats = sweep_case3(inst, [&](const Case3Row& row) {
        const CenterLocation center = resolve_case3_center(inst, row);
        if (!case3_tails_ok(inst, row, center)) return;
        keep_min(best, canonicalize_noop(
                           inst, Candidate{row.i, row.j, row.radius, center,
                                           CaseTag::Case3}));
    });
    record(counters, "case3", stats);
    return best;
}

std::vector<Candidate> case3_filtered_subcases(const PathInstance& inst) {
    std::vector<Candidate> out;
    if (inst.n() < 4) return out;
    const Cmp& cmp = inst.cmp();
    sweep_case3(inst, [&](const Case3Row& row) {
        const double left_arc = inst.path_dist(row.i, row.k);
        const double right_arc = inst.path_dist(row.k + 1, row.j);
        const double r = row.radius;
        const auto push = [&](Candidate cand) {
            if (case3_tails_ok(inst, row, cand.center)) {
                out.push_back(canonicalize_noop(inst, cand));
            }
        };
        // 3.1: center interior to the new edge
        if (cmp.gt(r, left_arc) && cmp.gt(r, right_arc)) {
            push({row.i, row.j, r, CenterLocation::on_new_edge(r - left_arc),
                  CaseTag::Case31});
        }
        // 3.2 with the center right of the split, on P(v_{k+1}, v_j)
        if (cmp.lt(r, right_arc)) {
            push({row.i, row.j, r, CenterLocation::on_path(inst.prefix(row.k + 1) + r),
                  CaseTag::Case32});
        }
        // 3.2 mirrored, center on P(v_i, v_k)
        if (cmp.lt(r, left_arc)) {
            push({row.i, row.j, r, CenterLocation::on_path(inst.prefix(row.k) - r),
                  CaseTag::Case32});
        }
    });
    return out;
}

Solution solve(const PathInstance& inst) {
    Solution solution;
    Counters& counters = solution.counters;

    const LambdaTable ltab = compute_lambda_table(inst);
    counters["lambda_beta_evals"] = ltab.counters.beta_evals;
    counters["lambda_k_advances"] = ltab.counters.k_advances;
    counters["lambda_j_advances"] = ltab.counters.j_advances;

    const PathInstance rev = reverse(inst);
    const LambdaTable ltab_rev = compute_lambda_table(rev);
    counters["lambda_rev_beta_evals"] = ltab_rev.counters.beta_evals;
    counters["lambda_rev_k_advances"] = ltab_rev.counters.k_advances;
    counters["lambda_rev_j_advances"] = ltab_rev.counters.j_advances;

    std::vector<Candidate>& cands = solution.all_candidates;
    const auto add = [&](std::optional<Candidate> cand) {
        if (cand) cands.push_back(canonicalize_noop(inst, *cand));
    };
    const auto add_mapped = [&](std::optional<Candidate> cand) {
        if (cand) {
            cands.push_back(canonicalize_noop(inst, map_reversed_candidate(inst, *cand)));
        }
    };

    add(case0(inst, ltab, &counters));
    add_mapped(case0(rev, ltab_rev, &counters));
    add(case11(inst, &counters));
    add(case1211(inst, &counters));
    add(case1212(inst, &counters));
    add(case122(inst, &counters));
    add_mapped(case11(rev, &counters));
    add_mapped(case1211(rev, &counters));
    add_mapped(case1212(rev, &counters));
    add_mapped(case122(rev, &counters));
    add(case3(inst, &counters));

    solution.best = *std::min_element(cands.begin(), cands.end(), candidate_before);
    return solution;
}

} // namespace roap
