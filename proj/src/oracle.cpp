#include "roap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace roap {

namespace {

// Vertex-to-vertex distance in G(i,j): path, or either orientation of the
// detour through e(v_i,v_j).
double vertex_dist(const PathInstance& inst, int i, int j, int a, int b) {
    const double direct = inst.path_dist(a, b);
    const double edge_len = inst.dist(i, j);
    const double via_ij = inst.path_dist(a, i) + edge_len + inst.path_dist(j, b);
    const double via_ji = inst.path_dist(a, j) + edge_len + inst.path_dist(i, b);
    return std::min({direct, via_ij, via_ji});
}

} // namespace

double dist_point_vertex(const PathInstance& inst, int i, int j,
                         const CenterLocation& location, int k) {
    inst.check_index(i);
    inst.check_index(j);
    inst.check_index(k);
    if (i > j) throw IndexError("dist_point_vertex requires i <= j");
    const double edge_len = inst.dist(i, j);
    const double wk = inst.prefix(k);
    if (location.kind == CenterLocation::Kind::OnPath) {
        const double s = location.pos;
        if (s < -1e-9 || s > inst.total_length() + 1e-9) {
            throw IndexError("OnPath arc outside the path");
        }
        const double direct = std::fabs(s - wk);
        const double via_ij = std::fabs(s - inst.prefix(i)) + edge_len + inst.path_dist(j, k);
        const double via_ji = std::fabs(s - inst.prefix(j)) + edge_len + inst.path_dist(i, k);
        return std::min({direct, via_ij, via_ji});
    }
    const double t = location.pos;
    if (t < -1e-9 || t > edge_len + 1e-9) {
        throw IndexError("OnNewEdge offset outside the edge");
    }
    const double via_i = t + std::min(inst.path_dist(i, k), edge_len + inst.path_dist(j, k));
    const double via_j = (edge_len - t) + std::min(inst.path_dist(j, k), edge_len + inst.path_dist(i, k));
    return std::min(via_i, via_j);
}

double eccentricity(const PathInstance& inst, int i, int j,
                    const CenterLocation& location) {
    double worst = 0.0;
    for (int k = 1; k <= inst.n(); ++k) {
        worst = std::max(worst, dist_point_vertex(inst, i, j, location, k));
    }
    return worst;
}

EdgeCenter edge_restricted_radius(const PathInstance& inst, int i, int j, EdgeRef edge) {
    const int n = inst.n();
    double edge_length;
    int u, w;  // endpoints, left to right
    if (edge.kind == EdgeRef::Kind::PathEdge) {
        if (edge.k < 1 || edge.k >= n) throw IndexError("path edge index out of range");
        u = edge.k;
        w = edge.k + 1;
        edge_length = inst.path_dist(u, w);
    } else {
        u = i;
        w = j;
        edge_length = inst.dist(i, j);
    }

    std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    std::vector<double> peak(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k) - 1;
        a[idx] = vertex_dist(inst, i, j, u, k);
        b[idx] = vertex_dist(inst, i, j, w, k);
        peak[idx] = (edge_length + b[idx] - a[idx]) / 2.0;
    }

    // Tent k equals a_k + t left of its peak and b_k + L - t right of it.
    // Between consecutive (clamped) peaks every tent is on one fixed side, so
    // the envelope there is max(t + maxA_rising, L - t + maxB_falling) and its
    // minimum over the slab sits at a slab end or at the crossing of those
    // two lines.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return peak[static_cast<std::size_t>(x)] < peak[static_cast<std::size_t>(y)];
    });

    std::vector<double> breaks;
    breaks.reserve(static_cast<std::size_t>(n) + 2);
    breaks.push_back(0.0);
    for (int idx : order) {
        const double p = std::clamp(peak[static_cast<std::size_t>(idx)], 0.0, edge_length);
        if (p > breaks.back()) breaks.push_back(p);
    }
    if (breaks.back() < edge_length) breaks.push_back(edge_length);

    const std::size_t m = order.size();
    std::vector<double> pref_b(m + 1, -1.0), suf_a(m + 1, -1.0);
    for (std::size_t t = 0; t < m; ++t) {
        pref_b[t + 1] = std::max(pref_b[t], b[static_cast<std::size_t>(order[t])]);
    }
    for (std::size_t t = m; t-- > 0;) {
        suf_a[t] = std::max(suf_a[t + 1], a[static_cast<std::size_t>(order[t])]);
    }

    if (breaks.size() == 1) {  // zero-length edge (i == j)
        double v = 0.0;
        for (int k = 0; k < n; ++k) {
            v = std::max(v, std::min(a[static_cast<std::size_t>(k)],
                                     b[static_cast<std::size_t>(k)] + edge_length));
        }
        return {v, 0.0};
    }

    double best_t = 0.0;
    double best_val = -1.0;
    std::size_t cnt_fall = 0;  // tents with peak <= current slab's left end
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double lo = breaks[s], hi = breaks[s + 1];
        while (cnt_fall < m && peak[static_cast<std::size_t>(order[cnt_fall])] <= lo) ++cnt_fall;
        const double max_b = pref_b[cnt_fall];  // falling side
        const double max_a = suf_a[cnt_fall];   // rising side
        const auto eval = [&](double t) {
            double v = -1.0;
            if (max_a >= 0.0) v = std::max(v, max_a + t);
            if (max_b >= 0.0) v = std::max(v, max_b + edge_length - t);
            return v;
        };
        // candidates are visited in increasing t, so strict improvement keeps
        // the smallest minimizer on ties
        const auto consider = [&](double t) {
            const double v = eval(t);
            if (best_val < 0.0 || v < best_val) {
                best_val = v;
                best_t = t;
            }
        };
        consider(lo);
        if (max_a >= 0.0 && max_b >= 0.0) {
            const double cross = (edge_length + max_b - max_a) / 2.0;
            if (cross > lo && cross < hi) consider(cross);
        }
        consider(hi);
    }
    return {best_val, best_t};
}

QueryResult center_bruteforce(const PathInstance& inst, int i, int j) {
    inst.check_index(i);
    inst.check_index(j);
    if (i > j) throw IndexError("center_bruteforce requires i <= j");
    const int n = inst.n();
    QueryResult result;
    result.tag = CaseTag::Oracle;
    if (n == 1) {
        result.radius = 0.0;
        result.center = CenterLocation::on_path(0.0);
        return result;
    }
    bool have = false;
    for (int k = 1; k < n; ++k) {
        const EdgeCenter ec = edge_restricted_radius(inst, i, j, EdgeRef::path_edge(k));
        if (!have || ec.radius < result.radius) {
            have = true;
            result.radius = ec.radius;
            result.center = CenterLocation::on_path(inst.prefix(k) + ec.t);
        }
    }
    if (j > i + 1) {
        const EdgeCenter ec = edge_restricted_radius(inst, i, j, EdgeRef::new_edge());
        if (!have || ec.radius < result.radius) {
            result.radius = ec.radius;
            result.center = CenterLocation::on_new_edge(ec.t);
        }
    }
    return result;
}

Solution roap_bruteforce(const PathInstance& inst, int cap) {
    const int n = inst.n();
    if (n > cap) throw CapExceeded("roap_bruteforce cap exceeded");
    Solution solution;
    const QueryResult base = center_bruteforce(inst, 1, 1);
    solution.best = Candidate{1, 1, base.radius, base.center, CaseTag::NoEdge};
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 2; j <= n; ++j) {
            const QueryResult qr = center_bruteforce(inst, i, j);
            if (qr.radius < solution.best.radius) {
                solution.best = Candidate{i, j, qr.radius, qr.center, CaseTag::Oracle};
            }
        }
    }
    solution.all_candidates.push_back(solution.best);
    return solution;
}

std::pair<double, int> lambda_bruteforce(const PathInstance& inst, int i) {
    inst.check_index(i);
    const int n = inst.n();
    double best = 0.0;
    int best_j = n;
    bool have = false;
    for (int j = i; j <= n; ++j) {
        const double edge_len = inst.dist(i, j);
        double alpha = 0.0;
        for (int k = i; k <= n; ++k) {
            alpha = std::max(alpha, std::min(inst.path_dist(i, k),
                                             edge_len + inst.path_dist(j, k)));
        }
        if (!have || alpha < best) {
            have = true;
            best = alpha;
            best_j = j;
        }
    }
    return {best, best_j};
}

} // namespace roap
