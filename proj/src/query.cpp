#include "roap/query.hpp"

#include <algorithm>
#include <cmath>

#include "roap/oracle.hpp"
#include "roap/solver.hpp"

namespace roap {

RangeMaxTree::RangeMaxTree(const std::vector<double>& edge_lengths)
    : count_(static_cast<int>(edge_lengths.size())), lengths_(edge_lengths) {
    if (count_ == 0) return;
    leaves_ = 1;
    while (leaves_ < count_) leaves_ <<= 1;
    arg_.assign(static_cast<std::size_t>(2 * leaves_), 0);
    for (int k = 1; k <= count_; ++k) {
        arg_[static_cast<std::size_t>(leaves_ + k - 1)] = k;
    }
    for (int node = leaves_ - 1; node >= 1; --node) {
        const int a = arg_[static_cast<std::size_t>(2 * node)];
        const int b = arg_[static_cast<std::size_t>(2 * node + 1)];
        if (a == 0) {
            arg_[static_cast<std::size_t>(node)] = b;
        } else if (b == 0) {
            arg_[static_cast<std::size_t>(node)] = a;
        } else {
            // ties keep the smaller index, which is always `a`
            arg_[static_cast<std::size_t>(node)] =
                lengths_[static_cast<std::size_t>(b) - 1] > lengths_[static_cast<std::size_t>(a) - 1] ? b : a;
        }
    }
}

std::pair<int, double> RangeMaxTree::range_max(int lo, int hi,
                                               std::uint64_t* comparisons) const {
    if (lo < 1 || hi > count_ || lo > hi) throw EmptyRange("empty range-max query");
    int best = 0;
    const auto offer = [&](int cand) {
        if (comparisons) ++*comparisons;
        if (cand == 0) return;
        if (best == 0 ||
            lengths_[static_cast<std::size_t>(cand) - 1] > lengths_[static_cast<std::size_t>(best) - 1] ||
            (lengths_[static_cast<std::size_t>(cand) - 1] == lengths_[static_cast<std::size_t>(best) - 1] &&
             cand < best)) {
            best = cand;
        }
    };
    int l = leaves_ + lo - 1;
    int r = leaves_ + hi - 1;
    // collect left-side nodes ascending and right-side descending so smaller
    // indices are offered first
    std::vector<int> right_side;
    while (l <= r) {
        if (l & 1) offer(arg_[static_cast<std::size_t>(l++)]);
        if (!(r & 1)) right_side.push_back(arg_[static_cast<std::size_t>(r--)]);
        l >>= 1;
        r >>= 1;
    }
    for (auto it = right_side.rbegin(); it != right_side.rend(); ++it) offer(*it);
    return {best, lengths_[static_cast<std::size_t>(best) - 1]};
}

bool RangeMaxTree::heap_property_ok() const {
    for (int node = 1; node < leaves_; ++node) {
        const int parent = arg_[static_cast<std::size_t>(node)];
        const int a = arg_[static_cast<std::size_t>(2 * node)];
        const int b = arg_[static_cast<std::size_t>(2 * node + 1)];
        if (parent == 0) {
            if (a != 0 || b != 0) return false;
            continue;
        }
        const double pv = lengths_[static_cast<std::size_t>(parent) - 1];
        for (int child : {a, b}) {
            if (child != 0 && lengths_[static_cast<std::size_t>(child) - 1] > pv) return false;
        }
        if (parent != a && parent != b) return false;
    }
    return true;
}

namespace {

std::vector<double> edge_lengths_of(const PathInstance& inst) {
    std::vector<double> lengths;
    lengths.reserve(static_cast<std::size_t>(std::max(0, inst.n() - 1)));
    for (int k = 1; k < inst.n(); ++k) lengths.push_back(inst.path_dist(k, k + 1));
    return lengths;
}

} // namespace

QueryStructure::QueryStructure(const PathInstance& inst)
    : inst_(&inst),
      rev_(reverse(inst)),
      tree_(edge_lengths_of(inst)),
      rev_tree_(edge_lengths_of(rev_)) {}

QueryStructure preprocess(const PathInstance& inst) { return QueryStructure(inst); }

std::pair<int, double> range_max_edge(const QueryStructure& qs, int i, int j,
                                      std::uint64_t* comparisons) {
    const PathInstance& inst = qs.instance();
    inst.check_index(i);
    inst.check_index(j);
    if (i > j - 1) throw EmptyRange("no path edge in [i, j-1]");
    return qs.tree().range_max(i, j - 1, comparisons);
}

namespace {

// Smallest m in [lo, hi] with pred(m) true, assuming pred is monotone
// (false... false, true... true). Returns hi+1 when none.
template <typename Pred>
int first_true(int lo, int hi, std::uint64_t* comparisons, Pred pred) {
    int left = lo, right = hi + 1;
    while (left < right) {
        const int mid = left + (right - left) / 2;
        if (comparisons) ++*comparisons;
        if (pred(mid)) {
            right = mid;
        } else {
            left = mid + 1;
        }
    }
    return left;
}

// Largest m in [lo, hi] with pred(m) true, assuming pred is monotone
// (true... true, false... false). Returns lo-1 when none.
template <typename Pred>
int last_true(int lo, int hi, std::uint64_t* comparisons, Pred pred) {
    int left = lo - 1, right = hi;
    while (left < right) {
        const int mid = left + (right - left + 1) / 2;
        if (comparisons) ++*comparisons;
        if (pred(mid)) {
            left = mid;
        } else {
            right = mid - 1;
        }
    }
    return left;
}

double beta_by_midpoint(const PathInstance& inst, int i, int j,
                        std::uint64_t* comparisons) {
    if (i == j) return 0.0;
    const double edge_len = inst.dist(i, j);
    const double half_cycle = (inst.path_dist(i, j) + edge_len) / 2.0;
    const double target = inst.prefix(i) + half_cycle;  // arc position of q
    // q lies on P(v_i,v_j) because |v_i v_j| <= d_P(v_i,v_j)
    const int at_or_after =
        first_true(i, j, comparisons, [&](int m) { return inst.prefix(m) >= target; });
    if (comparisons) ++*comparisons;
    if (at_or_after <= j && inst.cmp().eq(inst.prefix(at_or_after), target)) {
        return half_cycle;  // q at a vertex
    }
    const int k = at_or_after - 1;  // q interior to e(v_k, v_{k+1})
    return std::max(inst.path_dist(i, k), edge_len + inst.path_dist(k + 1, j));
}

struct CandidateSink {
    std::vector<Candidate> items;
    void add(const Candidate& cand) { items.push_back(cand); }
};

// Candidate center at cycle distance r from v_k along the side of C(i,j)
// that avoids the path edge (v_k, v_{k+1}); same resolution as the solver's
// Case 3.
CenterLocation resolve_cycle_center(const PathInstance& inst, int i, int j, int k,
                                    double r) {
    const double left_arc = inst.path_dist(i, k);
    const double edge_len = inst.dist(i, j);
    if (r <= left_arc) return CenterLocation::on_path(inst.prefix(k) - r);
    if (r < left_arc + edge_len) return CenterLocation::on_new_edge(r - left_arc);
    return CenterLocation::on_path(inst.prefix(j) - (r - left_arc - edge_len));
}

bool tails_within(const PathInstance& inst, int i, int j,
                  const CenterLocation& center, double r,
                  std::uint64_t* comparisons) {
    if (comparisons) *comparisons += 2;
    const Cmp& cmp = inst.cmp();
    return cmp.le(dist_point_vertex(inst, i, j, center, 1), r) &&
           cmp.le(dist_point_vertex(inst, i, j, center, inst.n()), r);
}

// All forward-oriented configuration candidates for G(i,j); the mirrored
// ones come from running this on the reversed instance.
void forward_candidates(const PathInstance& inst, const RangeMaxTree& tree, int i,
                        int j, CandidateSink& sink, std::uint64_t* comparisons) {
    const int n = inst.n();
    const Cmp& cmp = inst.cmp();
    const double total = inst.total_length();
    const double head = inst.prefix(i);          // d_P(v_1, v_i)
    const double tail = total - inst.prefix(j);  // d_P(v_j, v_n)
    const double edge_len = inst.dist(i, j);
    const double cycle_len = inst.path_dist(i, j) + edge_len;

    // center on P(v_1, v_i)
    {
        const double beta_ij = beta_by_midpoint(inst, i, j, comparisons);
        const double gamma_ij = (j < n) ? edge_len + tail : 0.0;
        const double alpha = std::max(beta_ij, gamma_ij);
        if (comparisons) ++*comparisons;
        if (cmp.ge(head, alpha)) {
            const double r = (head + alpha) / 2.0;
            sink.add({i, j, r, CenterLocation::on_path(r), CaseTag::Case0});
        }
    }

    // Case 1.1: farthest pair (v_1, v_n), center interior to the new edge
    {
        const double r = (head + edge_len + tail) / 2.0;
        const int i1 =
            last_true(i, j, comparisons, [&](int m) { return cmp.le(inst.path_dist(i, m), head); });
        const int j1 = first_true(i, j, comparisons, [&](int m) {
            return cmp.le(inst.path_dist(m, j), tail);
        });
        if (comparisons) *comparisons += 3;
        if (cmp.gt(r, head) && cmp.gt(r, tail) && j1 <= i1 + 1) {
            sink.add({i, j, r, CenterLocation::on_new_edge(r - head), CaseTag::Case11});
        }
    }

    // Cases 1.2.1.1 / 1.2.1.2: farthest pair (v_1, v_b) with b inside [i,j]
    {
        const int b = first_true(i, j, comparisons, [&](int m) {
            return cmp.gt(inst.path_dist(i, m), head);
        });
        if (b < j) {
            const double back = inst.path_dist(b, j);
            const double r = (head + edge_len + back) / 2.0;
            if (comparisons) *comparisons += 3;
            if (cmp.lt(head, r) && cmp.lt(back, r) && cmp.ge(back, tail)) {
                sink.add({i, j, r, CenterLocation::on_new_edge(r - head),
                          CaseTag::Case1211});
            }
            if (cmp.le(tail, head + edge_len) && cmp.gt(back, r)) {
                const double arc = inst.prefix(j) - (r - head - edge_len);
                sink.add({i, j, r, CenterLocation::on_path(arc), CaseTag::Case1212});
            }
        }
    }

    // Case 1.2.2: shortest path to v_1 avoids the new edge, center on P(v_i,v_b)
    {
        if (comparisons) ++*comparisons;
        if (cmp.ge(head, edge_len + tail)) {
            const int b = last_true(i, j, comparisons, [&](int m) {
                return cmp.lt(head, edge_len + inst.path_dist(m, j));
            });
            if (b >= i) {
                const double r = inst.prefix(b) / 2.0;
                if (comparisons) ++*comparisons;
                if (cmp.gt(r, head)) {
                    sink.add({i, j, r, CenterLocation::on_path(r), CaseTag::Case122});
                }
            }
        }
    }

    if (j < i + 2) return;  // no interior vertex: Case 3 needs one

    // Case 3.1: both farthest vertices inside the cycle, center on the new
    // edge. a' and b' bracket the split edge; the split maximizes the gap.
    {
        const int iq = first_true(i, j, comparisons, [&](int m) {
            return cmp.ge(inst.path_dist(i, m), head);
        });
        const int jq = last_true(i, j, comparisons, [&](int m) {
            return cmp.ge(inst.path_dist(m, j), tail);
        });
        const int imid = first_true(i, j - 1, comparisons, [&](int m) {
            return cmp.gt(edge_len + inst.path_dist(i, m) + inst.path_dist(m, m + 1) / 2.0,
                          cycle_len / 2.0);
        });
        const int jmid = last_true(i + 1, j, comparisons, [&](int m) {
            return cmp.gt(edge_len + inst.path_dist(m, j) + inst.path_dist(m - 1, m) / 2.0,
                          cycle_len / 2.0);
        });
        if (iq <= j && jq >= i && imid <= j - 1 && jmid >= i + 1) {
            const int a_lo = std::max(iq, imid);
            const int b_hi = std::min(jq, jmid);
            if (a_lo < b_hi) {
                const auto [k, gap] = tree.range_max(a_lo, b_hi - 1, comparisons);
                const double r = (cycle_len - gap) / 2.0;
                const CenterLocation center = resolve_cycle_center(inst, i, j, k, r);
                if (tails_within(inst, i, j, center, r, comparisons)) {
                    sink.add({i, j, r, center, CaseTag::Case31});
                }
            }
        }
    }

    // Case 3.2 with the center right of the split, on P(v_{k+1}, v_j)
    {
        const int iq = first_true(i, j, comparisons, [&](int m) {
            return cmp.ge(inst.path_dist(i, m), head);
        });
        const int imid = first_true(i, j, comparisons, [&](int m) {
            return cmp.le(tail, edge_len + inst.path_dist(i, m));
        });
        const int bq = last_true(i + 1, j, comparisons, [&](int m) {
            return cmp.gt(inst.path_dist(m, j) + inst.path_dist(m - 1, m) / 2.0,
                          cycle_len / 2.0);
        });
        if (iq <= j && imid <= j && bq >= i + 1) {
            const int a_lo = std::max(iq, imid);
            if (a_lo < bq) {
                const auto [k, gap] = tree.range_max(a_lo, bq - 1, comparisons);
                const double r = (cycle_len - gap) / 2.0;
                const CenterLocation center = resolve_cycle_center(inst, i, j, k, r);
                if (tails_within(inst, i, j, center, r, comparisons)) {
                    sink.add({i, j, r, center, CaseTag::Case32});
                }
            }
        }
    }
}

} // namespace

double beta_query(const QueryStructure& qs, int i, int j, std::uint64_t* comparisons) {
    const PathInstance& inst = qs.instance();
    inst.check_index(i);
    inst.check_index(j);
    if (i > j) throw IndexError("beta_query requires i <= j");
    return beta_by_midpoint(inst, i, j, comparisons);
}

QueryResult query(const QueryStructure& qs, int i, int j) {
    const PathInstance& inst = qs.instance();
    inst.check_index(i);
    inst.check_index(j);
    if (i > j) throw IndexError("query requires i <= j");

    QueryResult result;
    const double total = inst.total_length();

    // G(i,j) = P when j <= i+1; the pure-path center always exists otherwise
    // too, as the configuration where the new edge is unused.
    Candidate best{i, j, total / 2.0, CenterLocation::on_path(total / 2.0),
                   CaseTag::NoEdge};
    std::uint64_t comparisons = 0;

    if (j > i + 1) {
        CandidateSink sink;
        forward_candidates(inst, qs.tree(), i, j, sink, &comparisons);

        const PathInstance& rev = qs.reversed_instance();
        const int n = inst.n();
        CandidateSink rev_sink;
        forward_candidates(rev, qs.reversed_tree(), n + 1 - j, n + 1 - i, rev_sink,
                           &comparisons);
        for (Candidate cand : rev_sink.items) {
            cand = map_reversed_candidate(inst, cand);
            sink.add(cand);
        }

        for (const Candidate& cand : sink.items) {
            if (candidate_before(cand, best)) best = cand;
        }
    }

    result.radius = best.radius;
    result.center = best.center;
    result.tag = best.tag;
    result.comparisons = comparisons;
    return result;
}

} // namespace roap
