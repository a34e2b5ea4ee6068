#pragma once

#include <utility>
#include <vector>

#include "roap/solver_types.hpp"

namespace roap {

// Balanced binary tree over the n-1 path edges; each node stores the index
// of the longest edge in its span (ties: smallest index). Built bottom-up
// in O(n); queries in O(log n).
class RangeMaxTree {
public:
    RangeMaxTree() = default;
    explicit RangeMaxTree(const std::vector<double>& edge_lengths);

    int edge_count() const { return count_; }

    // Longest edge with index in [lo, hi] (1-based, inclusive).
    std::pair<int, double> range_max(int lo, int hi,
                                     std::uint64_t* comparisons = nullptr) const;

    // Every internal node stores the winner of its children.
    bool heap_property_ok() const;

private:
    int count_ = 0;
    int leaves_ = 0;               // padded to a power of two
    std::vector<int> arg_;         // 1-based heap of edge indices, 0 = empty
    std::vector<double> lengths_;  // edge k at lengths_[k-1]
};

// O(n) preprocessing for O(log n) radius/center queries. Keeps a pointer to
// the instance (caller owns it) plus a reversed copy for the mirrored cases.
class QueryStructure {
public:
    explicit QueryStructure(const PathInstance& inst);

    const PathInstance& instance() const { return *inst_; }
    const PathInstance& reversed_instance() const { return rev_; }
    const RangeMaxTree& tree() const { return tree_; }
    const RangeMaxTree& reversed_tree() const { return rev_tree_; }

private:
    const PathInstance* inst_;
    PathInstance rev_;
    RangeMaxTree tree_;
    RangeMaxTree rev_tree_;
};

QueryStructure preprocess(const PathInstance& inst);

// Longest path edge (v_k, v_{k+1}) with k in [i, j-1].
std::pair<int, double> range_max_edge(const QueryStructure& qs, int i, int j,
                                      std::uint64_t* comparisons = nullptr);

// beta(i,j) in O(log n) by locating the cycle's halfway point on P(v_i,v_j).
double beta_query(const QueryStructure& qs, int i, int j,
                  std::uint64_t* comparisons = nullptr);

// Radius and center of G(i,j) in O(log n).
QueryResult query(const QueryStructure& qs, int i, int j);

} // namespace roap
