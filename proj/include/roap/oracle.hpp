#pragma once

#include <utility>

#include "roap/solver_types.hpp"

namespace roap {

struct EdgeRef {
    enum class Kind { PathEdge, NewEdge };
    Kind kind = Kind::NewEdge;
    int k = 0;  // PathEdge: (v_k, v_{k+1}), 1 <= k <= n-1

    static EdgeRef path_edge(int k) { return {Kind::PathEdge, k}; }
    static EdgeRef new_edge() { return {Kind::NewEdge, 0}; }
};

// Exact distance from a point of G(i,j) to vertex v_k, by enumerating the
// closed-form routes through the single extra edge. O(1).
double dist_point_vertex(const PathInstance& inst, int i, int j,
                         const CenterLocation& location, int k);

// max_k dist_point_vertex; O(n).
double eccentricity(const PathInstance& inst, int i, int j,
                    const CenterLocation& location);

struct EdgeCenter {
    double radius;
    double t;  // offset from the edge's left endpoint (v_k or v_i)
};

// 1-center restricted to one edge of G(i,j): minimizes
// f(t) = max_k min(d_G(u,v_k)+t, d_G(w,v_k)+L-t) over t in [0,L].
// The envelope has slope +-1 pieces, so the minimum lies at an endpoint,
// a tent breakpoint, or a rising/falling crossing; f is evaluated from its
// definition at every such candidate. Smallest t wins ties.
EdgeCenter edge_restricted_radius(const PathInstance& inst, int i, int j, EdgeRef edge);

// Exact radius and center of G(i,j): minimum of edge_restricted_radius over
// all path edges plus the new edge. Deterministic tie-break: earlier edge,
// then smaller t.
QueryResult center_bruteforce(const PathInstance& inst, int i, int j);

// Exhaustive optimum over all pairs (i,j). Throws CapExceeded above the cap.
Solution roap_bruteforce(const PathInstance& inst, int cap = 60);

// lambda_i by the defining triple loop; returns the value and the smallest
// achieving j.
std::pair<double, int> lambda_bruteforce(const PathInstance& inst, int i);

} // namespace roap
