#pragma once

#include <cstdint>

#include "roap/instance.hpp"

namespace roap {

// Unit-spaced collinear points 0..n-1; integer lengths, exact comparisons.
PathInstance gen_line(int n);

// Cycle metric m[i][j] = min(|i-j|, n-|i-j|): the unit-edge n-cycle.
// Integer lengths, exact comparisons. scale != 1 divides every entry
// (e.g. 1/n for total cycle length 1) and switches to float comparisons.
PathInstance gen_cycle_metric(int n, double scale = 1.0);

// n distinct uniform points in [0,1]^dim.
PathInstance gen_random_euclidean(int n, std::uint64_t seed, int dim = 2);

// Random symmetric positive matrix replaced by its all-pairs shortest-path
// closure, which always satisfies the triangle inequality.
PathInstance gen_random_metric_closure(int n, std::uint64_t seed);

} // namespace roap
