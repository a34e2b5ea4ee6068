#pragma once

#include <cstdint>
#include <vector>

#include "roap/errors.hpp"
#include "roap/scalar.hpp"

namespace roap {

enum class MetricKind { Euclidean, L1, Matrix };

const char* to_string(MetricKind k);

// A path graph v_1..v_n embedded in a metric space. Immutable after
// construction; all indices are 1-based. dist() and path_dist() are O(1)
// for matrix instances and O(d) for coordinate instances.
class PathInstance {
public:
    int n() const { return n_; }

    // Metric distance |v_i v_j|.
    double dist(int i, int j) const;

    // d_P(v_i, v_j) = |W_j - W_i|.
    double path_dist(int i, int j) const;

    // W_k = d_P(v_1, v_k).
    double prefix(int k) const {
        check_index(k);
        return prefix_[static_cast<std::size_t>(k) - 1];
    }

    double total_length() const { return prefix_.back(); }

    const Cmp& cmp() const { return cmp_; }
    bool exact() const { return cmp_.exact; }
    MetricKind metric() const { return metric_; }

    int dim() const { return dim_; }
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<double>& matrix() const { return matrix_; }

    void check_index(int i) const {
        if (i < 1 || i > n_) throw IndexError("vertex index out of range");
    }

private:
    friend PathInstance build_from_points(const std::vector<std::vector<double>>&,
                                          MetricKind, Cmp);
    friend PathInstance build_from_matrix(const std::vector<std::vector<double>>&, Cmp);
    friend PathInstance reverse(const PathInstance&);

    int n_ = 0;
    MetricKind metric_ = MetricKind::Euclidean;
    int dim_ = 0;
    std::vector<double> coords_;  // n * dim, row-major; empty for matrix instances
    std::vector<double> matrix_;  // n * n; empty for coordinate instances
    std::vector<double> prefix_;  // W, prefix_[0] = 0, strictly increasing
    Cmp cmp_;

    void build_prefix();
};

PathInstance build_from_points(const std::vector<std::vector<double>>& points,
                               MetricKind kind, Cmp cmp = Cmp::standard());

PathInstance build_from_matrix(const std::vector<std::vector<double>>& matrix,
                               Cmp cmp = Cmp::standard());

// Vertex k maps to n+1-k.
PathInstance reverse(const PathInstance& inst);

enum class ValidationMode { FullCubic, Sampled };

struct TriangleViolation {
    int i, k, j;
    double slack;  // dist(i,k) + dist(k,j) - dist(i,j), negative when violated
};

struct MetricReport {
    bool valid = true;
    std::vector<TriangleViolation> violations;
    std::vector<std::pair<int, int>> duplicate_pairs;
};

MetricReport validate_metric(const PathInstance& inst, ValidationMode mode,
                             std::int64_t sample_count = 100000,
                             std::uint64_t seed = 1);

} // namespace roap
