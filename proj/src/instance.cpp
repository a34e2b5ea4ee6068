#include "roap/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace roap {

const char* to_string(MetricKind k) {
    switch (k) {
        case MetricKind::Euclidean: return "euclidean";
        case MetricKind::L1: return "l1";
        case MetricKind::Matrix: return "matrix";
    }
    return "?";
}

double PathInstance::dist(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return 0.0;
    const std::size_t a = static_cast<std::size_t>(i) - 1;
    const std::size_t b = static_cast<std::size_t>(j) - 1;
    if (metric_ == MetricKind::Matrix) {
        return matrix_[a * static_cast<std::size_t>(n_) + b];
    }
    const double* pa = coords_.data() + a * static_cast<std::size_t>(dim_);
    const double* pb = coords_.data() + b * static_cast<std::size_t>(dim_);
    if (metric_ == MetricKind::L1) {
        double s = 0.0;
        for (int d = 0; d < dim_; ++d) s += std::fabs(pa[d] - pb[d]);
        return s;
    }
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) {
        const double t = pa[d] - pb[d];
        s += t * t;
    }
    return std::sqrt(s);
}

double PathInstance::path_dist(int i, int j) const {
    check_index(i);
    check_index(j);
    return std::fabs(prefix_[static_cast<std::size_t>(j) - 1] -
                     prefix_[static_cast<std::size_t>(i) - 1]);
}

void PathInstance::build_prefix() {
    prefix_.assign(static_cast<std::size_t>(n_), 0.0);
    for (int k = 2; k <= n_; ++k) {
        const double step = dist(k - 1, k);
        if (step <= 0.0) {
            throw DegenerateInstance("consecutive vertices at zero distance");
        }
        prefix_[static_cast<std::size_t>(k) - 1] =
            prefix_[static_cast<std::size_t>(k) - 2] + step;
    }
}

PathInstance build_from_points(const std::vector<std::vector<double>>& points,
                               MetricKind kind, Cmp cmp) {
    if (points.empty()) throw DegenerateInstance("need at least one point");
    if (kind == MetricKind::Matrix) throw Error("matrix kind needs build_from_matrix");
    const int n = static_cast<int>(points.size());
    const int dim = static_cast<int>(points.front().size());
    if (dim < 1) throw DegenerateInstance("points need at least one coordinate");

    PathInstance inst;
    inst.n_ = n;
    inst.metric_ = kind;
    inst.dim_ = dim;
    inst.cmp_ = cmp;
    inst.coords_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(dim));
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim) {
            throw ParseError("inconsistent point dimension");
        }
        inst.coords_.insert(inst.coords_.end(), p.begin(), p.end());
    }

    // Distinctness: exact coordinate duplicates violate |v_i v_j| = 0 iff i = j.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const auto row = [&](int r) { return inst.coords_.data() + static_cast<std::size_t>(r) * dim; };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::lexicographical_compare(row(a), row(a) + dim, row(b), row(b) + dim);
    });
    for (int t = 1; t < n; ++t) {
        if (std::equal(row(order[t - 1]), row(order[t - 1]) + dim, row(order[t]))) {
            throw DegenerateInstance("duplicate points");
        }
    }

    inst.build_prefix();
    return inst;
}

PathInstance build_from_matrix(const std::vector<std::vector<double>>& matrix, Cmp cmp) {
    const int n = static_cast<int>(matrix.size());
    if (n < 1) throw DegenerateInstance("empty matrix");

    PathInstance inst;
    inst.n_ = n;
    inst.metric_ = MetricKind::Matrix;
    inst.cmp_ = cmp;
    inst.matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix[static_cast<std::size_t>(i)].size()) != n) {
            throw InvalidMatrix("matrix is not square");
        }
        for (int j = 0; j < n; ++j) {
            inst.matrix_[static_cast<std::size_t>(i) * n + j] = matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    for (int i = 0; i < n; ++i) {
        if (inst.matrix_[static_cast<std::size_t>(i) * n + i] != 0.0) {
            throw InvalidMatrix("matrix diagonal must be zero");
        }
        for (int j = i + 1; j < n; ++j) {
            const double a = inst.matrix_[static_cast<std::size_t>(i) * n + j];
            const double b = inst.matrix_[static_cast<std::size_t>(j) * n + i];
            if (!cmp.eq(a, b) && std::fabs(a - b) > 1e-9 * std::max(1.0, std::max(std::fabs(a), std::fabs(b)))) {
                throw InvalidMatrix("matrix is not symmetric");
            }
            if (a <= 0.0) {
                throw DegenerateInstance("off-diagonal entries must be positive");
            }
            // symmetrize within tolerance so dist(i,j) == dist(j,i) exactly
            inst.matrix_[static_cast<std::size_t>(j) * n + i] = a;
        }
    }

    inst.build_prefix();
    return inst;
}

PathInstance reverse(const PathInstance& inst) {
    PathInstance out;
    const int n = inst.n();
    out.n_ = n;
    out.metric_ = inst.metric_;
    out.dim_ = inst.dim_;
    out.cmp_ = inst.cmp_;
    if (out.metric_ == MetricKind::Matrix) {
        out.matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                out.matrix_[static_cast<std::size_t>(i) * n + j] =
                    inst.matrix_[static_cast<std::size_t>(n - 1 - i) * n + (n - 1 - j)];
            }
        }
    } else {
        out.coords_.resize(inst.coords_.size());
        const int dim = inst.dim_;
        for (int i = 0; i < n; ++i) {
            std::copy_n(inst.coords_.data() + static_cast<std::size_t>(n - 1 - i) * dim, dim,
                        out.coords_.data() + static_cast<std::size_t>(i) * dim);
        }
    }
    out.build_prefix();
    return out;
}

namespace {

void check_triple(const PathInstance& inst, int i, int k, int j, MetricReport& report) {
    const double direct = inst.dist(i, j);
    const double via = inst.dist(i, k) + inst.dist(k, j);
    const double slack = via - direct;
    if (slack < -inst.cmp().tol(via, direct)) {
        report.violations.push_back({i, k, j, slack});
    }
}

} // namespace

MetricReport validate_metric(const PathInstance& inst, ValidationMode mode,
                             std::int64_t sample_count, std::uint64_t seed) {
    MetricReport report;
    const int n = inst.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (inst.dist(i, j) <= 0.0) report.duplicate_pairs.emplace_back(i, j);
        }
    }
    if (mode == ValidationMode::FullCubic) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    check_triple(inst, i, k, j, report);
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(1, n);
        for (std::int64_t t = 0; t < sample_count; ++t) {
            const int i = pick(rng), k = pick(rng), j = pick(rng);
            if (i == k || k == j || i == j) continue;
            check_triple(inst, i, k, j, report);
        }
    }
    report.valid = report.violations.empty() && report.duplicate_pairs.empty();
    return report;
}

} // namespace roap
