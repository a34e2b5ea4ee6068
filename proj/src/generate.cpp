#include "roap/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace roap {

PathInstance gen_line(int n) {
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pts.push_back({static_cast<double>(k)});
    return build_from_points(pts, MetricKind::Euclidean, Cmp::exact_int());
}

PathInstance gen_cycle_metric(int n, double scale) {
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int around = std::abs(i - j);
            const double d = static_cast<double>(std::min(around, n - around));
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d * scale;
        }
    }
    const Cmp cmp = (scale == 1.0) ? Cmp::exact_int() : Cmp::standard();
    return build_from_matrix(m, cmp);
}

PathInstance gen_random_euclidean(int n, std::uint64_t seed, int dim) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::set<std::vector<double>> seen;
    while (static_cast<int>(pts.size()) < n) {
        std::vector<double> p(static_cast<std::size_t>(dim));
        for (double& c : p) c = coord(rng);
        if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    return build_from_points(pts, MetricKind::Euclidean, Cmp::standard());
}

PathInstance gen_random_metric_closure(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(0.5, 2.0);
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = entry(rng);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::min(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                 m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
            }
        }
    }
    return build_from_matrix(m, Cmp::standard());
}

} // namespace roap
