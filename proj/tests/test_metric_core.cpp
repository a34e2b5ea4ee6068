#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "roap/instance.hpp"
#include "test_util.hpp"

using namespace roap;

TEST_CASE("build_from_points: collinear, singleton, 3-4-5") {
    const PathInstance line = test_util::line4();
    REQUIRE(line.n() == 4);
    CHECK(line.prefix(1) == 0.0);
    CHECK(line.prefix(2) == 1.0);
    CHECK(line.prefix(3) == 2.0);
    CHECK(line.prefix(4) == 3.0);

    const PathInstance single = build_from_points({{5.0, 5.0}}, MetricKind::Euclidean);
    CHECK(single.n() == 1);
    CHECK(single.prefix(1) == 0.0);

    const PathInstance hypot = build_from_points({{0.0, 0.0}, {3.0, 4.0}},
                                                 MetricKind::Euclidean);
    CHECK(hypot.prefix(2) == doctest::Approx(5.0));
    CHECK(hypot.dist(1, 2) == doctest::Approx(5.0));
}

TEST_CASE("build_from_points: duplicates rejected") {
    CHECK_THROWS_AS(build_from_points({{1.0}, {2.0}, {1.0}}, MetricKind::Euclidean),
                    DegenerateInstance);
    CHECK_THROWS_AS(build_from_points({{1.0}, {1.0}}, MetricKind::Euclidean),
                    DegenerateInstance);
}

TEST_CASE("build_from_matrix: basic and degenerate") {
    const PathInstance two = build_from_matrix({{0.0, 7.0}, {7.0, 0.0}});
    CHECK(two.n() == 2);
    CHECK(two.prefix(2) == 7.0);

    const PathInstance cyc = test_util::cycle8();
    CHECK(cyc.prefix(8) == 7.0);
    CHECK(cyc.dist(1, 8) == 1.0);

    CHECK_THROWS_AS(build_from_matrix({{0.0, 1.0}, {2.0, 0.0}}), InvalidMatrix);
    CHECK_THROWS_AS(build_from_matrix({{0.0, 0.0}, {0.0, 0.0}}), DegenerateInstance);
    CHECK_THROWS_AS(build_from_matrix({{0.0, 1.0, 2.0}, {1.0, 0.0, 1.0}}), InvalidMatrix);
}

TEST_CASE("validate_metric: cycle and euclidean valid, forced violation caught") {
    CHECK(validate_metric(test_util::cycle8(), ValidationMode::FullCubic).valid);

    const PathInstance eu = gen_random_euclidean(12, 7);
    CHECK(validate_metric(eu, ValidationMode::FullCubic).valid);
    CHECK(validate_metric(eu, ValidationMode::Sampled, 5000, 3).valid);

    const PathInstance bad = build_from_matrix({{0.0, 1.0, 10.0},
                                                {1.0, 0.0, 1.0},
                                                {10.0, 1.0, 0.0}});
    const MetricReport report = validate_metric(bad, ValidationMode::FullCubic);
    CHECK(!report.valid);
    REQUIRE(!report.violations.empty());
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.i == 1 && v.k == 2 && v.j == 3) {
            found = true;
            CHECK(v.slack == doctest::Approx(-8.0));
        }
    }
    CHECK(found);
}

TEST_CASE("path_dist: examples and errors") {
    const PathInstance line = test_util::line4();
    CHECK(line.path_dist(1, 4) == 3.0);
    CHECK(line.path_dist(2, 2) == 0.0);
    CHECK(test_util::cycle8().path_dist(2, 7) == 5.0);
    CHECK_THROWS_AS(line.path_dist(0, 1), IndexError);
    CHECK_THROWS_AS(line.path_dist(1, 5), IndexError);
}

TEST_CASE("path_dist is additive along the path") {
    for (const auto& inst : test_util::random_pool(12, 20, 42)) {
        for (int i = 1; i <= inst.n(); ++i) {
            for (int j = i; j <= inst.n(); ++j) {
                const int k = (i + j) / 2;
                CHECK(inst.path_dist(i, j) ==
                      doctest::Approx(inst.path_dist(i, k) + inst.path_dist(k, j)));
            }
        }
    }
}

TEST_CASE("metric distance never exceeds path distance on validated instances") {
    for (const auto& inst : test_util::random_pool(12, 18, 99)) {
        REQUIRE(validate_metric(inst, ValidationMode::FullCubic).valid);
        for (int i = 1; i <= inst.n(); ++i) {
            for (int j = i; j <= inst.n(); ++j) {
                CHECK(inst.dist(i, j) <= inst.path_dist(i, j) + 1e-9);
            }
        }
    }
}

TEST_CASE("reverse: examples") {
    const PathInstance line_rev = reverse(test_util::line4());
    CHECK(line_rev.prefix(4) == 3.0);
    CHECK(line_rev.prefix(2) == 1.0);

    const PathInstance skew = build_from_points({{0.0}, {1.0}, {3.0}},
                                                MetricKind::Euclidean);
    const PathInstance skew_rev = reverse(skew);
    CHECK(skew_rev.prefix(1) == 0.0);
    CHECK(skew_rev.prefix(2) == 2.0);
    CHECK(skew_rev.prefix(3) == 3.0);
}

TEST_CASE("reverse is an involution on observable behavior") {
    for (const auto& inst : test_util::random_pool(9, 16, 5)) {
        const int n = inst.n();
        const PathInstance rev = reverse(inst);
        const PathInstance twice = reverse(rev);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                CHECK(rev.dist(n + 1 - i, n + 1 - j) == doctest::Approx(inst.dist(i, j)));
                CHECK(rev.path_dist(n + 1 - i, n + 1 - j) ==
                      doctest::Approx(inst.path_dist(i, j)));
                CHECK(twice.dist(i, j) == doctest::Approx(inst.dist(i, j)));
            }
        }
    }
}
