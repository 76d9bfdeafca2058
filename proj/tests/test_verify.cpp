#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geomplex/builders.hpp"
#include "geomplex/generators.hpp"
#include "geomplex/metric.hpp"
#include "geomplex/verify.hpp"

using namespace geomplex;

TEST_CASE("generator shapes") {
    auto ps = gen_parallel_segments(1);
    REQUIRE(ps.points.size() == 4);  // unit square corners
    CHECK(ps.points[0] == std::vector<double>{0, 0});
    CHECK(ps.points[1] == std::vector<double>{1, 0});
    CHECK(ps.points[2] == std::vector<double>{0, 1});
    CHECK(ps.points[3] == std::vector<double>{1, 1});

    auto orips = gen_open_rips(3);
    CHECK(orips.points.size() == 6);
    CHECK(orips.points[0] == std::vector<double>{std::ldexp(1.0, -6), 0.5});

    auto ex = gen_witness_counterexample(0.1);
    REQUIRE(ex.L_prime.points.size() == 4);
    CHECK(ex.L_prime.points[0][0] == doctest::Approx(-0.1));
    CHECK(ex.L_prime.points[3][0] == doctest::Approx(1.1));
    CHECK_THROWS_AS(gen_witness_counterexample(0.6), ValidationError);

    auto tr = gen_two_rectangles(2);
    CHECK(tr.points.size() == 18);

    auto circ = gen_circle(6, 6.0);
    CHECK(circ(0, 1) == doctest::Approx(1.0));
    CHECK(circ(0, 3) == doctest::Approx(3.0));
    CHECK(circ(0, 5) == doctest::Approx(1.0));
}

TEST_CASE("subdivided trees") {
    auto star = gen_subdivided_tree(TreeSpec::star3(), 0.5);
    CHECK(star.n == 7);  // centre + 3 midpoints + 3 tips
    // leaf tips pairwise at distance 2
    int tips = 0;
    for (int i = 0; i < star.n; ++i)
        for (int j = i + 1; j < star.n; ++j)
            if (star(i, j) == doctest::Approx(2.0)) ++tips;
    CHECK(tips == 3);
    CHECK(star.triangle);

    auto path = gen_subdivided_tree(TreeSpec::path(1.0), 0.25);
    CHECK(path.n == 5);
    CHECK(path(0, 1) == doctest::Approx(1.0));

    auto bin = gen_subdivided_tree(TreeSpec::binary2(), 0.25);
    CHECK(bin.n == 7 + 6 * 3);
    CHECK_THROWS_AS(TreeSpec::by_name("weird"), ValidationError);
}

TEST_CASE("rips stability instances") {
    Rng rng(1);
    auto x = random_euclidean_space(rng, 3);
    auto same = verify_rips_stability(x, x, 1, 2);
    CHECK(same.passed);
    CHECK(same.lhs == 0.0);

    auto y = x;
    for (auto& v : y.d) v *= 1.5;
    auto scaled = verify_rips_stability(x, y, 1, 2);
    CHECK(scaled.passed);
    CHECK(scaled.rhs > 0.0);
}

TEST_CASE("stability batches pass") {
    BatchOptions opts;
    opts.trials = 12;
    opts.seed = 7;
    for (const char* name : {"rips-stability", "cech-stability", "ambient-cech", "witness-stability"}) {
        auto reports = run_verification(name, opts);
        REQUIRE(reports.size() >= static_cast<std::size_t>(opts.trials));
        for (const auto& r : reports) {
            INFO(name, " trial ", r.details.value("trial", -1));
            CHECK(r.passed);
        }
    }
}

TEST_CASE("dowker duality batch") {
    BatchOptions opts;
    opts.trials = 8;
    opts.seed = 13;
    for (const auto& r : run_verification("dowker", opts)) CHECK(r.passed);
}

TEST_CASE("witness counterexample report") {
    auto r = witness_counterexample_report(0.1, 2);
    CHECK(r.passed);
    CHECK(r.rhs == doctest::Approx(0.1));         // d_H(L, L') = delta
    CHECK(r.lhs >= 1.0 - 2 * 0.1 - 1e-9);         // instability: d_b at least 1 - 2 delta here
    CHECK(r.details["two_components_on_window"].get<bool>());
    CHECK_THROWS_AS(witness_counterexample_report(0.7, 2), ValidationError);
}

TEST_CASE("pathology growth checks") {
    auto quick = verify_pathology_growth("parallel-segments", {4, 8}, 1.0, 2);
    CHECK(quick.passed);
    CHECK(quick.details["rips_beta1"] == std::vector<int>{4, 8});
    CHECK(quick.details["cech_beta1"] == std::vector<int>{0, 0});

    auto orips = verify_pathology_growth("open-rips", {3, 4}, 1.0, 2);
    CHECK(orips.passed);
    CHECK(orips.details["rips_beta1"] == std::vector<int>{2, 3});

    auto rects = verify_pathology_growth("two-rectangles", {3, 4}, 1.5, 2);
    CHECK(rects.passed);

    CHECK_THROWS_AS(verify_pathology_growth("nope", {1}, 1.0, 2), ValidationError);
}

TEST_CASE("path metric theorem transfer") {
    auto r = verify_path_metric_theorem(16, 2);
    CHECK(r.passed);
    CHECK(r.details["significant_classes"] == 1);
    CHECK(verify_path_metric_theorem(8, 2).passed);  // smallest supported sample
    CHECK_THROWS_AS(verify_path_metric_theorem(4, 2), ValidationError);
}

TEST_CASE("hyperbolic theorem transfer") {
    auto star = verify_hyperbolic_theorem("star3", 0.5, 2);
    CHECK(star.passed);
    auto path = verify_hyperbolic_theorem("path", 0.5, 2);
    CHECK(path.passed);
    CHECK(path.details["h2_points"] == 0);  // contractible at every scale
}

TEST_CASE("interleaving batch") {
    BatchOptions opts;
    opts.trials = 4;
    opts.seed = 21;
    opts.size = 6;
    for (const auto& r : run_verification("interleaving", opts)) {
        INFO("trial ", r.details.value("trial", -1));
        CHECK(r.passed);
    }
}

TEST_CASE("witness densify hook reports without asserting") {
    BatchOptions opts;
    auto reports = run_verification("witness-densify", opts);
    CHECK(reports.size() == 5);
    for (const auto& r : reports) {
        CHECK(r.passed);
        CHECK(r.details.contains("density"));
    }
}

TEST_CASE("unknown theorem") {
    CHECK_THROWS_AS(run_verification("nonsense", BatchOptions{}), ValidationError);
}

TEST_CASE("batches are deterministic for a fixed seed") {
    BatchOptions opts;
    opts.trials = 5;
    opts.seed = 99;
    auto a = run_verification("rips-stability", opts);
    auto b = run_verification("rips-stability", opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].rhs == b[i].rhs);
        CHECK(a[i].details.dump() == b[i].details.dump());
    }
}
