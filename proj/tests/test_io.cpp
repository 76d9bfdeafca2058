#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "geomplex/builders.hpp"
#include "geomplex/generators.hpp"
#include "geomplex/io.hpp"

using namespace geomplex;

TEST_CASE("double formatting round-trips") {
    for (double v : {0.0, 1.0, 0.1, -2.375, 1e-9, 12345.678901234567}) {
        CHECK(parse_double(format_double(v)) == v);
    }
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(std::isinf(parse_double("inf")));
    CHECK(parse_double("-inf") < 0);
    CHECK_THROWS_AS(parse_double("zebra"), ParseError);
    CHECK_THROWS_AS(parse_double("1.5x"), ParseError);
}

TEST_CASE("dissimilarity file format") {
    std::istringstream in(
        "# a comment\n"
        "dist 3\n"
        "0 1 5\n"
        "1 0 1\n"
        "5 1 0\n");
    auto m = load_dissimilarity(in);
    CHECK(m.n == 3);
    CHECK(m(0, 2) == 5.0);
    CHECK_FALSE(m.triangle);

    std::ostringstream out;
    save_dissimilarity(out, m);
    std::istringstream back(out.str());
    auto again = load_dissimilarity(back);
    CHECK(again.d == m.d);

    std::istringstream bad_header("dost 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(load_dissimilarity(bad_header), ParseError);
    std::istringstream short_data("dist 2\n0 1\n");
    CHECK_THROWS_AS(load_dissimilarity(short_data), ParseError);
    std::istringstream asym("dist 2\n0 1\n2 0\n");
    CHECK_THROWS_AS(load_dissimilarity(asym), ValidationError);
    std::istringstream genfail("dist 2\n3 1\n1 0\n");
    CHECK_THROWS_AS(load_dissimilarity(genfail), ValidationError);
}

TEST_CASE("cross-dissimilarity file format") {
    std::istringstream in("dowker 2 3\n0 1 2\n3 4 5\n");
    auto lam = load_cross_dissimilarity(in);
    CHECK(lam.m == 2);
    CHECK(lam.n == 3);
    CHECK(lam(1, 2) == 5.0);
    std::ostringstream out;
    save_cross_dissimilarity(out, lam);
    CHECK(out.str() == "dowker 2 3\n0 1 2\n3 4 5\n");
}

TEST_CASE("point cloud csv") {
    std::istringstream in("0,0\n# note\n3,4\n");
    auto pts = load_point_cloud_csv(in);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == std::vector<double>{3, 4});

    PointCloud pc;
    pc.points = pts;
    std::ostringstream out;
    save_point_cloud_csv(out, pc);
    CHECK(out.str() == "0,0\n3,4\n");
}

TEST_CASE("correspondence file") {
    std::istringstream in("0 0\n1 0\n1 1\n");
    auto c = load_correspondence(in, 2, 2);
    CHECK(c.is_correspondence());
    std::ostringstream out;
    save_correspondence(out, c);
    CHECK(out.str() == "0 0\n1 0\n1 1\n");
    std::istringstream bad("0\n");
    CHECK_THROWS_AS(load_correspondence(bad, 1, 1), ParseError);
}

TEST_CASE("complex export is sorted by (value, dim, vertices)") {
    auto K = rips_filtration(gen_circle(4, 4.0), 2);
    std::ostringstream out;
    save_complex(out, K);
    std::string text = out.str();
    CHECK(text.find("0 0 0\n") == 0);  // first line: vertex 0 at value 0
    // edges at value 1 appear before anything at value 2
    CHECK(text.find("1 0 1 1") < text.find("1 0 2 2"));
}

TEST_CASE("diagram tsv and json round-trip") {
    PersistenceDiagram d;
    d.points = {{0, 0.0, std::numeric_limits<double>::infinity()}, {1, 0.25, 2.5}};
    std::ostringstream out;
    save_diagram_tsv(out, d);
    CHECK(out.str() == "0\t0\tinf\n1\t0.25\t2.5\n");
    std::istringstream in(out.str());
    auto back = load_diagram_tsv(in);
    CHECK(back.same_multiset(d));

    auto js = diagram_to_json(d);
    CHECK(diagram_from_json(js).same_multiset(d));
    CHECK_THROWS_AS(diagram_from_json("{"), ParseError);
}

TEST_CASE("dowker duality produces byte-identical diagram files") {
    Rng rng(4);
    for (int t = 0; t < 5; ++t) {
        Rng trial = rng.fork(t);
        auto lam = random_cross_dissimilarity(trial, 5, 6);
        auto a = compute_persistence(dowker_filtration(lam, 3)).restrict_max_dim(2);
        auto b = compute_persistence(dowker_filtration(dowker_transpose(lam), 3)).restrict_max_dim(2);
        std::ostringstream sa, sb;
        save_diagram_tsv(sa, a);
        save_diagram_tsv(sb, b);
        CHECK(sa.str() == sb.str());
    }
}

TEST_CASE("cech equals dowker with W = X byte for byte") {
    Rng rng(6);
    auto m = random_euclidean_space(rng, 6);
    auto a = compute_persistence(cech_intrinsic_filtration(m, 2));
    auto b = compute_persistence(dowker_filtration(CrossDissimilarity::from_square(m), 2));
    std::ostringstream sa, sb;
    save_diagram_tsv(sa, a);
    save_diagram_tsv(sb, b);
    CHECK(sa.str() == sb.str());
}
