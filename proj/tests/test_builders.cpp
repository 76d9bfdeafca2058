#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "geomplex/builders.hpp"
#include "geomplex/generators.hpp"

using namespace geomplex;

namespace {

double value_of(const FilteredComplex& K, std::vector<int> vertices) {
    for (const auto& s : K.simplices)
        if (s.vertices == vertices) return s.value;
    FAIL("simplex not found");
    return 0;
}

bool has_simplex(const std::vector<Simplex>& simplices, std::vector<int> vertices) {
    for (const auto& s : simplices)
        if (s.vertices == vertices) return true;
    return false;
}

DissimilarityMatrix equilateral(double side) {
    return DissimilarityMatrix::from_entries(3, {0, side, side, side, 0, side, side, side, 0});
}

}  // namespace

TEST_CASE("rips filtration basics") {
    auto K = rips_filtration(equilateral(1.0), 2);
    K.validate();
    CHECK(K.simplices.size() == 7);
    CHECK(value_of(K, {0}) == 0.0);
    CHECK(value_of(K, {0, 1}) == 1.0);
    CHECK(value_of(K, {0, 1, 2}) == 1.0);

    auto two = rips_filtration(DissimilarityMatrix::from_entries(2, {0, 0.7, 0.7, 0}), 1);
    CHECK(value_of(two, {0, 1}) == 0.7);
}

TEST_CASE("rips on the 4-point geodesic circle") {
    auto m = gen_circle(4, 4.0);
    auto K = rips_filtration(m, 3);
    K.validate();
    // brute-force diameters straight off the matrix
    for (const auto& s : K.simplices) {
        double diam = 0;
        for (int a : s.vertices)
            for (int b : s.vertices) diam = std::max(diam, m(a, b));
        CHECK(s.value == diam);
    }
    CHECK(value_of(K, {0, 1}) == 1.0);
    CHECK(value_of(K, {1, 2}) == 1.0);
    CHECK(value_of(K, {0, 2}) == 2.0);  // diagonal
    CHECK(value_of(K, {0, 1, 2}) == 2.0);
    CHECK(value_of(K, {0, 1, 2, 3}) == 2.0);
}

TEST_CASE("rips_complex_at strictness") {
    auto m = DissimilarityMatrix::from_entries(2, {0, 1, 1, 0});
    auto open = rips_complex_at(m, 1.0, true, 1);
    CHECK(open.size() == 2);  // vertices only
    CHECK_FALSE(has_simplex(open, {0, 1}));
    auto closed = rips_complex_at(m, 1.0, false, 1);
    CHECK(has_simplex(closed, {0, 1}));
}

TEST_CASE("open rips construction joins the clusters by exactly N edges") {
    const int N = 4;
    auto m = pointcloud_to_matrix(gen_open_rips(N));
    auto edges = rips_complex_at(m, 1.0, true, 1);
    // L = indices 0..N-1, R = N..2N-1
    int within_l = 0, within_r = 0, cross = 0;
    for (const auto& s : edges) {
        if (s.dim() != 1) continue;
        bool a_left = s.vertices[0] < N, b_left = s.vertices[1] < N;
        if (a_left && b_left)
            ++within_l;
        else if (!a_left && !b_left)
            ++within_r;
        else {
            ++cross;
            CHECK(s.vertices[1] == s.vertices[0] + N);  // each L vertex pairs with its own R vertex
        }
    }
    CHECK(within_l == N * (N - 1) / 2);  // complete graph on L
    CHECK(within_r == N * (N - 1) / 2);  // complete graph on R
    CHECK(cross == N);
}

TEST_CASE("intrinsic cech values") {
    auto two = cech_intrinsic_filtration(DissimilarityMatrix::from_entries(2, {0, 0.7, 0.7, 0}), 1);
    CHECK(value_of(two, {0, 1}) == 0.7);  // best centre is an endpoint

    auto tri = cech_intrinsic_filtration(equilateral(1.0), 2);
    CHECK(value_of(tri, {0, 1, 2}) == 1.0);  // any vertex is a 1-centre

    // three collinear points 0, 1, 2: centre in the middle beats the diameter
    auto line = DissimilarityMatrix::from_entries(3, {0, 1, 2, 1, 0, 1, 2, 1, 0});
    auto K = cech_intrinsic_filtration(line, 2);
    CHECK(value_of(K, {0, 2}) == 1.0);
    CHECK(value_of(rips_filtration(line, 2), {0, 2}) == 2.0);
}

TEST_CASE("dowker filtration") {
    auto single = dowker_filtration(CrossDissimilarity::from_entries(1, 1, {3.5}), 0);
    CHECK(value_of(single, {0}) == 3.5);

    auto lam = CrossDissimilarity::from_entries(2, 2, {0, 5, 5, 0});
    auto K = dowker_filtration(lam, 1);
    CHECK(value_of(K, {0}) == 0.0);
    CHECK(value_of(K, {1}) == 0.0);
    CHECK(value_of(K, {0, 1}) == 5.0);
}

TEST_CASE("dowker of a square metric equals the intrinsic cech filtration") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        Rng trial = rng.fork(t);
        auto m = random_euclidean_space(trial, trial.uniform_int(2, 6));
        auto cech = cech_intrinsic_filtration(m, 2);
        auto dow = dowker_filtration(CrossDissimilarity::from_square(m), 2);
        REQUIRE(cech.simplices.size() == dow.simplices.size());
        for (std::size_t i = 0; i < cech.simplices.size(); ++i) {
            CHECK(cech.simplices[i].vertices == dow.simplices[i].vertices);
            CHECK(cech.simplices[i].value == dow.simplices[i].value);
        }
    }
}

TEST_CASE("dowker transpose") {
    auto lam = CrossDissimilarity::from_entries(2, 3, {1, 2, 3, 4, 5, 6});
    auto t = dowker_transpose(lam);
    CHECK(t.m == 3);
    CHECK(t.n == 2);
    for (int l = 0; l < 2; ++l)
        for (int w = 0; w < 3; ++w) CHECK(t(w, l) == lam(l, w));
    auto tt = dowker_transpose(t);
    CHECK(tt.lambda == lam.lambda);

    auto sym = CrossDissimilarity::from_entries(2, 2, {0, 1, 1, 0});
    CHECK(dowker_transpose(sym).lambda == sym.lambda);
}

TEST_CASE("ambient cech filtration") {
    Rng rng(42);
    auto amb = random_euclidean_space(rng, 6);
    std::vector<int> all{0, 1, 2, 3, 4, 5};

    // L = W = everything: the intrinsic filtration
    auto a = ambient_cech_filtration(all, all, amb, 2);
    auto c = cech_intrinsic_filtration(amb, 2);
    REQUIRE(a.simplices.size() == c.simplices.size());
    for (std::size_t i = 0; i < a.simplices.size(); ++i) CHECK(a.simplices[i] == c.simplices[i]);

    // restriction route matches by construction; single witness gives max
    std::vector<int> L{0, 1, 2}, W{3};
    auto k = ambient_cech_filtration(L, W, amb, 2);
    CHECK(value_of(k, {0, 1}) == std::max(amb(0, 3), amb(1, 3)));

    auto line = DissimilarityMatrix::from_entries(3, {0, 1, 2, 1, 0, 1, 2, 1, 0});
    std::vector<int> ends{0, 2}, mid{1};
    auto e = ambient_cech_filtration(ends, mid, line, 1);
    CHECK(value_of(e, {0, 1}) == 1.0);  // both landmarks within 1 of the midpoint

    CHECK_THROWS_AS(ambient_cech_filtration(std::vector<int>{}, W, amb, 1), ValidationError);
}

TEST_CASE("witness filtration on the landmark example") {
    double delta = 0.1;
    auto ex = gen_witness_counterexample(delta);

    auto wl = witness_filtration(ex.lam, 1);
    wl.validate();
    // every simplex of Wit(L, W) is present for all a >= 0 (born at -1 here)
    for (const auto& s : wl.simplices) CHECK(s.value <= 0.0);

    auto wlp = witness_filtration(ex.lam_prime, 3);
    wlp.validate();
    CHECK(value_of(wlp, {1}) == doctest::Approx(-delta));  // vertex [0] of L' is born at -delta
    CHECK(value_of(wlp, {2}) == doctest::Approx(-delta));
    CHECK(value_of(wlp, {0}) == doctest::Approx(delta));
    CHECK(value_of(wlp, {3}) == doctest::Approx(delta));
    CHECK(value_of(wlp, {0, 1}) == doctest::Approx(delta));
    CHECK(value_of(wlp, {2, 3}) == doctest::Approx(delta));
    CHECK(value_of(wlp, {1, 2}) == doctest::Approx(1 - delta));

    // the tau = L edge case: a single landmark is witnessed vacuously
    auto lone = witness_filtration(CrossDissimilarity::from_entries(1, 2, {4.0, 5.0}), 0);
    CHECK(lone.simplices.size() == 1);
    CHECK(lone.simplices[0].value == -std::numeric_limits<double>::infinity());
}

TEST_CASE("all builders produce valid complexes on generalized dissimilarities") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        Rng trial = rng.fork(t);
        auto gen = random_generalized_dissimilarity(trial, trial.uniform_int(2, 6));
        rips_filtration(gen, 2).validate();
        cech_intrinsic_filtration(gen, 2).validate();
        auto lam = random_cross_dissimilarity(trial, trial.uniform_int(2, 5), trial.uniform_int(1, 5));
        dowker_filtration(lam, 2).validate();
        witness_filtration(lam, 2).validate();
    }
}

TEST_CASE("cech <= rips <= 2 cech on metric inputs") {
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        Rng trial = rng.fork(t);
        auto m = random_euclidean_space(trial, trial.uniform_int(3, 7));
        auto rips = rips_filtration(m, 2);
        auto cech = cech_intrinsic_filtration(m, 2);
        std::map<std::vector<int>, double> cech_value;
        for (const auto& s : cech.simplices) cech_value[s.vertices] = s.value;
        for (const auto& s : rips.simplices) {
            double cv = cech_value.at(s.vertices);
            CHECK(cv <= s.value + 1e-12);
            CHECK(s.value <= 2 * cv + 1e-12);
        }
    }
}

TEST_CASE("validator rejects broken complexes") {
    FilteredComplex missing_face;
    missing_face.vertex_count = 2;
    missing_face.max_dim = 1;
    missing_face.simplices = {{{0}, 0.0}, {{0, 1}, 1.0}};
    CHECK_THROWS_AS(missing_face.validate(), ValidationError);

    FilteredComplex nonmonotone;
    nonmonotone.vertex_count = 2;
    nonmonotone.max_dim = 1;
    nonmonotone.simplices = {{{0}, 2.0}, {{1}, 0.0}, {{0, 1}, 1.0}};
    CHECK_THROWS_AS(nonmonotone.validate(), ValidationError);

    FilteredComplex duplicate;
    duplicate.vertex_count = 1;
    duplicate.max_dim = 0;
    duplicate.simplices = {{{0}, 0.0}, {{0}, 0.5}};
    CHECK_THROWS_AS(duplicate.validate(), ValidationError);

    FilteredComplex unsorted;
    unsorted.vertex_count = 2;
    unsorted.max_dim = 1;
    unsorted.simplices = {{{0}, 0.0}, {{1}, 0.0}, {{1, 0}, 1.0}};
    CHECK_THROWS_AS(unsorted.validate(), ValidationError);
}

TEST_CASE("witness filtration is monotone in scale by construction") {
    Rng rng(31);
    auto lam = random_cross_dissimilarity(rng, 5, 4);
    auto K = witness_filtration(lam, 3);
    K.validate();  // includes the monotonicity check along faces
    // slices grow with the scale
    auto small = K.slice(0.2, false).simplices.size();
    auto large = K.slice(0.8, false).simplices.size();
    CHECK(small <= large);
}
