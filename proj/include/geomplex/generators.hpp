#pragma once

#include <string>
#include <tuple>

#include "geomplex/dissimilarity.hpp"
#include "geomplex/rng.hpp"

namespace geomplex {

// Two unit-length parallel segments at heights 0 and 1, each sampled at
// n+1 equally spaced points; euclidean metric.
PointCloud gen_parallel_segments(int n);

// Two non-parallel rectangles in R^3 under the l1 metric: a flat rectangle
// {(t,0,z)} and a tilted one {(t, 1+t/2, z)}, t in [0,2], z in [0,1], each
// sampled on an (n+1) x (n+1) grid.
PointCloud gen_two_rectangles(int n);

// The planar set {(2^-2k-4, 2^-k), (1 - 2^-2k-4, 2^-k) : 1 <= k <= N} whose
// open Rips complex at scale 1 joins the two clusters by exactly N edges.
PointCloud gen_open_rips(int N);

// Landmark perturbation example on the line: L = {0,1},
// L' = {-delta, 0, 1, 1+delta}, W = {0,1}, with 0 < delta < 1/2.
struct WitnessExampleData {
    PointCloud L, L_prime, W;
    CrossDissimilarity lam;        // |l - w| on L x W
    CrossDissimilarity lam_prime;  // |l - w| on L' x W
};
WitnessExampleData gen_witness_counterexample(double delta);

// n equally spaced points on a geodesic circle of the given circumference.
DissimilarityMatrix gen_circle(int n, double circumference);

// Finite metric trees, subdivided with step h and endowed with the path
// metric. Edges are (u, v, length) over vertex labels 0..k.
struct TreeSpec {
    std::vector<std::tuple<int, int, double>> edges;

    static TreeSpec star3(double edge_length = 1.0);
    static TreeSpec path(double length = 1.0);
    static TreeSpec binary2(double edge_length = 1.0);
    static TreeSpec by_name(const std::string& name);
};
DissimilarityMatrix gen_subdivided_tree(const TreeSpec& spec, double h);

// --- seeded random instances (verification batches, property tests) --------

PointCloud random_point_cloud(Rng& rng, int n_points, int dim, double scale = 1.0);
DissimilarityMatrix random_euclidean_space(Rng& rng, int n_points, int dim = 2, double scale = 1.0);
CrossDissimilarity random_cross_dissimilarity(Rng& rng, int m, int n, double scale = 1.0);
// Random generalized dissimilarity: symmetric with d(i,i) <= d(i,j), no
// triangle inequality guarantee.
DissimilarityMatrix random_generalized_dissimilarity(Rng& rng, int n_points, double scale = 1.0);
Correspondence random_correspondence(Rng& rng, int m, int n);

}  // namespace geomplex
