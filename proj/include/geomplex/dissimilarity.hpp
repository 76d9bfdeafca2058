#pragma once

#include <span>
#include <utility>
#include <vector>

#include "geomplex/common.hpp"

namespace geomplex {

// Square symmetric matrix of pairwise dissimilarities on a finite set.
// Only the generalized-metric condition d(i,i) <= d(i,j) is required;
// whether the triangle inequality also holds is recorded in a flag.
struct DissimilarityMatrix {
    int n = 0;
    std::vector<double> d;  // row-major n*n
    bool triangle = true;   // triangle inequality holds within kAbsTol

    double operator()(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }

    // Validates squareness and symmetry (entries differing by <= kAbsTol are
    // averaged, larger asymmetry is an error), checks d(i,i) <= d(i,j), and
    // computes the triangle flag.
    static DissimilarityMatrix from_entries(int n, std::vector<double> entries);

    DissimilarityMatrix restrict_to(std::span<const int> idx) const;
};

enum class MetricKind { euclidean, l1, linf, circle_geodesic };

// Finite list of coordinate vectors with a choice of metric. For
// circle_geodesic the coordinates must be 1-dimensional arc positions on a
// circle of the given circumference.
struct PointCloud {
    std::vector<std::vector<double>> points;
    MetricKind metric = MetricKind::euclidean;
    double circumference = 1.0;
};

DissimilarityMatrix pointcloud_to_matrix(const PointCloud& pc);

// Rectangular matrix housing a function lambda : L x W -> R between a
// landmark set of size m and a witness set of size n.
struct CrossDissimilarity {
    int m = 0;  // landmarks (rows)
    int n = 0;  // witnesses (columns)
    std::vector<double> lambda;  // row-major m*n

    double operator()(int l, int w) const { return lambda[static_cast<std::size_t>(l) * n + w]; }

    static CrossDissimilarity from_entries(int m, int n, std::vector<double> entries);
    static CrossDissimilarity from_square(const DissimilarityMatrix& dx);
    static CrossDissimilarity restriction(const DissimilarityMatrix& ambient, std::span<const int> L,
                                          std::span<const int> W);
};

CrossDissimilarity dowker_transpose(const CrossDissimilarity& lam);

// Set of index pairs between vertex sets of sizes m and n. A multivalued map
// projects onto the left side; a correspondence projects onto both.
struct Correspondence {
    int left_size = 0;
    int right_size = 0;
    std::vector<std::pair<int, int>> pairs;  // sorted, unique

    static Correspondence from_pairs(int m, int n, std::vector<std::pair<int, int>> pairs);
    static Correspondence identity(int n);
    static Correspondence full(int m, int n);

    bool left_total() const;
    bool right_total() const;
    bool is_multivalued_map() const { return left_total(); }
    bool is_correspondence() const { return left_total() && right_total(); }

    Correspondence transpose() const;

    // For each left index, the sorted list of its images.
    std::vector<std::vector<int>> images() const;
};

}  // namespace geomplex
