#include "geomplex/dissimilarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geomplex {

namespace {

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

DissimilarityMatrix DissimilarityMatrix::from_entries(int n, std::vector<double> entries) {
    if (n <= 0) throw ValidationError("dissimilarity matrix must have at least one point");
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("dissimilarity matrix data is not " + std::to_string(n) + "x" + std::to_string(n));
    for (double v : entries)
        if (!std::isfinite(v)) throw ValidationError("dissimilarity matrix has a non-finite entry");

    DissimilarityMatrix m;
    m.n = n;
    m.d = std::move(entries);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double a = m.d[static_cast<std::size_t>(i) * n + j];
            double b = m.d[static_cast<std::size_t>(j) * n + i];
            if (std::fabs(a - b) > kAbsTol)
                throw ValidationError("asymmetric entries at " + ij(i, j) + ": " + std::to_string(a) + " vs " +
                                      std::to_string(b));
            double avg = 0.5 * (a + b);
            m.d[static_cast<std::size_t>(i) * n + j] = avg;
            m.d[static_cast<std::size_t>(j) * n + i] = avg;
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, i) > m(i, j) + kAbsTol)
                throw ValidationError("generalized-metric failure: d" + ij(i, i) + " > d" + ij(i, j));

    m.triangle = true;
    for (int i = 0; i < n && m.triangle; ++i)
        for (int j = 0; j < n && m.triangle; ++j)
            for (int k = 0; k < n; ++k)
                if (m(i, k) > m(i, j) + m(j, k) + kAbsTol) {
                    m.triangle = false;
                    break;
                }
    return m;
}

DissimilarityMatrix DissimilarityMatrix::restrict_to(std::span<const int> idx) const {
    if (idx.empty()) throw ValidationError("cannot restrict a matrix to an empty index set");
    int k = static_cast<int>(idx.size());
    std::vector<double> sub(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (idx[a] < 0 || idx[a] >= n) throw ValidationError("restriction index out of range");
            sub[static_cast<std::size_t>(a) * k + b] = (*this)(idx[a], idx[b]);
        }
    DissimilarityMatrix m;
    m.n = k;
    m.d = std::move(sub);
    m.triangle = triangle;  // restriction cannot break the triangle inequality
    return m;
}

DissimilarityMatrix pointcloud_to_matrix(const PointCloud& pc) {
    if (pc.points.empty()) throw ValidationError("point cloud is empty");
    std::size_t dim = pc.points.front().size();
    if (dim == 0) throw ValidationError("point cloud has zero-dimensional points");
    for (const auto& p : pc.points)
        if (p.size() != dim) throw ValidationError("point cloud has points of mixed dimension");
    if (pc.metric == MetricKind::circle_geodesic) {
        if (dim != 1) throw ValidationError("circle-geodesic metric expects 1-d arc positions");
        if (!(pc.circumference > 0)) throw ValidationError("circle circumference must be positive");
    }

    int n = static_cast<int>(pc.points.size());
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = pc.points[i];
            const auto& b = pc.points[j];
            double v = 0.0;
            switch (pc.metric) {
                case MetricKind::euclidean: {
                    double s = 0.0;
                    for (std::size_t k = 0; k < dim; ++k) {
                        double t = a[k] - b[k];
                        s += t * t;
                    }
                    v = std::sqrt(s);
                    break;
                }
                case MetricKind::l1: {
                    for (std::size_t k = 0; k < dim; ++k) v += std::fabs(a[k] - b[k]);
                    break;
                }
                case MetricKind::linf: {
                    for (std::size_t k = 0; k < dim; ++k) v = std::max(v, std::fabs(a[k] - b[k]));
                    break;
                }
                case MetricKind::circle_geodesic: {
                    double c = pc.circumference;
                    double t = std::fmod(std::fabs(a[0] - b[0]), c);
                    v = std::min(t, c - t);
                    break;
                }
            }
            d[static_cast<std::size_t>(i) * n + j] = v;
            d[static_cast<std::size_t>(j) * n + i] = v;
        }
    DissimilarityMatrix m;
    m.n = n;
    m.d = std::move(d);
    m.triangle = true;
    return m;
}

CrossDissimilarity CrossDissimilarity::from_entries(int m, int n, std::vector<double> entries) {
    if (m <= 0 || n <= 0) throw ValidationError("cross-dissimilarity must have at least one row and column");
    if (entries.size() != static_cast<std::size_t>(m) * n)
        throw ValidationError("cross-dissimilarity data is not " + std::to_string(m) + "x" + std::to_string(n));
    for (double v : entries)
        if (!std::isfinite(v)) throw ValidationError("cross-dissimilarity has a non-finite entry");
    CrossDissimilarity c;
    c.m = m;
    c.n = n;
    c.lambda = std::move(entries);
    return c;
}

CrossDissimilarity CrossDissimilarity::from_square(const DissimilarityMatrix& dx) {
    return from_entries(dx.n, dx.n, dx.d);
}

CrossDissimilarity CrossDissimilarity::restriction(const DissimilarityMatrix& ambient, std::span<const int> L,
                                                   std::span<const int> W) {
    if (L.empty() || W.empty()) throw ValidationError("landmark and witness sets must be nonempty");
    std::vector<double> sub;
    sub.reserve(L.size() * W.size());
    for (int l : L)
        for (int w : W) {
            if (l < 0 || l >= ambient.n || w < 0 || w >= ambient.n)
                throw ValidationError("restriction index out of range");
            sub.push_back(ambient(l, w));
        }
    return from_entries(static_cast<int>(L.size()), static_cast<int>(W.size()), std::move(sub));
}

CrossDissimilarity dowker_transpose(const CrossDissimilarity& lam) {
    CrossDissimilarity t;
    t.m = lam.n;
    t.n = lam.m;
    t.lambda.resize(lam.lambda.size());
    for (int l = 0; l < lam.m; ++l)
        for (int w = 0; w < lam.n; ++w) t.lambda[static_cast<std::size_t>(w) * lam.m + l] = lam(l, w);
    return t;
}

Correspondence Correspondence::from_pairs(int m, int n, std::vector<std::pair<int, int>> pairs) {
    if (m <= 0 || n <= 0) throw ValidationError("correspondence endpoints must be nonempty");
    for (auto [i, j] : pairs)
        if (i < 0 || i >= m || j < 0 || j >= n) throw ValidationError("correspondence pair out of range");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    Correspondence c;
    c.left_size = m;
    c.right_size = n;
    c.pairs = std::move(pairs);
    return c;
}

Correspondence Correspondence::identity(int n) {
    std::vector<std::pair<int, int>> p;
    p.reserve(n);
    for (int i = 0; i < n; ++i) p.emplace_back(i, i);
    return from_pairs(n, n, std::move(p));
}

Correspondence Correspondence::full(int m, int n) {
    std::vector<std::pair<int, int>> p;
    p.reserve(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) p.emplace_back(i, j);
    return from_pairs(m, n, std::move(p));
}

bool Correspondence::left_total() const {
    std::vector<char> seen(left_size, 0);
    for (auto [i, j] : pairs) seen[i] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool Correspondence::right_total() const {
    std::vector<char> seen(right_size, 0);
    for (auto [i, j] : pairs) seen[j] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Correspondence Correspondence::transpose() const {
    std::vector<std::pair<int, int>> p;
    p.reserve(pairs.size());
    for (auto [i, j] : pairs) p.emplace_back(j, i);
    return from_pairs(right_size, left_size, std::move(p));
}

std::vector<std::vector<int>> Correspondence::images() const {
    std::vector<std::vector<int>> im(left_size);
    for (auto [i, j] : pairs) im[i].push_back(j);
    return im;  // already sorted: pairs are sorted lexicographically
}

}  // namespace geomplex
