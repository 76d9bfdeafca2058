#include "geomplex/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace geomplex {

PointCloud gen_parallel_segments(int n) {
    if (n < 1) throw ValidationError("parallel_segments needs n >= 1");
    PointCloud pc;
    pc.metric = MetricKind::euclidean;
    for (int i = 0; i <= n; ++i) pc.points.push_back({static_cast<double>(i) / n, 0.0});
    for (int i = 0; i <= n; ++i) pc.points.push_back({static_cast<double>(i) / n, 1.0});
    return pc;
}

PointCloud gen_two_rectangles(int n) {
    if (n < 1) throw ValidationError("two_rectangles needs n >= 1");
    PointCloud pc;
    pc.metric = MetricKind::l1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double t = 2.0 * i / n, z = static_cast<double>(j) / n;
            pc.points.push_back({t, 0.0, z});
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double t = 2.0 * i / n, z = static_cast<double>(j) / n;
            pc.points.push_back({t, 1.0 + 0.5 * t, z});
        }
    return pc;
}

PointCloud gen_open_rips(int N) {
    if (N < 1) throw ValidationError("open_rips needs N >= 1");
    PointCloud pc;
    pc.metric = MetricKind::euclidean;
    for (int k = 1; k <= N; ++k) {
        double x = std::ldexp(1.0, -2 * k - 4);  // 2^(-2k-4)
        double y = std::ldexp(1.0, -k);
        pc.points.push_back({x, y});
    }
    for (int k = 1; k <= N; ++k) {
        double x = 1.0 - std::ldexp(1.0, -2 * k - 4);
        double y = std::ldexp(1.0, -k);
        pc.points.push_back({x, y});
    }
    return pc;
}

WitnessExampleData gen_witness_counterexample(double delta) {
    if (!(delta > 0.0 && delta < 0.5)) throw ValidationError("witness example needs 0 < delta < 1/2");
    WitnessExampleData ex;
    auto line_cloud = [](std::vector<double> xs) {
        PointCloud pc;
        pc.metric = MetricKind::euclidean;
        for (double x : xs) pc.points.push_back({x});
        return pc;
    };
    ex.L = line_cloud({0.0, 1.0});
    ex.L_prime = line_cloud({-delta, 0.0, 1.0, 1.0 + delta});
    ex.W = line_cloud({0.0, 1.0});

    auto cross = [](const PointCloud& L, const PointCloud& W) {
        std::vector<double> lam;
        for (const auto& l : L.points)
            for (const auto& w : W.points) lam.push_back(std::fabs(l[0] - w[0]));
        return CrossDissimilarity::from_entries(static_cast<int>(L.points.size()),
                                                static_cast<int>(W.points.size()), std::move(lam));
    };
    ex.lam = cross(ex.L, ex.W);
    ex.lam_prime = cross(ex.L_prime, ex.W);
    return ex;
}

DissimilarityMatrix gen_circle(int n, double circumference) {
    if (n < 1) throw ValidationError("circle needs n >= 1");
    if (!(circumference > 0)) throw ValidationError("circle circumference must be positive");
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    double step = circumference / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = std::abs(i - j);
            k = std::min(k, n - k);
            d[static_cast<std::size_t>(i) * n + j] = step * k;
        }
    DissimilarityMatrix m;
    m.n = n;
    m.d = std::move(d);
    m.triangle = true;
    return m;
}

TreeSpec TreeSpec::star3(double edge_length) {
    return TreeSpec{{{0, 1, edge_length}, {0, 2, edge_length}, {0, 3, edge_length}}};
}

TreeSpec TreeSpec::path(double length) { return TreeSpec{{{0, 1, length}}}; }

TreeSpec TreeSpec::binary2(double edge_length) {
    return TreeSpec{{{0, 1, edge_length},
                     {0, 2, edge_length},
                     {1, 3, edge_length},
                     {1, 4, edge_length},
                     {2, 5, edge_length},
                     {2, 6, edge_length}}};
}

TreeSpec TreeSpec::by_name(const std::string& name) {
    if (name == "star3") return star3();
    if (name == "path") return path();
    if (name == "binary2") return binary2();
    throw ValidationError("unknown tree preset: " + name);
}

DissimilarityMatrix gen_subdivided_tree(const TreeSpec& spec, double h) {
    if (spec.edges.empty()) throw ValidationError("tree spec has no edges");
    if (!(h > 0)) throw ValidationError("subdivision step must be positive");

    int n_named = 0;
    for (auto [u, v, len] : spec.edges) {
        if (u < 0 || v < 0 || u == v) throw ValidationError("bad tree edge");
        if (!(len > 0)) throw ValidationError("tree edge length must be positive");
        n_named = std::max(n_named, std::max(u, v) + 1);
    }

    // weighted graph on named vertices plus subdivision nodes
    std::vector<std::vector<std::pair<int, double>>> adj(n_named);
    auto add_node = [&]() {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    };
    auto add_edge = [&](int a, int b, double w) {
        adj[a].emplace_back(b, w);
        adj[b].emplace_back(a, w);
    };
    for (auto [u, v, len] : spec.edges) {
        int segments = std::max(1, static_cast<int>(std::ceil(len / h - kAbsTol)));
        double seg = len / segments;
        int prev = u;
        for (int s = 1; s < segments; ++s) {
            int node = add_node();
            add_edge(prev, node, seg);
            prev = node;
        }
        add_edge(prev, v, seg);
    }

    const int n = static_cast<int>(adj.size());
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int src = 0; src < n; ++src) {
        std::vector<double> dist(n, std::numeric_limits<double>::infinity());
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[src] = 0.0;
        pq.emplace(0.0, src);
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > dist[u]) continue;
            for (auto [v, w] : adj[u])
                if (du + w < dist[v]) {
                    dist[v] = du + w;
                    pq.emplace(dist[v], v);
                }
        }
        for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(src) * n + j] = dist[j];
    }
    // symmetrize exactly: Dijkstra from each side may differ in the last ulp
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = d[static_cast<std::size_t>(i) * n + j];
            d[static_cast<std::size_t>(j) * n + i] = v;
        }
    DissimilarityMatrix m;
    m.n = n;
    m.d = std::move(d);
    m.triangle = true;
    return m;
}

PointCloud random_point_cloud(Rng& rng, int n_points, int dim, double scale) {
    PointCloud pc;
    pc.metric = MetricKind::euclidean;
    for (int i = 0; i < n_points; ++i) {
        std::vector<double> p(dim);
        for (int k = 0; k < dim; ++k) p[k] = rng.uniform(0.0, scale);
        pc.points.push_back(std::move(p));
    }
    return pc;
}

DissimilarityMatrix random_euclidean_space(Rng& rng, int n_points, int dim, double scale) {
    PointCloud pc = random_point_cloud(rng, n_points, dim, scale);
    return pointcloud_to_matrix(pc);
}

CrossDissimilarity random_cross_dissimilarity(Rng& rng, int m, int n, double scale) {
    std::vector<double> lam(static_cast<std::size_t>(m) * n);
    for (auto& v : lam) v = rng.uniform(0.0, scale);
    return CrossDissimilarity::from_entries(m, n, std::move(lam));
}

DissimilarityMatrix random_generalized_dissimilarity(Rng& rng, int n_points, double scale) {
    std::vector<double> d(static_cast<std::size_t>(n_points) * n_points, 0.0);
    for (int i = 0; i < n_points; ++i)
        for (int j = i + 1; j < n_points; ++j) {
            double v = rng.uniform(0.5 * scale, scale);  // off-diagonal above any self-dissimilarity
            d[static_cast<std::size_t>(i) * n_points + j] = v;
            d[static_cast<std::size_t>(j) * n_points + i] = v;
        }
    for (int i = 0; i < n_points; ++i)
        d[static_cast<std::size_t>(i) * n_points + i] = rng.uniform(0.0, 0.5 * scale);
    return DissimilarityMatrix::from_entries(n_points, std::move(d));
}

Correspondence random_correspondence(Rng& rng, int m, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i) pairs.emplace_back(i, rng.uniform_int(0, n - 1));
    for (int j = 0; j < n; ++j) pairs.emplace_back(rng.uniform_int(0, m - 1), j);
    // sprinkle extra pairs so the relation is not a bare union of graphs
    int extras = rng.uniform_int(0, m * n / 2);
    for (int e = 0; e < extras; ++e) pairs.emplace_back(rng.uniform_int(0, m - 1), rng.uniform_int(0, n - 1));
    return Correspondence::from_pairs(m, n, std::move(pairs));
}

}  // namespace geomplex
