#include "geomplex/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "geomplex/common.hpp"

namespace geomplex {

double hausdorff_distance(std::span<const int> left, std::span<const int> right,
                          const DissimilarityMatrix& ambient) {
    if (left.empty() || right.empty()) throw ValidationError("hausdorff_distance needs nonempty sets");
    for (int i : left)
        if (i < 0 || i >= ambient.n) throw ValidationError("hausdorff_distance index out of range");
    for (int j : right)
        if (j < 0 || j >= ambient.n) throw ValidationError("hausdorff_distance index out of range");

    auto directed = [&](std::span<const int> a, std::span<const int> b) {
        double sup = 0.0;
        for (int i : a) {
            double inf = std::numeric_limits<double>::infinity();
            for (int j : b) inf = std::min(inf, ambient(i, j));
            sup = std::max(sup, inf);
        }
        return sup;
    };
    return std::max(directed(left, right), directed(right, left));
}

double distortion(const Correspondence& c, const DissimilarityMatrix& dx, const DissimilarityMatrix& dy) {
    if (c.pairs.empty()) throw ValidationError("distortion of an empty relation");
    if (c.left_size != dx.n || c.right_size != dy.n)
        throw ValidationError("correspondence does not index the given spaces");
    double dis = 0.0;
    for (auto [i, j] : c.pairs)
        for (auto [ip, jp] : c.pairs) dis = std::max(dis, std::fabs(dx(i, ip) - dy(j, jp)));
    return dis;
}

double witness_distortion(const Correspondence& c, const CrossDissimilarity& lam,
                          const CrossDissimilarity& lam_prime) {
    if (c.pairs.empty()) throw ValidationError("distortion of an empty relation");
    if (lam.m != lam_prime.m) throw ValidationError("witness_distortion expects a common landmark set");
    if (c.left_size != lam.n || c.right_size != lam_prime.n)
        throw ValidationError("correspondence does not index the witness sets");
    double dis = 0.0;
    for (int l = 0; l < lam.m; ++l)
        for (auto [w, wp] : c.pairs) dis = std::max(dis, std::fabs(lam(l, w) - lam_prime(l, wp)));
    return dis;
}

double pair_distortion(const Correspondence& on_landmarks, const Correspondence& on_witnesses,
                       const CrossDissimilarity& lam, const CrossDissimilarity& lam_prime) {
    if (on_landmarks.pairs.empty() || on_witnesses.pairs.empty())
        throw ValidationError("distortion of an empty relation");
    if (on_landmarks.left_size != lam.m || on_landmarks.right_size != lam_prime.m ||
        on_witnesses.left_size != lam.n || on_witnesses.right_size != lam_prime.n)
        throw ValidationError("correspondences do not index the given cross-dissimilarities");
    double dis = 0.0;
    for (auto [l, lp] : on_landmarks.pairs)
        for (auto [w, wp] : on_witnesses.pairs) dis = std::max(dis, std::fabs(lam(l, w) - lam_prime(lp, wp)));
    return dis;
}

namespace {

// Distortion of graph(f) cup transpose(graph(g)) with early exit at `bound`.
double map_pair_distortion(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy,
                           const std::vector<int>& f, const std::vector<int>& g, double bound) {
    const int m = dx.n, n = dy.n;
    double dis = 0.0;
    for (int i = 0; i < m; ++i)
        for (int ip = i; ip < m; ++ip) {
            dis = std::max(dis, std::fabs(dx(i, ip) - dy(f[i], f[ip])));
            if (dis >= bound) return dis;
        }
    for (int j = 0; j < n; ++j)
        for (int jp = j; jp < n; ++jp) {
            dis = std::max(dis, std::fabs(dx(g[j], g[jp]) - dy(j, jp)));
            if (dis >= bound) return dis;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            dis = std::max(dis, std::fabs(dx(i, g[j]) - dy(f[i], j)));
            if (dis >= bound) return dis;
        }
    return dis;
}

bool advance(std::vector<int>& map, int base) {
    for (std::size_t k = 0; k < map.size(); ++k) {
        if (++map[k] < base) return true;
        map[k] = 0;
    }
    return false;
}

}  // namespace

double gh_exact(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, double enumeration_cap) {
    const int m = dx.n, n = dy.n;
    double count_f = std::pow(static_cast<double>(n), m);
    double count_g = std::pow(static_cast<double>(m), n);
    if (count_f * count_g > enumeration_cap)
        throw SizeCapError("too large for exact GH: " + std::to_string(m) + "x" + std::to_string(n) +
                           " exceeds the enumeration cap");

    const std::uint64_t total_f = static_cast<std::uint64_t>(count_f);
    const int threads = std::min<int>(max_threads(), static_cast<int>(total_f));
    std::vector<double> best_per_thread(threads, std::numeric_limits<double>::infinity());

    auto worker = [&](int t) {
        std::uint64_t lo = total_f * t / threads;
        std::uint64_t hi = total_f * (t + 1) / threads;
        std::vector<int> f(m, 0), g(n, 0);
        double best = std::numeric_limits<double>::infinity();
        for (std::uint64_t code = lo; code < hi; ++code) {
            std::uint64_t rem = code;
            for (int i = 0; i < m; ++i) {
                f[i] = static_cast<int>(rem % n);
                rem /= n;
            }
            // dis restricted to graph(f) alone is already a lower bound
            double dis_f = 0.0;
            for (int i = 0; i < m && dis_f < best; ++i)
                for (int ip = i; ip < m; ++ip) dis_f = std::max(dis_f, std::fabs(dx(i, ip) - dy(f[i], f[ip])));
            if (dis_f >= best) continue;
            std::fill(g.begin(), g.end(), 0);
            do {
                best = std::min(best, map_pair_distortion(dx, dy, f, g, best));
            } while (advance(g, m));
        }
        best_per_thread[t] = best;
    };

    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    double best = *std::min_element(best_per_thread.begin(), best_per_thread.end());
    return 0.5 * best;
}

double gh_upper_bound(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, const Correspondence& c) {
    if (!c.is_correspondence()) throw ValidationError("gh_upper_bound needs a correspondence (both projections onto)");
    return 0.5 * distortion(c, dx, dy);
}

}  // namespace geomplex
