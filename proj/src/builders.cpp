#include "geomplex/builders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace geomplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_max_dim(int max_dim) {
    if (max_dim < 0) throw ValidationError("max_dim must be >= 0");
}

}  // namespace

FilteredComplex rips_filtration(const DissimilarityMatrix& dx, int max_dim) {
    check_max_dim(max_dim);
    const int n = dx.n;
    FilteredComplex out;
    out.vertex_count = n;
    out.max_dim = max_dim;

    std::vector<int> current;
    auto expand = [&](auto&& self, double diameter) -> void {
        out.simplices.push_back({current, diameter});
        if (static_cast<int>(current.size()) == max_dim + 1) return;
        for (int u = current.back() + 1; u < n; ++u) {
            double d = std::max(diameter, dx(u, u));
            for (int w : current) d = std::max(d, dx(w, u));
            current.push_back(u);
            self(self, d);
            current.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        current.assign(1, v);
        expand(expand, dx(v, v));
    }
    out.sort_canonical();
    return out;
}

std::vector<Simplex> rips_complex_at(const DissimilarityMatrix& dx, double a, bool strict, int max_dim) {
    check_max_dim(max_dim);
    const int n = dx.n;
    auto admits = [&](double d) { return strict ? (d < a) : (d <= a); };
    std::vector<Simplex> out;

    std::vector<int> current;
    auto expand = [&](auto&& self, double diameter) -> void {
        out.push_back({current, diameter});
        if (static_cast<int>(current.size()) == max_dim + 1) return;
        for (int u = current.back() + 1; u < n; ++u) {
            double d = std::max(diameter, dx(u, u));
            for (int w : current) d = std::max(d, dx(w, u));
            if (!admits(d)) continue;
            current.push_back(u);
            self(self, d);
            current.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        if (!admits(dx(v, v))) continue;
        current.assign(1, v);
        expand(expand, dx(v, v));
    }
    std::sort(out.begin(), out.end(), simplex_less);
    return out;
}

namespace {

// Shared min-max enumerator for Cech and Dowker: a simplex's value is the
// minimum over candidate centres/witnesses of the running maximum of
// dist(centre, vertex) over the simplex.
FilteredComplex min_max_filtration(int vertex_count, int centre_count, int max_dim,
                                   const std::function<double(int, int)>& dist) {
    FilteredComplex out;
    out.vertex_count = vertex_count;
    out.max_dim = max_dim;

    // centre_max[depth][c] = max over the first (depth+1) simplex vertices
    std::vector<std::vector<double>> centre_max(max_dim + 2, std::vector<double>(centre_count));
    std::vector<int> current;

    auto value_at = [&](int depth) {
        return *std::min_element(centre_max[depth].begin(), centre_max[depth].end());
    };
    auto expand = [&](auto&& self, int depth) -> void {
        out.simplices.push_back({current, value_at(depth)});
        if (static_cast<int>(current.size()) == max_dim + 1) return;
        for (int u = current.back() + 1; u < vertex_count; ++u) {
            auto& next = centre_max[depth + 1];
            for (int c = 0; c < centre_count; ++c) next[c] = std::max(centre_max[depth][c], dist(c, u));
            current.push_back(u);
            self(self, depth + 1);
            current.pop_back();
        }
    };
    for (int v = 0; v < vertex_count; ++v) {
        for (int c = 0; c < centre_count; ++c) centre_max[0][c] = dist(c, v);
        current.assign(1, v);
        expand(expand, 0);
    }
    out.sort_canonical();
    return out;
}

}  // namespace

FilteredComplex cech_intrinsic_filtration(const DissimilarityMatrix& dx, int max_dim) {
    check_max_dim(max_dim);
    return min_max_filtration(dx.n, dx.n, max_dim, [&](int c, int v) { return dx(c, v); });
}

FilteredComplex dowker_filtration(const CrossDissimilarity& lam, int max_dim) {
    check_max_dim(max_dim);
    return min_max_filtration(lam.m, lam.n, max_dim, [&](int w, int l) { return lam(l, w); });
}

FilteredComplex ambient_cech_filtration(std::span<const int> L, std::span<const int> W,
                                        const DissimilarityMatrix& ambient, int max_dim) {
    return dowker_filtration(CrossDissimilarity::restriction(ambient, L, W), max_dim);
}

FilteredComplex witness_filtration(const CrossDissimilarity& lam, int max_dim) {
    check_max_dim(max_dim);
    const int m = lam.m, n = lam.n;

    // Per witness, landmarks sorted by increasing lambda(l, w); used to find
    // min over the complement of a small subset in O(|tau|) probes.
    std::vector<std::vector<int>> by_value(n);
    for (int w = 0; w < n; ++w) {
        auto& order = by_value[w];
        order.resize(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lam(a, w) < lam(b, w); });
    }

    std::map<std::vector<int>, double> wit_memo;
    auto wit = [&](const std::vector<int>& tau) {
        auto it = wit_memo.find(tau);
        if (it != wit_memo.end()) return it->second;
        double best = kInf;
        if (static_cast<int>(tau.size()) == m) {
            best = -kInf;  // tau = L: the witness condition is vacuous
        } else {
            for (int w = 0; w < n; ++w) {
                double worst = -kInf;
                for (int l : tau) worst = std::max(worst, lam(l, w));
                double outside = kInf;
                for (int l : by_value[w]) {
                    if (std::find(tau.begin(), tau.end(), l) == tau.end()) {
                        outside = lam(l, w);
                        break;
                    }
                }
                best = std::min(best, worst - outside);
            }
        }
        wit_memo.emplace(tau, best);
        return best;
    };

    FilteredComplex out;
    out.vertex_count = m;
    out.max_dim = max_dim;

    std::vector<int> current;
    auto expand = [&](auto&& self) -> void {
        // max of wit over all nonempty subsets of the current simplex
        double value = -kInf;
        const int k = static_cast<int>(current.size());
        std::vector<int> tau;
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            tau.clear();
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) tau.push_back(current[b]);
            value = std::max(value, wit(tau));
        }
        out.simplices.push_back({current, value});
        if (k == max_dim + 1) return;
        for (int u = current.back() + 1; u < m; ++u) {
            current.push_back(u);
            self(self);
            current.pop_back();
        }
    };
    for (int v = 0; v < m; ++v) {
        current.assign(1, v);
        expand(expand);
    }
    out.sort_canonical();
    return out;
}

}  // namespace geomplex
