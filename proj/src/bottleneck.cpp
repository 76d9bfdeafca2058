#include "geomplex/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace geomplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double coord_diff(double a, double b) {
    if (a == b) return 0.0;  // covers equal infinities
    return std::fabs(a - b);
}

enum class PointClass { finite, inf_death, inf_birth, inf_both };

PointClass classify(const DiagramPoint& p) {
    bool bi = std::isinf(p.birth), di = std::isinf(p.death);
    if (bi && di) return PointClass::inf_both;
    if (bi) return PointClass::inf_birth;
    if (di) return PointClass::inf_death;
    return PointClass::finite;
}

// Kuhn's augmenting-path maximum bipartite matching.
struct Bipartite {
    int n_left = 0, n_right = 0;
    std::vector<std::vector<int>> adj;  // per left node
    std::vector<int> match_l, match_r;

    explicit Bipartite(int nl, int nr) : n_left(nl), n_right(nr), adj(nl) {}

    bool try_augment(int u, std::vector<char>& visited) {
        for (int v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_r[v] < 0 || try_augment(match_r[v], visited)) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        return false;
    }

    int max_matching() {
        match_l.assign(n_left, -1);
        match_r.assign(n_right, -1);
        int size = 0;
        for (int u = 0; u < n_left; ++u) {
            std::vector<char> visited(n_right, 0);
            if (try_augment(u, visited)) ++size;
        }
        return size;
    }
};

// Feasibility of cost c for the finite parts, via a perfect matching in the
// augmented graph: left = D1 points + one diagonal slot per D2 point, right =
// D2 points + one diagonal slot per D1 point; diagonal-diagonal edges free.
struct FiniteSolver {
    const std::vector<DiagramPoint>& a;
    const std::vector<DiagramPoint>& b;

    bool feasible(double c, Bipartite* out = nullptr) const {
        int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
        Bipartite g(na + nb, nb + na);
        for (int i = 0; i < na; ++i) {
            for (int j = 0; j < nb; ++j)
                if (linf_displacement(a[i], b[j]) <= c) g.adj[i].push_back(j);
            if (diagonal_cost(a[i]) <= c) g.adj[i].push_back(nb + i);  // own diagonal slot
        }
        for (int j = 0; j < nb; ++j) {
            if (diagonal_cost(b[j]) <= c) g.adj[na + j].push_back(j);
            for (int i = 0; i < na; ++i) g.adj[na + j].push_back(nb + i);  // diagonal-diagonal
        }
        bool ok = g.max_matching() == na + nb;
        if (ok && out) *out = std::move(g);
        return ok;
    }
};

}  // namespace

double linf_displacement(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(coord_diff(a.birth, b.birth), coord_diff(a.death, b.death));
}

double diagonal_cost(const DiagramPoint& p) {
    if (std::isinf(p.birth) || std::isinf(p.death)) return kInf;
    return 0.5 * (p.death - p.birth);
}

double certificate_cost(const MatchingCertificate& cert, const PersistenceDiagram& d1,
                        const PersistenceDiagram& d2, int dim) {
    (void)dim;
    double cost = 0.0;
    for (const auto& e : cert.pairs) {
        if (e.left >= 0 && e.right >= 0)
            cost = std::max(cost, linf_displacement(d1.points[e.left], d2.points[e.right]));
        else if (e.left >= 0)
            cost = std::max(cost, diagonal_cost(d1.points[e.left]));
        else if (e.right >= 0)
            cost = std::max(cost, diagonal_cost(d2.points[e.right]));
    }
    return cost;
}

BottleneckResult bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int dim) {
    // indices into the original diagrams, bucketed by class
    std::vector<int> fin1, fin2;
    std::vector<int> ess1[3], ess2[3];  // inf_death, inf_birth, inf_both
    auto bucket = [&](const PersistenceDiagram& d, std::vector<int>& fin, std::vector<int> (&ess)[3]) {
        for (std::size_t i = 0; i < d.points.size(); ++i) {
            if (d.points[i].dim != dim) continue;
            switch (classify(d.points[i])) {
                case PointClass::finite: fin.push_back(static_cast<int>(i)); break;
                case PointClass::inf_death: ess[0].push_back(static_cast<int>(i)); break;
                case PointClass::inf_birth: ess[1].push_back(static_cast<int>(i)); break;
                case PointClass::inf_both: ess[2].push_back(static_cast<int>(i)); break;
            }
        }
    };
    bucket(d1, fin1, ess1);
    bucket(d2, fin2, ess2);

    BottleneckResult res;

    // essential classes: matched among themselves by sorted finite coordinate
    for (int cls = 0; cls < 3; ++cls) {
        if (ess1[cls].size() != ess2[cls].size()) {
            res.value = kInf;
            res.certificate.cost = kInf;
            return res;
        }
        auto key = [&](const PersistenceDiagram& d, int idx) {
            const auto& p = d.points[idx];
            return cls == 0 ? p.birth : (cls == 1 ? p.death : 0.0);
        };
        auto s1 = ess1[cls], s2 = ess2[cls];
        std::sort(s1.begin(), s1.end(), [&](int x, int y) { return key(d1, x) < key(d1, y); });
        std::sort(s2.begin(), s2.end(), [&](int x, int y) { return key(d2, x) < key(d2, y); });
        for (std::size_t k = 0; k < s1.size(); ++k) {
            res.value = std::max(res.value, linf_displacement(d1.points[s1[k]], d2.points[s2[k]]));
            res.certificate.pairs.push_back({s1[k], s2[k]});
        }
    }

    // finite part: binary search over the candidate costs
    std::vector<DiagramPoint> a, b;
    for (int i : fin1) a.push_back(d1.points[i]);
    for (int j : fin2) b.push_back(d2.points[j]);
    FiniteSolver solver{a, b};

    std::vector<double> candidates{0.0};
    for (const auto& p : a) candidates.push_back(diagonal_cost(p));
    for (const auto& q : b) candidates.push_back(diagonal_cost(q));
    for (const auto& p : a)
        for (const auto& q : b) candidates.push_back(linf_displacement(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (solver.feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    double finite_value = candidates[lo];

    Bipartite match(0, 0);
    solver.feasible(finite_value, &match);
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    for (int i = 0; i < na; ++i) {
        int v = match.match_l[i];
        if (v < nb)
            res.certificate.pairs.push_back({fin1[i], fin2[v]});
        else
            res.certificate.pairs.push_back({fin1[i], -1});
    }
    for (int j = 0; j < nb; ++j)
        if (match.match_r[j] >= na) res.certificate.pairs.push_back({-1, fin2[j]});

    res.value = std::max(res.value, finite_value);
    res.certificate.cost = certificate_cost(res.certificate, d1, d2, dim);
    return res;
}

double bottleneck_bruteforce(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int dim,
                             int max_points) {
    std::vector<DiagramPoint> a, b;
    for (const auto& p : d1.points)
        if (p.dim == dim) a.push_back(p);
    for (const auto& p : d2.points)
        if (p.dim == dim) b.push_back(p);
    if (static_cast<int>(a.size() + b.size()) > max_points)
        throw SizeCapError("bottleneck_bruteforce instance exceeds its point cap");

    std::vector<char> used(b.size(), 0);
    double best = kInf;
    auto recurse = [&](auto&& self, std::size_t i, double cost) -> void {
        if (cost >= best) return;
        if (i == a.size()) {
            double total = cost;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used[j]) total = std::max(total, diagonal_cost(b[j]));
            best = std::min(best, total);
            return;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            self(self, i + 1, std::max(cost, linf_displacement(a[i], b[j])));
            used[j] = 0;
        }
        self(self, i + 1, std::max(cost, diagonal_cost(a[i])));
    };
    recurse(recurse, 0, 0.0);
    return best;
}

}  // namespace geomplex
