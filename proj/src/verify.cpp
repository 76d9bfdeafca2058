#include "geomplex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "geomplex/bottleneck.hpp"
#include "geomplex/builders.hpp"
#include "geomplex/interleaving.hpp"
#include "geomplex/metric.hpp"
#include "geomplex/persistence.hpp"

namespace geomplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json matrix_json(const DissimilarityMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json cross_json(const CrossDissimilarity& lam) {
    nlohmann::json rows = nlohmann::json::array();
    for (int l = 0; l < lam.m; ++l) {
        nlohmann::json row = nlohmann::json::array();
        for (int w = 0; w < lam.n; ++w) row.push_back(lam(l, w));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json diagram_json(const PersistenceDiagram& dgm) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& pt : dgm.points) {
        arr.push_back({pt.dim, pt.birth, std::isinf(pt.death) ? nlohmann::json("inf") : nlohmann::json(pt.death)});
    }
    return arr;
}

double max_bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int max_dim) {
    double value = 0.0;
    for (int k = 0; k <= max_dim; ++k) value = std::max(value, bottleneck_distance(a, b, k).value);
    return value;
}

std::vector<int> betti_of(const std::vector<Simplex>& simplices, int vertex_count, int max_dim, int p) {
    FilteredComplex K;
    K.vertex_count = vertex_count;
    K.max_dim = max_dim;
    K.simplices = simplices;
    return betti_at(K, kInf, false, p);
}

VerificationReport inequality_report(std::string name, double lhs, double rhs) {
    VerificationReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.passed = lhs <= rhs + kAbsTol;
    return r;
}

}  // namespace

VerificationReport verify_rips_stability(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, int max_dim,
                                         int field_p) {
    PersistenceDiagram da = compute_persistence(rips_filtration(dx, max_dim + 1), field_p).restrict_max_dim(max_dim);
    PersistenceDiagram db = compute_persistence(rips_filtration(dy, max_dim + 1), field_p).restrict_max_dim(max_dim);
    double lhs = max_bottleneck(da, db, max_dim);
    double rhs = 2.0 * gh_exact(dx, dy);
    auto r = inequality_report("rips-stability", lhs, rhs);
    r.details = {{"n_x", dx.n}, {"n_y", dy.n}, {"max_dim", max_dim}};
    if (!r.passed) {
        r.details["d_x"] = matrix_json(dx);
        r.details["d_y"] = matrix_json(dy);
        r.details["dgm_x"] = diagram_json(da);
        r.details["dgm_y"] = diagram_json(db);
    }
    return r;
}

VerificationReport verify_cech_stability(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, int max_dim,
                                         int field_p) {
    PersistenceDiagram da =
        compute_persistence(cech_intrinsic_filtration(dx, max_dim + 1), field_p).restrict_max_dim(max_dim);
    PersistenceDiagram db =
        compute_persistence(cech_intrinsic_filtration(dy, max_dim + 1), field_p).restrict_max_dim(max_dim);
    double lhs = max_bottleneck(da, db, max_dim);
    double rhs = 2.0 * gh_exact(dx, dy);
    auto r = inequality_report("cech-stability", lhs, rhs);
    r.details = {{"n_x", dx.n}, {"n_y", dy.n}, {"max_dim", max_dim}};
    if (!r.passed) {
        r.details["d_x"] = matrix_json(dx);
        r.details["d_y"] = matrix_json(dy);
    }
    return r;
}

VerificationReport verify_ambient_cech_stability(std::span<const int> L, std::span<const int> Lp,
                                                 std::span<const int> W, const DissimilarityMatrix& ambient,
                                                 int max_dim, int field_p) {
    PersistenceDiagram da =
        compute_persistence(ambient_cech_filtration(L, W, ambient, max_dim + 1), field_p).restrict_max_dim(max_dim);
    PersistenceDiagram db =
        compute_persistence(ambient_cech_filtration(Lp, W, ambient, max_dim + 1), field_p).restrict_max_dim(max_dim);
    double lhs = max_bottleneck(da, db, max_dim);
    double rhs = hausdorff_distance(L, Lp, ambient);
    auto r = inequality_report("ambient-cech-stability", lhs, rhs);
    r.details = {{"L", std::vector<int>(L.begin(), L.end())},
                 {"Lp", std::vector<int>(Lp.begin(), Lp.end())},
                 {"W", std::vector<int>(W.begin(), W.end())}};
    if (!r.passed) r.details["ambient"] = matrix_json(ambient);
    return r;
}

VerificationReport verify_witness_stability(const CrossDissimilarity& lam_w, const CrossDissimilarity& lam_wp,
                                            const Correspondence& c, int max_dim, int field_p) {
    if (!c.is_correspondence()) throw ValidationError("witness stability needs a correspondence on witnesses");
    PersistenceDiagram da =
        compute_persistence(witness_filtration(lam_w, std::min(max_dim + 1, lam_w.m - 1 < 0 ? 0 : lam_w.m - 1)),
                            field_p)
            .restrict_max_dim(max_dim);
    PersistenceDiagram db =
        compute_persistence(witness_filtration(lam_wp, std::min(max_dim + 1, lam_wp.m - 1 < 0 ? 0 : lam_wp.m - 1)),
                            field_p)
            .restrict_max_dim(max_dim);
    double lhs = max_bottleneck(da, db, max_dim);
    double rhs = 2.0 * witness_distortion(c, lam_w, lam_wp);
    auto r = inequality_report("witness-stability", lhs, rhs);
    r.details = {{"landmarks", lam_w.m}, {"witnesses", lam_w.n}, {"witnesses_prime", lam_wp.n}};
    if (!r.passed) {
        r.details["lambda"] = cross_json(lam_w);
        r.details["lambda_prime"] = cross_json(lam_wp);
    }
    return r;
}

VerificationReport verify_dowker_duality(const CrossDissimilarity& lam, int max_dim, int field_p) {
    PersistenceDiagram da = compute_persistence(dowker_filtration(lam, max_dim + 1), field_p).restrict_max_dim(max_dim);
    PersistenceDiagram db =
        compute_persistence(dowker_filtration(dowker_transpose(lam), max_dim + 1), field_p).restrict_max_dim(max_dim);
    VerificationReport r;
    r.name = "dowker-duality";
    r.passed = da.same_multiset(db);
    r.lhs = r.passed ? 0.0 : 1.0;
    r.rhs = 0.0;
    r.details = {{"m", lam.m}, {"n", lam.n}, {"points", da.points.size()}};
    if (!r.passed) {
        r.details["lambda"] = cross_json(lam);
        r.details["dgm"] = diagram_json(da);
        r.details["dgm_transpose"] = diagram_json(db);
    }
    return r;
}

VerificationReport witness_counterexample_report(double delta, int field_p) {
    WitnessExampleData ex = gen_witness_counterexample(delta);
    FilteredComplex wl = witness_filtration(ex.lam, 1);        // |L| = 2
    FilteredComplex wlp = witness_filtration(ex.lam_prime, 3); // |L'| = 4

    auto simplex_set_at = [](const FilteredComplex& K, double a) {
        std::set<std::vector<int>> out;
        for (const auto& s : K.slice(a, false).simplices) out.insert(s.vertices);
        return out;
    };

    // Wit(L, W; a) = {[0], [1], [0,1]} for all a >= 0
    std::set<std::vector<int>> expected_l = {{0}, {1}, {0, 1}};
    bool l_ok = true;
    for (double a : {0.0, 0.3, 5.0}) l_ok = l_ok && simplex_set_at(wl, a) == expected_l;

    // Wit(L', W; a) on [delta, 1-delta): vertices plus the two outer edges.
    // The window endpoints are sampled with the usual 1e-9 pad: the entry
    // values carry one-ulp arithmetic noise around delta itself.
    std::set<std::vector<int>> expected_lp = {{0}, {1}, {2}, {3}, {0, 1}, {2, 3}};
    bool lp_ok = true;
    for (double a : {delta + kAbsTol, 0.5 * (delta + (1.0 - delta)), (1.0 - delta) - kAbsTol})
        lp_ok = lp_ok && simplex_set_at(wlp, a) == expected_lp;

    // two connected components throughout the window
    bool comps_ok = true;
    for (int step = 0; step <= 4; ++step) {
        double lo = delta + kAbsTol, hi = (1.0 - delta) - kAbsTol;
        double a = lo + (hi - lo) * step / 4;
        comps_ok = comps_ok && betti_at(wlp, a, false, field_p)[0] == 2;
    }

    PersistenceDiagram d0 = compute_persistence(wl, field_p).restrict_dim(0);
    PersistenceDiagram d0p = compute_persistence(wlp, field_p).restrict_dim(0);
    double db = bottleneck_distance(d0, d0p, 0).value;

    // d_H(L, L') inside the ambient line: L = {0,1} sits at positions 1,2 of L'
    std::vector<double> amb;
    for (const auto& p : ex.L_prime.points)
        for (const auto& q : ex.L_prime.points) amb.push_back(std::fabs(p[0] - q[0]));
    DissimilarityMatrix ambient = DissimilarityMatrix::from_entries(4, std::move(amb));
    std::vector<int> l_idx = {1, 2}, lp_idx = {0, 1, 2, 3};
    double dh = hausdorff_distance(l_idx, lp_idx, ambient);

    VerificationReport r;
    r.name = "witness-counterexample";
    r.lhs = db;
    r.rhs = dh;
    r.passed = l_ok && lp_ok && comps_ok;
    r.details = {{"delta", delta},
                 {"lists_match_L", l_ok},
                 {"lists_match_Lprime", lp_ok},
                 {"two_components_on_window", comps_ok},
                 {"bottleneck_H0", db},
                 {"hausdorff_L_Lprime", dh},
                 {"interleaving_lower_bound", 1.0 - 2.0 * delta}};
    return r;
}

VerificationReport verify_pathology_growth(const std::string& name, const std::vector<int>& sizes, double a,
                                           int field_p) {
    if (sizes.empty()) throw ValidationError("pathology check needs at least one size");
    VerificationReport r;
    r.name = "pathology-" + name;
    std::vector<int> rips_b1;
    std::vector<int> cech_b1;

    for (int n : sizes) {
        if (name == "parallel-segments") {
            DissimilarityMatrix m = pointcloud_to_matrix(gen_parallel_segments(n));
            rips_b1.push_back(betti_of(rips_complex_at(m, a, false, 2), m.n, 2, field_p)[1]);
            cech_b1.push_back(betti_at(cech_intrinsic_filtration(m, 2), a, false, field_p)[1]);
        } else if (name == "open-rips") {
            DissimilarityMatrix m = pointcloud_to_matrix(gen_open_rips(n));
            rips_b1.push_back(betti_of(rips_complex_at(m, a, true, 2), m.n, 2, field_p)[1]);
        } else if (name == "two-rectangles") {
            DissimilarityMatrix m = pointcloud_to_matrix(gen_two_rectangles(n));
            rips_b1.push_back(betti_of(rips_complex_at(m, a, false, 2), m.n, 2, field_p)[1]);
        } else {
            throw ValidationError("unknown pathology name: " + name);
        }
    }

    bool increasing = true;
    for (std::size_t i = 1; i < rips_b1.size(); ++i) increasing = increasing && rips_b1[i] > rips_b1[i - 1];
    bool cech_constant = true;
    for (std::size_t i = 1; i < cech_b1.size(); ++i) cech_constant = cech_constant && cech_b1[i] == cech_b1[0];

    r.passed = increasing && cech_constant;
    r.lhs = rips_b1.empty() ? 0 : rips_b1.back();
    r.rhs = rips_b1.empty() ? 0 : rips_b1.front();
    r.details = {{"sizes", sizes}, {"scale", a}, {"rips_beta1", rips_b1}};
    if (!cech_b1.empty()) r.details["cech_beta1"] = cech_b1;
    return r;
}

VerificationReport verify_path_metric_theorem(int n, int field_p) {
    if (n < 8) throw ValidationError("path-metric check needs n >= 8");
    const double circumference = 2.0 * std::numbers::pi;
    const double mesh = circumference / n;
    FilteredComplex K = rips_filtration(gen_circle(n, circumference), 2);
    PersistenceDiagram dgm = compute_persistence(K, field_p).restrict_dim(1);

    double worst = 0.0;
    int significant = 0;
    for (const auto& pt : dgm.points) {
        double pers = std::isinf(pt.death) ? kInf : pt.death - pt.birth;
        worst = std::max(worst, std::min(pt.birth, pers));
        if (pers > 0.5) ++significant;
    }
    bool bounds_ok = worst <= mesh + kAbsTol;
    bool one_class = significant == 1;
    int rank = rank_of_inclusion(K, mesh, 1.0, 1, field_p);
    int b1 = betti_at(K, 1.0, false, field_p)[1];
    bool surjective = rank == b1;

    VerificationReport r;
    r.name = "path-metric";
    r.lhs = worst;
    r.rhs = mesh;
    r.passed = bounds_ok && one_class && surjective;
    r.details = {{"n", n},
                 {"mesh", mesh},
                 {"h1_points", dgm.points.size()},
                 {"significant_classes", significant},
                 {"rank_mesh_to_1", rank},
                 {"betti1_at_1", b1},
                 {"dgm_h1", diagram_json(dgm)}};
    return r;
}

VerificationReport verify_hyperbolic_theorem(const TreeSpec& spec, double h, int field_p) {
    FilteredComplex K = rips_filtration(gen_subdivided_tree(spec, h), 3);
    PersistenceDiagram dgm = compute_persistence(K, field_p).restrict_dim(2);
    double worst = 0.0;
    for (const auto& pt : dgm.points) {
        double pers = std::isinf(pt.death) ? kInf : pt.death - pt.birth;
        worst = std::max(worst, std::min(pt.birth, pers));
    }
    auto r = inequality_report("hyperbolic", worst, h);
    r.details = {{"h", h}, {"points", K.vertex_count}, {"h2_points", dgm.points.size()}, {"dgm_h2", diagram_json(dgm)}};
    return r;
}

VerificationReport verify_hyperbolic_theorem(const std::string& tree_name, double h, int field_p) {
    auto r = verify_hyperbolic_theorem(TreeSpec::by_name(tree_name), h, field_p);
    r.name = "hyperbolic-" + tree_name;
    r.details["tree"] = tree_name;
    return r;
}

// --- batches -----------------------------------------------------------------

namespace {

std::vector<int> random_nonempty_subset(Rng& rng, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (rng.uniform() < 0.5) out.push_back(i);
    if (out.empty()) out.push_back(rng.uniform_int(0, n - 1));
    return out;
}

Correspondence nearest_neighbor_correspondence(const PointCloud& a, const PointCloud& b) {
    auto dist = [](const std::vector<double>& p, const std::vector<double>& q) {
        double s = 0;
        for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
        return std::sqrt(s);
    };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(a.points.size()); ++i) {
        int best = 0;
        for (int j = 1; j < static_cast<int>(b.points.size()); ++j)
            if (dist(a.points[i], b.points[j]) < dist(a.points[i], b.points[best])) best = j;
        pairs.emplace_back(i, best);
    }
    for (int j = 0; j < static_cast<int>(b.points.size()); ++j) {
        int best = 0;
        for (int i = 1; i < static_cast<int>(a.points.size()); ++i)
            if (dist(a.points[i], b.points[j]) < dist(a.points[best], b.points[j])) best = i;
        pairs.emplace_back(best, j);
    }
    return Correspondence::from_pairs(static_cast<int>(a.points.size()), static_cast<int>(b.points.size()),
                                      std::move(pairs));
}

double cloud_hausdorff(const PointCloud& a, const PointCloud& b) {
    PointCloud joint = a;
    for (const auto& p : b.points) joint.points.push_back(p);
    DissimilarityMatrix m = pointcloud_to_matrix(joint);
    std::vector<int> ia(a.points.size()), ib(b.points.size());
    for (std::size_t i = 0; i < ia.size(); ++i) ia[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < ib.size(); ++j) ib[j] = static_cast<int>(a.points.size() + j);
    return hausdorff_distance(ia, ib, m);
}

CrossDissimilarity cloud_cross(const PointCloud& landmarks, const PointCloud& witnesses) {
    auto dist = [](const std::vector<double>& p, const std::vector<double>& q) {
        double s = 0;
        for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
        return std::sqrt(s);
    };
    std::vector<double> lam;
    for (const auto& l : landmarks.points)
        for (const auto& w : witnesses.points) lam.push_back(dist(l, w));
    return CrossDissimilarity::from_entries(static_cast<int>(landmarks.points.size()),
                                            static_cast<int>(witnesses.points.size()), std::move(lam));
}

VerificationReport interleaving_trial(Rng rng, int max_points, int field_p) {
    const int p = field_p;
    int nx = rng.uniform_int(2, max_points), ny = rng.uniform_int(2, max_points),
        nz = rng.uniform_int(2, max_points);
    DissimilarityMatrix dx = random_euclidean_space(rng, nx);
    DissimilarityMatrix dy = random_euclidean_space(rng, ny);
    DissimilarityMatrix dz = random_euclidean_space(rng, nz);
    Correspondence c = Correspondence::full(nx, ny);
    Correspondence d = Correspondence::full(ny, nz);
    double e1 = distortion(c, dx, dy);
    double e2 = distortion(d, dy, dz);
    FilteredComplex S = rips_filtration(dx, 2), T = rips_filtration(dy, 2), U = rips_filtration(dz, 2);

    InterleavingVerdict verdict = verify_interleaving(c, S, T, e1, p, 1);
    bool identity_ok = verdict.applicable && verdict.verified;

    // independence of the subordinate-map choice (and of left-total subsets)
    const double e1e = e1 + kAbsTol;
    SliceHomologyCache cs(S, p), ct(T, p), cu(U, p);
    std::vector<double> thin_grid;
    for (const auto& s : S.simplices) thin_grid.push_back(s.value);
    for (const auto& s : T.simplices) thin_grid.push_back(s.value);
    std::sort(thin_grid.begin(), thin_grid.end());
    thin_grid.erase(std::unique(thin_grid.begin(), thin_grid.end()), thin_grid.end());

    SubordinateMap f_min = min_index_subordinate(c);
    HomologyMap base = induced_homology_map(f_min, cs, ct, e1e, 1, thin_grid);
    bool independent = true;
    auto images = c.images();
    for (int rep = 0; rep < 3; ++rep) {
        SubordinateMap f;
        f.map.resize(nx);
        for (int x = 0; x < nx; ++x)
            f.map[x] = images[x][rng.uniform_int(0, static_cast<int>(images[x].size()) - 1)];
        independent = independent && induced_homology_map(f, cs, ct, e1e, 1, thin_grid) == base;
    }
    // left-total random subset of C induces the same map
    {
        std::vector<std::pair<int, int>> sub;
        for (int x = 0; x < nx; ++x)
            sub.emplace_back(x, images[x][rng.uniform_int(0, static_cast<int>(images[x].size()) - 1)]);
        for (int extra = 0; extra < nx; ++extra)
            sub.emplace_back(rng.uniform_int(0, nx - 1), rng.uniform_int(0, ny - 1));
        Correspondence c_sub = Correspondence::from_pairs(nx, ny, std::move(sub));
        independent =
            independent && induced_homology_map(min_index_subordinate(c_sub), cs, ct, e1e, 1, thin_grid) == base;
    }

    // functoriality: H(D o C) = H(D) o H(C)
    const double e2e = e2 + kAbsTol;
    SubordinateMap g_min = min_index_subordinate(d);
    SubordinateMap gf;
    gf.map.resize(nx);
    for (int x = 0; x < nx; ++x) gf.map[x] = g_min.map[f_min.map[x]];
    bool functorial = true;
    std::vector<double> comp_grid = thin_grid;
    for (const auto& s : U.simplices) comp_grid.push_back(s.value);
    std::sort(comp_grid.begin(), comp_grid.end());
    comp_grid.erase(std::unique(comp_grid.begin(), comp_grid.end()), comp_grid.end());
    for (double a : comp_grid) {
        for (int k = 0; k <= 1 && functorial; ++k) {
            ZpMatrix A = induced_homology_map(f_min, cs, ct, e1e, 1, {a}).levels[0][k];
            ZpMatrix B = induced_homology_map(g_min, ct, cu, e2e, 1, {a + e1e}).levels[0][k];
            ZpMatrix M = induced_homology_map(gf, cs, cu, e1e + e2e, 1, {a}).levels[0][k];
            functorial = zp_multiply(B, A, p) == M;
        }
        if (!functorial) break;
    }

    VerificationReport r;
    r.name = "interleaving";
    r.lhs = identity_ok && independent && functorial ? 0.0 : 1.0;
    r.rhs = 0.0;
    r.passed = identity_ok && independent && functorial;
    r.details = {{"n_x", nx},
                 {"n_y", ny},
                 {"n_z", nz},
                 {"eps", e1},
                 {"identity", identity_ok},
                 {"independence", independent},
                 {"functoriality", functorial}};
    if (!r.passed) {
        r.details["d_x"] = matrix_json(dx);
        r.details["d_y"] = matrix_json(dy);
        r.details["d_z"] = matrix_json(dz);
        if (!verdict.reason.empty()) r.details["reason"] = verdict.reason;
    }
    return r;
}

}  // namespace

std::vector<std::string> verification_names() {
    return {"dowker",      "rips-stability", "cech-stability", "ambient-cech",    "witness-stability",
            "witness-counterexample", "pathology", "path-metric", "hyperbolic", "interleaving",
            "witness-densify"};
}

std::vector<VerificationReport> run_verification(const std::string& theorem, const BatchOptions& opts) {
    std::vector<VerificationReport> reports;
    Rng root(opts.seed);
    const int p = opts.field_p;

    auto tag = [&](VerificationReport r, int trial, std::uint64_t seed) {
        r.seed = seed;
        r.details["trial"] = trial;
        return r;
    };

    if (theorem == "dowker") {
        int m = opts.size > 0 ? opts.size : 6;
        int max_dim = opts.max_dim >= 0 ? opts.max_dim : 2;
        for (int t = 0; t < opts.trials; ++t) {
            Rng rng = root.fork(t);
            CrossDissimilarity lam = random_cross_dissimilarity(rng, m, m + 1);
            reports.push_back(tag(verify_dowker_duality(lam, max_dim, p), t, rng.seed()));
        }
    } else if (theorem == "rips-stability" || theorem == "cech-stability") {
        bool rips = theorem == "rips-stability";
        int max_pts = opts.size > 0 ? opts.size : 4;
        int max_dim = opts.max_dim >= 0 ? opts.max_dim : 1;
        for (int t = 0; t < opts.trials; ++t) {
            Rng rng = root.fork(t);
            DissimilarityMatrix dx = random_euclidean_space(rng, rng.uniform_int(1, max_pts));
            DissimilarityMatrix dy = random_euclidean_space(rng, rng.uniform_int(1, max_pts));
            reports.push_back(tag(rips ? verify_rips_stability(dx, dy, max_dim, p)
                                       : verify_cech_stability(dx, dy, max_dim, p),
                                  t, rng.seed()));
        }
        // tightness probes: Y a rescaled copy of X
        for (int t = 0; t < 3; ++t) {
            Rng rng = root.fork(opts.trials + t);
            DissimilarityMatrix dx = random_euclidean_space(rng, 3);
            DissimilarityMatrix dy = dx;
            for (auto& v : dy.d) v *= 1.5;
            auto r = rips ? verify_rips_stability(dx, dy, max_dim, p) : verify_cech_stability(dx, dy, max_dim, p);
            r.details["tightness_ratio"] = r.rhs > 0 ? r.lhs / r.rhs : 0.0;
            r.details["scaled_copy"] = true;
            reports.push_back(tag(std::move(r), opts.trials + t, rng.seed()));
        }
    } else if (theorem == "ambient-cech") {
        int n = opts.size > 0 ? opts.size : 10;
        int max_dim = opts.max_dim >= 0 ? opts.max_dim : 2;
        for (int t = 0; t < opts.trials; ++t) {
            Rng rng = root.fork(t);
            DissimilarityMatrix ambient = random_euclidean_space(rng, n);
            auto L = random_nonempty_subset(rng, n);
            auto Lp = random_nonempty_subset(rng, n);
            auto W = random_nonempty_subset(rng, n);
            reports.push_back(tag(verify_ambient_cech_stability(L, Lp, W, ambient, max_dim, p), t, rng.seed()));
        }
    } else if (theorem == "witness-stability") {
        int n_land = 5, n_wit = opts.size > 0 ? opts.size : 6;
        int max_dim = opts.max_dim >= 0 ? opts.max_dim : 2;
        for (int t = 0; t < opts.trials; ++t) {
            Rng rng = root.fork(t);
            PointCloud L = random_point_cloud(rng, n_land, 2);
            PointCloud W = random_point_cloud(rng, n_wit, 2);
            PointCloud Wp = W;
            for (auto& pt : Wp.points)
                for (auto& x : pt) x += rng.uniform(-0.1, 0.1);
            CrossDissimilarity lam = cloud_cross(L, W), lamp = cloud_cross(L, Wp);
            if (t % 2 == 0) {
                Correspondence c = Correspondence::identity(n_wit);
                reports.push_back(tag(verify_witness_stability(lam, lamp, c, max_dim, p), t, rng.seed()));
            } else {
                // metric variant: nearest-neighbour correspondence, bound 2 d_H(W, W')
                Correspondence c = nearest_neighbor_correspondence(W, Wp);
                auto r = verify_witness_stability(lam, lamp, c, max_dim, p);
                double dh = cloud_hausdorff(W, Wp);
                r.name = "witness-stability-metric";
                r.rhs = 2.0 * dh;
                r.passed = r.lhs <= r.rhs + kAbsTol;
                r.details["hausdorff_W_Wp"] = dh;
                reports.push_back(tag(std::move(r), t, rng.seed()));
            }
        }
    } else if (theorem == "witness-counterexample") {
        reports.push_back(witness_counterexample_report(opts.delta, p));
    } else if (theorem == "pathology") {
        reports.push_back(verify_pathology_growth("parallel-segments", {10, 20, 40}, 1.0, p));
        reports.push_back(verify_pathology_growth("open-rips", {3, 5, 7}, 1.0, p));
        reports.push_back(verify_pathology_growth("two-rectangles", {3, 4, 5}, 1.5, p));
    } else if (theorem == "path-metric") {
        reports.push_back(verify_path_metric_theorem(opts.n, p));
    } else if (theorem == "hyperbolic") {
        for (const std::string tree : {"star3", "binary2"})
            for (double h : {0.5, 0.25}) reports.push_back(verify_hyperbolic_theorem(tree, h, p));
        reports.push_back(verify_hyperbolic_theorem("path", 0.5, p));
    } else if (theorem == "interleaving") {
        int max_pts = opts.size > 0 ? opts.size : 8;
        for (int t = 0; t < opts.trials; ++t) {
            Rng rng = root.fork(t);
            reports.push_back(tag(interleaving_trial(rng, max_pts, p), t, rng.seed()));
        }
    } else if (theorem == "witness-densify") {
        // Experiment hook for the open question whether densifying W restores
        // stability under landmark perturbation. Reports only; asserts nothing.
        double delta = opts.delta;
        WitnessExampleData ex = gen_witness_counterexample(delta);
        for (int density : {2, 5, 10, 20, 50}) {
            PointCloud W;
            W.metric = MetricKind::euclidean;
            for (int i = 0; i < density; ++i)
                W.points.push_back({-delta + (1.0 + 2.0 * delta) * i / (density - 1 > 0 ? density - 1 : 1)});
            CrossDissimilarity lam = cloud_cross(ex.L, W), lamp = cloud_cross(ex.L_prime, W);
            PersistenceDiagram a = compute_persistence(witness_filtration(lam, 1), p);
            PersistenceDiagram b = compute_persistence(witness_filtration(lamp, 3), p).restrict_max_dim(1);
            VerificationReport r;
            r.name = "witness-densify";
            r.lhs = std::max(bottleneck_distance(a, b, 0).value, bottleneck_distance(a, b, 1).value);
            r.rhs = delta;
            r.passed = true;  // observation only
            r.details = {{"density", density}, {"bottleneck", r.lhs}, {"hausdorff_L_Lprime", delta}};
            reports.push_back(std::move(r));
        }
    } else {
        throw ValidationError("unknown theorem name: " + theorem);
    }
    return reports;
}

}  // namespace geomplex
