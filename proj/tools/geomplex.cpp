// geomplex: filtered geometric complexes, persistent homology, diagram
// distances, and theorem verification on finite dissimilarity data.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomplex/bottleneck.hpp"
#include "geomplex/builders.hpp"
#include "geomplex/generators.hpp"
#include "geomplex/interleaving.hpp"
#include "geomplex/io.hpp"
#include "geomplex/metric.hpp"
#include "geomplex/persistence.hpp"
#include "geomplex/verify.hpp"

using namespace geomplex;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

MetricKind parse_metric(const std::string& name) {
    if (name == "euclidean") return MetricKind::euclidean;
    if (name == "l1") return MetricKind::l1;
    if (name == "linf") return MetricKind::linf;
    if (name == "circle") return MetricKind::circle_geodesic;
    throw ValidationError("unknown metric: " + name);
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<int> all_indices(int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    return out;
}

// Inputs for ph/betti: a square matrix file, a Dowker matrix file, or a CSV
// point cloud (first content token decides).
struct LoadedInput {
    std::optional<DissimilarityMatrix> matrix;
    std::optional<CrossDissimilarity> cross;
};

LoadedInput load_input(const std::string& path, const std::string& metric, double circumference) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::string line;
    std::string first_token;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tok;
        if (ss >> tok && tok[0] != '#') {
            first_token = tok;
            break;
        }
    }
    in.clear();
    in.seekg(0);
    LoadedInput out;
    if (first_token == "dist") {
        out.matrix = load_dissimilarity(in);
    } else if (first_token == "dowker") {
        out.cross = load_cross_dissimilarity(in);
    } else {
        PointCloud pc;
        pc.points = load_point_cloud_csv(in);
        pc.metric = parse_metric(metric);
        pc.circumference = circumference;
        out.matrix = pointcloud_to_matrix(pc);
    }
    return out;
}

struct ComplexRequest {
    std::string kind = "rips";
    int max_dim = 2;
    std::string landmarks;  // comma list, empty = all
    std::string witnesses;
    bool vertex_birth_minus_inf = false;
};

FilteredComplex build_complex(const LoadedInput& input, const ComplexRequest& req) {
    FilteredComplex K;
    if (req.kind == "rips" || req.kind == "rips-open" || req.kind == "cech") {
        if (!input.matrix) throw ValidationError(req.kind + " needs a dissimilarity matrix or point cloud input");
        K = req.kind == "cech" ? cech_intrinsic_filtration(*input.matrix, req.max_dim)
                               : rips_filtration(*input.matrix, req.max_dim);
    } else if (req.kind == "ambient-cech") {
        if (!input.matrix) throw ValidationError("ambient-cech needs a dissimilarity matrix input");
        auto L = req.landmarks.empty() ? all_indices(input.matrix->n) : parse_index_list(req.landmarks);
        auto W = req.witnesses.empty() ? all_indices(input.matrix->n) : parse_index_list(req.witnesses);
        K = ambient_cech_filtration(L, W, *input.matrix, req.max_dim);
    } else if (req.kind == "dowker" || req.kind == "witness") {
        CrossDissimilarity lam;
        if (input.cross) {
            lam = *input.cross;
            if (!req.landmarks.empty() || !req.witnesses.empty())
                throw ValidationError("--landmarks/--witnesses apply to matrix inputs only");
        } else {
            auto L = req.landmarks.empty() ? all_indices(input.matrix->n) : parse_index_list(req.landmarks);
            auto W = req.witnesses.empty() ? all_indices(input.matrix->n) : parse_index_list(req.witnesses);
            lam = CrossDissimilarity::restriction(*input.matrix, L, W);
        }
        K = req.kind == "dowker" ? dowker_filtration(lam, req.max_dim) : witness_filtration(lam, req.max_dim);
    } else {
        throw ValidationError("unknown complex kind: " + req.kind);
    }
    if (req.vertex_birth_minus_inf) {
        for (auto& s : K.simplices)
            if (s.dim() == 0) s.value = -std::numeric_limits<double>::infinity();
        K.sort_canonical();
    }
    return K;
}

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_text_file(out_path, content);
}

// --- gen ---------------------------------------------------------------------

int run_gen(const std::string& name, int n, int big_n, double circumference, double delta, double h,
            const std::string& preset, const std::string& out, const std::string& out_prefix) {
    if (name == "circle") {
        std::ostringstream ss;
        save_dissimilarity(ss, gen_circle(n, circumference));
        write_or_print(out, ss.str());
    } else if (name == "tree") {
        std::ostringstream ss;
        save_dissimilarity(ss, gen_subdivided_tree(TreeSpec::by_name(preset), h));
        write_or_print(out, ss.str());
    } else if (name == "parallel-segments" || name == "two-rectangles" || name == "open-rips") {
        PointCloud pc = name == "parallel-segments" ? gen_parallel_segments(n)
                        : name == "two-rectangles"  ? gen_two_rectangles(n)
                                                    : gen_open_rips(big_n);
        std::ostringstream ss;
        save_point_cloud_csv(ss, pc);
        write_or_print(out, ss.str());
    } else if (name == "witness-example") {
        auto ex = gen_witness_counterexample(delta);
        auto dump = [&](const PointCloud& pc, const std::string& suffix) {
            std::ostringstream ss;
            save_point_cloud_csv(ss, pc);
            write_text_file(out_prefix + suffix, ss.str());
        };
        dump(ex.L, "L.csv");
        dump(ex.L_prime, "Lprime.csv");
        dump(ex.W, "W.csv");
    } else {
        throw ValidationError("unknown generator: " + name);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"filtered geometric complexes, persistence, and theorem checks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate example point clouds and matrices");
    std::string gen_name, gen_out, gen_prefix = "witness_", gen_preset = "star3";
    int gen_n = 10, gen_big_n = 3;
    double gen_circ = 1.0, gen_delta = 0.1, gen_h = 0.25;
    gen->add_option("name", gen_name,
                    "circle | parallel-segments | two-rectangles | open-rips | witness-example | tree")
        ->required();
    gen->add_option("--n", gen_n, "sample count / subdivision parameter");
    gen->add_option("--N", gen_big_n, "pair count for open-rips");
    gen->add_option("--circumference", gen_circ, "circle circumference");
    gen->add_option("--delta", gen_delta, "witness-example perturbation");
    gen->add_option("--step", gen_h, "tree subdivision step");
    gen->add_option("--preset", gen_preset, "tree preset: star3 | path | binary2");
    gen->add_option("-o,--output", gen_out, "output file ('-' for stdout)");
    gen->add_option("--out-prefix", gen_prefix, "file prefix for witness-example");

    // ph
    auto* ph = app.add_subcommand("ph", "compute a persistence diagram");
    std::string ph_input, ph_out, ph_metric = "euclidean";
    ComplexRequest ph_req;
    int ph_field = 2;
    double ph_circ = 1.0;
    bool ph_json = false;
    ph->add_option("-i,--input", ph_input, "matrix, dowker, or CSV point-cloud file")->required();
    ph->add_option("-k,--kind", ph_req.kind, "rips | rips-open | cech | ambient-cech | dowker | witness");
    ph->add_option("-d,--max-dim", ph_req.max_dim, "top homology dimension reported (complex built one higher)");
    ph->add_option("-f,--field", ph_field, "prime field characteristic");
    ph->add_option("--metric", ph_metric, "point-cloud metric: euclidean | l1 | linf | circle");
    ph->add_option("--circumference", ph_circ, "circle metric circumference");
    ph->add_option("--landmarks", ph_req.landmarks, "comma-separated landmark indices (matrix inputs)");
    ph->add_option("--witnesses", ph_req.witnesses, "comma-separated witness indices (matrix inputs)");
    ph->add_flag("--vertex-birth-minus-inf", ph_req.vertex_birth_minus_inf,
                 "place vertices at -inf so H0 classes are born at -inf");
    ph->add_option("-o,--output", ph_out, "output file ('-' for stdout)");
    ph->add_flag("--json", ph_json, "write the JSON mirror instead of TSV");
    std::string ph_complex_out;
    ph->add_option("--export-complex", ph_complex_out,
                   "also write the filtered complex ('dim v0 ... vk value' lines)");

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a single complex at a scale");
    std::string bt_input, bt_metric = "euclidean";
    ComplexRequest bt_req;
    int bt_field = 2;
    double bt_scale = 0.0, bt_circ = 1.0;
    bool bt_strict = false, bt_json = false;
    betti_cmd->add_option("-i,--input", bt_input, "matrix, dowker, or CSV point-cloud file")->required();
    betti_cmd->add_option("-k,--kind", bt_req.kind, "complex kind (as in ph)");
    betti_cmd->add_option("-a,--scale", bt_scale, "filtration scale")->required();
    betti_cmd->add_flag("--strict", bt_strict, "use the open complex (value < a)");
    betti_cmd->add_option("-d,--max-dim", bt_req.max_dim, "top dimension");
    betti_cmd->add_option("-f,--field", bt_field, "prime field characteristic");
    betti_cmd->add_option("--metric", bt_metric, "point-cloud metric");
    betti_cmd->add_option("--circumference", bt_circ, "circle metric circumference");
    betti_cmd->add_option("--landmarks", bt_req.landmarks, "landmark indices");
    betti_cmd->add_option("--witnesses", bt_req.witnesses, "witness indices");
    betti_cmd->add_flag("--json", bt_json, "JSON output");

    // dist
    auto* dist = app.add_subcommand("dist", "distances between diagrams, subsets, and spaces");
    std::string dist_kind, dist_a, dist_b, dist_corr, dist_l, dist_lp, dist_input;
    int dist_dim = 0;
    double dist_cap = 1e7;
    bool dist_cert = false, dist_json = false;
    dist->add_option("kind", dist_kind, "bottleneck | hausdorff | gh-exact | gh-upper")->required();
    dist->add_option("A", dist_a, "first input file (diagram or matrix)");
    dist->add_option("B", dist_b, "second input file");
    dist->add_option("--dim", dist_dim, "diagram dimension for bottleneck");
    dist->add_option("--correspondence", dist_corr, "correspondence file for gh-upper");
    dist->add_option("--input", dist_input, "ambient matrix for hausdorff");
    dist->add_option("--L", dist_l, "first index set for hausdorff");
    dist->add_option("--Lp", dist_lp, "second index set for hausdorff");
    dist->add_option("--cap", dist_cap, "enumeration cap for gh-exact");
    dist->add_flag("--certificate", dist_cert, "also print the matching certificate (bottleneck)");
    dist->add_flag("--json", dist_json, "JSON output");

    // interleave
    auto* il = app.add_subcommand("interleave", "check the interleaving induced by a correspondence");
    std::string il_x, il_y, il_corr, il_kind = "rips";
    double il_eps = -1.0;
    int il_max_dim = 1, il_field = 2;
    il->add_option("-x,--first", il_x, "first dissimilarity matrix file")->required();
    il->add_option("-y,--second", il_y, "second dissimilarity matrix file")->required();
    il->add_option("-c,--correspondence", il_corr, "correspondence file, lines 'i j'")->required();
    il->add_option("--eps", il_eps, "interleaving degree (default: the correspondence's distortion)");
    il->add_option("--kind", il_kind, "complex kind: rips | cech");
    il->add_option("-d,--max-dim", il_max_dim, "top homology dimension checked");
    il->add_option("-f,--field", il_field, "prime field characteristic");

    // verify
    auto* verify = app.add_subcommand("verify", "machine-check a theorem on seeded instances");
    std::string v_name;
    BatchOptions v_opts;
    bool v_json = false;
    verify->add_option("theorem", v_name,
                       "dowker | rips-stability | cech-stability | ambient-cech | witness-stability | "
                       "witness-counterexample | pathology | path-metric | hyperbolic | interleaving | "
                       "witness-densify")
        ->required();
    verify->add_option("--trials", v_opts.trials, "number of random trials");
    verify->add_option("--seed", v_opts.seed, "PRNG seed");
    verify->add_option("--size", v_opts.size, "instance size (theorem-specific)");
    verify->add_option("--max-dim", v_opts.max_dim, "top homology dimension");
    verify->add_option("--field", v_opts.field_p, "prime field characteristic");
    verify->add_option("--delta", v_opts.delta, "witness-counterexample perturbation");
    verify->add_option("--n", v_opts.n, "path-metric sample size");
    verify->add_flag("--json", v_json, "JSON report array");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return run_gen(gen_name, gen_n, gen_big_n, gen_circ, gen_delta, gen_h, gen_preset, gen_out,
                                 gen_prefix);

        if (*ph) {
            auto input = load_input(ph_input, ph_metric, ph_circ);
            ComplexRequest req = ph_req;
            req.max_dim += 1;  // build one dimension above the reported range
            FilteredComplex K = build_complex(input, req);
            if (!ph_complex_out.empty()) {
                std::ostringstream ss;
                save_complex(ss, K);
                write_or_print(ph_complex_out, ss.str());
            }
            auto dgm = compute_persistence(K, ph_field).restrict_max_dim(ph_req.max_dim);
            if (ph_json) {
                json out{{"schema", 1}, {"kind", ph_req.kind}, {"field", ph_field},
                         {"diagram", json::parse(diagram_to_json(dgm))}};
                write_or_print(ph_out, out.dump(2) + "\n");
            } else {
                std::ostringstream ss;
                save_diagram_tsv(ss, dgm);
                write_or_print(ph_out, ss.str());
            }
            return kExitOk;
        }

        if (*betti_cmd) {
            auto input = load_input(bt_input, bt_metric, bt_circ);
            ComplexRequest req = bt_req;
            req.max_dim += 1;  // the top betti number needs one dimension of cofaces
            FilteredComplex K = build_complex(input, req);
            auto betti = betti_at(K, bt_scale, bt_strict, bt_field);
            betti.resize(bt_req.max_dim + 1);
            if (bt_json) {
                json out{{"schema", 1}, {"scale", bt_scale}, {"strict", bt_strict}, {"betti", betti}};
                std::cout << out.dump(2) << "\n";
            } else {
                for (std::size_t k = 0; k < betti.size(); ++k)
                    std::cout << (k ? " " : "") << betti[k];
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (*dist) {
            double value = 0.0;
            json extra;
            if (dist_kind == "bottleneck") {
                auto d1 = load_diagram_file(dist_a);
                auto d2 = load_diagram_file(dist_b);
                auto res = bottleneck_distance(d1, d2, dist_dim);
                value = res.value;
                if (dist_cert) {
                    json pairs = json::array();
                    for (const auto& e : res.certificate.pairs) pairs.push_back({e.left, e.right});
                    extra["certificate"] = {{"cost", res.certificate.cost}, {"pairs", pairs}};
                }
            } else if (dist_kind == "hausdorff") {
                auto m = load_dissimilarity_file(dist_input);
                value = hausdorff_distance(parse_index_list(dist_l), parse_index_list(dist_lp), m);
            } else if (dist_kind == "gh-exact") {
                value = gh_exact(load_dissimilarity_file(dist_a), load_dissimilarity_file(dist_b), dist_cap);
            } else if (dist_kind == "gh-upper") {
                auto a = load_dissimilarity_file(dist_a);
                auto b = load_dissimilarity_file(dist_b);
                std::ifstream cf(dist_corr);
                if (!cf) throw ParseError("cannot open file: " + dist_corr);
                value = gh_upper_bound(a, b, load_correspondence(cf, a.n, b.n));
            } else {
                throw ValidationError("unknown distance kind: " + dist_kind);
            }
            if (dist_json) {
                json out{{"schema", 1}, {"kind", dist_kind}, {"value", value}};
                for (auto& [k, v] : extra.items()) out[k] = v;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << format_double(value) << "\n";
                if (!extra.empty()) std::cout << extra.dump(2) << "\n";
            }
            return kExitOk;
        }

        if (*il) {
            auto dx = load_dissimilarity_file(il_x);
            auto dy = load_dissimilarity_file(il_y);
            std::ifstream cf(il_corr);
            if (!cf) throw ParseError("cannot open file: " + il_corr);
            auto c = load_correspondence(cf, dx.n, dy.n);
            double eps = il_eps >= 0 ? il_eps : distortion(c, dx, dy);
            FilteredComplex S, T;
            if (il_kind == "rips") {
                S = rips_filtration(dx, il_max_dim + 1);
                T = rips_filtration(dy, il_max_dim + 1);
            } else if (il_kind == "cech") {
                S = cech_intrinsic_filtration(dx, il_max_dim + 1);
                T = cech_intrinsic_filtration(dy, il_max_dim + 1);
            } else {
                throw ValidationError("unknown complex kind for interleave: " + il_kind);
            }
            auto v = verify_interleaving(c, S, T, eps, il_field, il_max_dim);
            json out{{"schema", 1}, {"eps", eps}, {"applicable", v.applicable}, {"verified", v.verified}};
            if (!v.reason.empty()) out["reason"] = v.reason;
            if (v.failure_value && v.failure_dim)
                out["failure"] = {{"a", *v.failure_value}, {"dim", *v.failure_dim}};
            std::cout << out.dump(2) << "\n";
            return v.applicable && v.verified ? kExitOk : kExitVerificationFailure;
        }

        if (*verify) {
            auto reports = run_verification(v_name, v_opts);
            bool all_passed = true;
            json arr = json::array();
            for (const auto& r : reports) {
                all_passed = all_passed && r.passed;
                if (v_json) {
                    arr.push_back({{"name", r.name},
                                   {"lhs", r.lhs},
                                   {"rhs", r.rhs},
                                   {"passed", r.passed},
                                   {"seed", r.seed},
                                   {"details", r.details}});
                } else {
                    std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.name << "  lhs=" << format_double(r.lhs)
                              << " rhs=" << format_double(r.rhs) << "\n";
                }
            }
            if (v_json) {
                json out{{"schema", 1}, {"theorem", v_name}, {"seed", v_opts.seed}, {"passed", all_passed},
                         {"reports", arr}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << (all_passed ? "ALL PASS" : "FAILURES") << " (" << reports.size() << " reports)\n";
            }
            return all_passed ? kExitOk : kExitVerificationFailure;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
