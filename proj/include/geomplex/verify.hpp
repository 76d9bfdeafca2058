#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "geomplex/dissimilarity.hpp"
#include "geomplex/generators.hpp"

namespace geomplex {

// Outcome of one machine check of a theorem instance. For inequality checks
// passed <=> lhs <= rhs + kAbsTol; duality and structural checks demand
// exact equality and report any mismatch count through lhs/rhs = 0.
struct VerificationReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool passed = false;
    std::uint64_t seed = 0;
    nlohmann::json details = nlohmann::json::object();
};

// --- single-instance checks -------------------------------------------------

// d_b(dgm Rips(X), dgm Rips(Y)) <= 2 d_GH(X, Y), bottleneck maximized over
// dimensions 0..max_dim (complexes built one dimension higher).
VerificationReport verify_rips_stability(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, int max_dim,
                                         int field_p);
VerificationReport verify_cech_stability(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, int max_dim,
                                         int field_p);

// d_b(dgm Cech(L,W), dgm Cech(L',W)) <= d_H(L, L').
VerificationReport verify_ambient_cech_stability(std::span<const int> L, std::span<const int> Lp,
                                                 std::span<const int> W, const DissimilarityMatrix& ambient,
                                                 int max_dim, int field_p);

// d_b(dgm Wit(L,W), dgm Wit(L,W')) <= 2 dis(C) for a witness correspondence.
VerificationReport verify_witness_stability(const CrossDissimilarity& lam_w, const CrossDissimilarity& lam_wp,
                                            const Correspondence& c, int max_dim, int field_p);

// dgm Dow(lambda) equals dgm Dow(lambda^T) exactly in dims 0..max_dim.
VerificationReport verify_dowker_duality(const CrossDissimilarity& lam, int max_dim, int field_p);

// The landmark-perturbation counterexample: confirms the two witness
// complexes against their explicit simplex lists and reports d_b(dgm H_0)
// against d_H(L, L') = delta.
VerificationReport witness_counterexample_report(double delta, int field_p);

// Homology-rank growth under refinement. Names: "parallel-segments" (Rips
// beta_1 strictly increasing at a=1, intrinsic Cech beta_1 constant),
// "open-rips" (open Rips at a=1), "two-rectangles" (a=1.5).
VerificationReport verify_pathology_growth(const std::string& name, const std::vector<int>& sizes, double a,
                                           int field_p);

// Theorem transfer for a geodesic circle sample: every H_1 point has
// birth <= 2*pi/n or persistence <= 2*pi/n; exactly one significant class;
// no H_1 class is born after the birth scale.
VerificationReport verify_path_metric_theorem(int n, int field_p);

// Theorem transfer for subdivided metric trees (0-hyperbolic): every H_2
// point has birth <= h or persistence <= h.
VerificationReport verify_hyperbolic_theorem(const TreeSpec& spec, double h, int field_p);
VerificationReport verify_hyperbolic_theorem(const std::string& tree_name, double h, int field_p);

// --- batch drivers ----------------------------------------------------------

struct BatchOptions {
    int trials = 50;
    std::uint64_t seed = 7;
    int size = 0;       // 0 = per-theorem default
    int max_dim = -1;   // -1 = per-theorem default
    int field_p = 2;
    double delta = 0.1; // witness counterexample parameter
    int n = 100;        // path-metric sample size
};

// Named theorem batches driving the single-instance checks over seeded
// random inputs. Known names: dowker, rips-stability, cech-stability,
// ambient-cech, witness-stability, witness-counterexample, pathology,
// path-metric, hyperbolic, interleaving, witness-densify.
std::vector<VerificationReport> run_verification(const std::string& theorem, const BatchOptions& opts);

std::vector<std::string> verification_names();

}  // namespace geomplex
