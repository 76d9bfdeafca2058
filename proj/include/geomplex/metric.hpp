#pragma once

#include <span>

#include "geomplex/dissimilarity.hpp"

namespace geomplex {

// Hausdorff distance between two nonempty index subsets of a common ambient
// space: max of the two directed sup-inf distances.
double hausdorff_distance(std::span<const int> left, std::span<const int> right, const DissimilarityMatrix& ambient);

// dis(C) = max |d_X(x,x') - d_Y(y,y')| over pairs of pairs of C.
double distortion(const Correspondence& c, const DissimilarityMatrix& dx, const DissimilarityMatrix& dy);

// Witness-set distortion for a fixed landmark set: for C : W => W',
// max over landmarks l and (w,w') in C of |lambda(l,w) - lambda'(l,w')|.
double witness_distortion(const Correspondence& c, const CrossDissimilarity& lam, const CrossDissimilarity& lam_prime);

// dis(C,D) for a pair of correspondences between the landmark and witness
// sides of two cross-dissimilarities.
double pair_distortion(const Correspondence& on_landmarks, const Correspondence& on_witnesses,
                       const CrossDissimilarity& lam, const CrossDissimilarity& lam_prime);

// Exact Gromov-Hausdorff distance by enumerating map pairs (f : X -> Y,
// g : Y -> X) and minimizing dis(graph f cup transpose graph g). Every
// correspondence contains such a union and distortion is monotone under
// subsets, so the minimum over map pairs equals the minimum over all
// correspondences. Throws SizeCapError when n^m * m^n exceeds the cap.
double gh_exact(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, double enumeration_cap = 1e7);

// Half the distortion of a given correspondence; an upper bound for gh_exact.
double gh_upper_bound(const DissimilarityMatrix& dx, const DissimilarityMatrix& dy, const Correspondence& c);

}  // namespace geomplex
