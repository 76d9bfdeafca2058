#pragma once

#include <span>

#include "geomplex/dissimilarity.hpp"
#include "geomplex/filtered_complex.hpp"

namespace geomplex {

// Vietoris-Rips filtration: a simplex enters at its diameter, the maximum of
// d over all (ordered) vertex pairs, so a vertex enters at d(v,v) (zero for
// metric inputs). All simplices up to max_dim are included.
FilteredComplex rips_filtration(const DissimilarityMatrix& dx, int max_dim);

// The simplices of Rips(X, a) (diameter <= a) or Rips(X, a^-) (diameter < a
// when strict), built directly without the full filtration.
std::vector<Simplex> rips_complex_at(const DissimilarityMatrix& dx, double a, bool strict, int max_dim);

// Intrinsic Cech filtration: a simplex enters at the smallest a admitting an
// a-centre in X, i.e. min over candidate centres of the max distance to the
// simplex vertices. Coincides with the Dowker filtration of d_X with W = X.
FilteredComplex cech_intrinsic_filtration(const DissimilarityMatrix& dx, int max_dim);

// Dowker filtration of lambda : L x W -> R on vertex set L: a simplex enters
// at min over witnesses w of max over its landmarks l of lambda(l, w).
FilteredComplex dowker_filtration(const CrossDissimilarity& lam, int max_dim);

// Ambient Cech filtration of landmark/witness subsets of a common space;
// equals the Dowker filtration of the restricted matrix d|_{L x W}. Vertices
// of the result are indexed 0..|L|-1 in the order given.
FilteredComplex ambient_cech_filtration(std::span<const int> L, std::span<const int> W,
                                        const DissimilarityMatrix& ambient, int max_dim);

// Witness filtration. w is an a-witness for tau iff
//   lambda(l,w) <= lambda(l',w) + a  for all l in tau, l' in L minus tau,
// and sigma enters the complex at
//   f(sigma) = max over nonempty tau subset of sigma of wit(tau),
//   wit(tau)  = min over w of [ max_{l in tau} lambda(l,w)
//                               - min_{l' not in tau} lambda(l',w) ],
// with wit(tau) = -infinity when tau = L (the condition is vacuous). Values
// may be negative; the complex has nontrivial behaviour for a < 0.
FilteredComplex witness_filtration(const CrossDissimilarity& lam, int max_dim);

}  // namespace geomplex
