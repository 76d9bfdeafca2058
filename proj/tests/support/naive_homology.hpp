#pragma once

// Independent homology oracle for the test suites: dense Gaussian elimination
// over Z/p on explicitly assembled boundary matrices. Deliberately separate
// from the optimized reduction in the library; shares nothing with it beyond
// the Simplex input type.

#include <vector>

#include "geomplex/filtered_complex.hpp"
#include "geomplex/persistence.hpp"

namespace oracle {

// Betti numbers of a single complex given as a simplex list, for dimensions
// 0..max_dim (valid up to the dimension the list actually carries).
std::vector<int> betti(const std::vector<geomplex::Simplex>& simplices, int max_dim, int field_p);

// Rank of the inclusion-induced map H_dim(K_a) -> H_dim(K_b) for two nested
// simplex lists (every simplex of `small` must appear in `large`).
int inclusion_rank(const std::vector<geomplex::Simplex>& small_complex,
                   const std::vector<geomplex::Simplex>& large_complex, int dim, int field_p);

// Full persistence diagram from persistent Betti ranks over all pairs of
// critical values (inclusion-exclusion of inclusion ranks).
geomplex::PersistenceDiagram diagram(const geomplex::FilteredComplex& K, int field_p);

}  // namespace oracle
